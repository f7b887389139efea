#include "osr/linalg.hpp"

#include <algorithm>

namespace osr {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

IntMat transpose(const IntMat& m) {
  IntMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

IntMat mul(const IntMat& x, const IntMat& y) {
  IntMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

bool is_symmetric(const IntMat& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

int rref_inplace(RatMat& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (sgn(m.at(r, col)) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    Rat inv = m.at(rank, col);
    for (int c = col; c < m.cols; ++c) m.at(rank, c) /= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      Rat f = m.at(r, col);
      if (sgn(f) == 0) continue;
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

Basis canonical_rowspace(const std::vector<RatVec>& rows) {
  if (rows.empty()) return {};
  int cols = static_cast<int>(rows[0].size());
  RatMat m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  int rank = rref_inplace(m);
  Basis out;
  out.reserve(rank);
  for (int i = 0; i < rank; ++i) {
    RatVec row(cols);
    for (int j = 0; j < cols; ++j) row[j] = m.at(i, j);
    out.push_back(primitive(row));
  }
  return out;
}

Basis canonical_rowspace_int(const std::vector<IntVec>& rows) {
  std::vector<RatVec> r;
  r.reserve(rows.size());
  for (const IntVec& v : rows) {
    RatVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = Rat(v[i]);
    r.push_back(std::move(w));
  }
  return canonical_rowspace(r);
}

Basis kernel_basis(const RatMat& m) {
  RatMat e = m;
  rref_inplace(e);
  // Identify pivot columns.
  std::vector<int> pivot_of_col(m.cols, -1);
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    if (sgn(e.at(r, c)) != 0) {
      pivot_of_col[c] = r;
      ++r;
    }
  }
  std::vector<RatVec> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    RatVec v(m.cols, Rat(0));
    v[c] = 1;
    for (int c2 = 0; c2 < c; ++c2)
      if (pivot_of_col[c2] >= 0) v[c2] = -e.at(pivot_of_col[c2], c);
    basis.push_back(std::move(v));
  }
  return canonical_rowspace(basis);
}

Basis kernel_basis(const IntMat& m) { return kernel_basis(to_rat(m)); }

int rank_of_int_rows(const std::vector<IntVec>& rows, int cols) {
  if (rows.empty()) return 0;
  RatMat m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(rows[i][j]);
  return rref_inplace(m);
}

Int det_bareiss(IntMat m) {
  if (m.rows != m.cols) fail(ErrorCode::BadMatrix, "determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = t / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

IntVec leading_principal_minors(const IntMat& m) {
  IntVec out;
  out.reserve(m.rows);
  for (int k = 1; k <= m.rows; ++k) {
    IntMat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
    out.push_back(det_bareiss(std::move(sub)));
  }
  return out;
}

Inertia symmetric_inertia(const RatMat& m) {
  int n = m.rows;
  RatMat w = m;
  // T rows track the congruence: (row i of T) m (row i of T)^t = diagonal i.
  RatMat t(n, n);
  for (int i = 0; i < n; ++i) t.at(i, i) = 1;

  auto swap_sym = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(w.at(i, c), w.at(j, c));
    for (int c = 0; c < n; ++c) std::swap(w.at(c, i), w.at(c, j));
    for (int c = 0; c < n; ++c) std::swap(t.at(i, c), t.at(j, c));
  };

  Inertia res;
  int step = 0;
  while (step < n) {
    int piv = -1;
    for (int i = step; i < n; ++i)
      if (sgn(w.at(i, i)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      int oi = -1, oj = -1;
      for (int i = step; i < n && oi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (sgn(w.at(i, j)) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi < 0) {
        res.zero += n - step;
        break;
      }
      swap_sym(step, oi);
      if (oj == step) oj = oi;  // tracked through the swap
      // row/col step += row/col oj turns the zero diagonal into 2*w(step,oj)
      for (int c = 0; c < n; ++c) w.at(step, c) += w.at(oj, c);
      for (int c = 0; c < n; ++c) w.at(c, step) += w.at(c, oj);
      for (int c = 0; c < n; ++c) t.at(step, c) += t.at(oj, c);
      continue;
    }
    swap_sym(step, piv);
    Rat d = w.at(step, step);
    if (sgn(d) > 0)
      ++res.pos;
    else {
      ++res.neg;
      if (!res.negative_witness) {
        RatVec v(n);
        for (int c = 0; c < n; ++c) v[c] = t.at(step, c);
        res.negative_witness = std::move(v);
      }
    }
    for (int i = step + 1; i < n; ++i) {
      Rat f = w.at(i, step) / d;
      if (sgn(f) == 0) continue;
      for (int c = 0; c < n; ++c) w.at(i, c) -= f * w.at(step, c);
      for (int c = 0; c < n; ++c) w.at(c, i) -= f * w.at(c, step);
      for (int c = 0; c < n; ++c) t.at(i, c) -= f * t.at(step, c);
    }
    ++step;
  }
  return res;
}

Inertia symmetric_inertia(const IntMat& m) { return symmetric_inertia(to_rat(m)); }

Rat quadratic_form(const IntMat& m, const RatVec& v) {
  Rat acc = 0;
  for (int i = 0; i < m.rows; ++i) {
    if (sgn(v[i]) == 0) continue;
    Rat row = 0;
    for (int j = 0; j < m.cols; ++j) row += Rat(m.at(i, j)) * v[j];
    acc += v[i] * row;
  }
  return acc;
}

}  // namespace osr
