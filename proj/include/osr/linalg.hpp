#pragma once

#include <optional>
#include <vector>

#include "osr/numeric.hpp"

namespace osr {

// Dense matrices. Everything here is desk scale (a few hundred entries), so
// simplicity and exactness win over sparsity tricks.
struct IntMat {
  int rows = 0, cols = 0;
  IntVec a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

struct RatMat {
  int rows = 0, cols = 0;
  RatVec a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

RatMat to_rat(const IntMat& m);
IntMat transpose(const IntMat& m);
IntMat mul(const IntMat& x, const IntMat& y);
bool is_symmetric(const IntMat& m);

// A canonical basis of a rational subspace: rows in reduced echelon form,
// each scaled to integer entries with content 1 and first nonzero positive.
// Two subspaces are equal iff their Basis values compare equal.
using Basis = std::vector<IntVec>;

// Reduced row echelon form in place; returns the rank.
int rref_inplace(RatMat& m);

// Canonical representation of the row space spanned by `rows` (vectors of
// equal length).
Basis canonical_rowspace(const std::vector<RatVec>& rows);
Basis canonical_rowspace_int(const std::vector<IntVec>& rows);

// Canonical basis of the right null space {u : m u = 0}.
Basis kernel_basis(const RatMat& m);
Basis kernel_basis(const IntMat& m);

int rank_of_int_rows(const std::vector<IntVec>& rows, int cols);

// Fraction-free determinant (Bareiss) of a square integer matrix.
Int det_bareiss(IntMat m);

// Determinants of all leading principal submatrices, computed independently.
IntVec leading_principal_minors(const IntMat& m);

// Exact inertia of a symmetric rational matrix by congruence diagonalization
// (symmetric pivoting; zero diagonal with nonzero row handled by the
// hyperbolic-pair transform, which contributes one positive and one negative
// eigenvalue). If neg > 0, negative_witness holds a vector v with v^t M v < 0.
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
  std::optional<RatVec> negative_witness;
};

Inertia symmetric_inertia(const RatMat& m);
Inertia symmetric_inertia(const IntMat& m);

// v^t M v for square M.
Rat quadratic_form(const IntMat& m, const RatVec& v);

}  // namespace osr
