#include "osr/numeric.hpp"

#include <cctype>

namespace osr {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational literal");
  std::string t = s;
  // mpq set_str accepts "p/q"; validate shape first for clearer errors.
  size_t slash = t.find('/');
  auto is_int = [](const std::string& u) {
    if (u.empty()) return false;
    size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(t)) fail(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  } else {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
      fail(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  }
  Rat r;
  if (r.set_str(t, 10) != 0)
    fail(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  if (sgn(Rat(r.get_den())) == 0)
    fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

IntVec primitive(const RatVec& v) {
  Int den = 1;
  for (const Rat& x : v) den = lcm(den, x.get_den());
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat t = v[i] * Rat(den);
    w[i] = t.get_num();  // denominator is 1 after scaling
  }
  return primitive(w);
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  IntVec w = v;
  if (g != 0) {
    int lead = 0;
    for (const Int& x : w) {
      if (x != 0) {
        lead = sgn(x);
        break;
      }
    }
    if (lead < 0) g = -g;
    for (Int& x : w) x /= g;
  }
  return w;
}

}  // namespace osr
