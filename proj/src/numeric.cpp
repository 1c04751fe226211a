#include "zch/numeric.hpp"

#include "zch/errors.hpp"

namespace zch {

Rat parse_rational(const std::string& text) {
  auto ok_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!ok_int(text))
      throw ParseError("not an exact integer or rational: '" + text + "'");
    return Rat(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!ok_int(num) || !ok_int(den))
    throw ParseError("not an exact rational: '" + text + "'");
  Int d(den);
  if (d == 0) throw ParseError("zero denominator: '" + text + "'");
  return make_rat(Int(num), d);
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Int& n) { return n.get_str(); }

RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

RatMat to_rational(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

int sign(const Rat& q) { return sgn(q); }
int sign(const Int& n) { return sgn(n); }

}  // namespace zch
