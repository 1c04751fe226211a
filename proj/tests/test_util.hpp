#ifndef ZCH_TEST_UTIL_HPP
#define ZCH_TEST_UTIL_HPP

#include "zch/numeric.hpp"

namespace zch::testutil {

inline bool vec_eq(const IntVec& a, const IntVec& b) {
  return a.size() == b.size() && a.cwiseEqual(b).all();
}

inline bool vec_eq(const RatVec& a, const RatVec& b) {
  return a.size() == b.size() && a.cwiseEqual(b).all();
}

inline long max_abs(const IntVec& v) {
  Int best = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    best = std::max(best, Int(abs(v[i])));
  return best.get_si();
}

}  // namespace zch::testutil

#endif
