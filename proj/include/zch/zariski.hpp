// Zariski decomposition relative to a surface model: the iterative fixpoint
// algorithm, volume/bigness, an independent verifier, and a subset-scan
// oracle used to cross-check the algorithm.
#ifndef ZCH_ZARISKI_HPP
#define ZCH_ZARISKI_HPP

#include <string>
#include <utility>
#include <vector>

#include "zch/surface_model.hpp"

namespace zch {

struct ZariskiSplit {
  RatVec positive;
  // Strictly positive coefficients, in model curve order.
  std::vector<std::pair<std::string, Rat>> negative_coeffs;

  std::vector<std::string> support() const;
  // Class of the negative part as a coordinate vector.
  RatVec negative_part(const SurfaceModel& model) const;
};

bool splits_equal(const ZariskiSplit& a, const ZariskiSplit& b);

// D = P + N via support growth: start from the curves pairing negatively
// with D, solve P.C = 0 on the support, and absorb every curve the candidate
// positive part still pairs negatively with. Throws NotPseudoEffective when
// the support Gram loses definiteness, a coefficient comes out negative, or
// the final positive part has negative square.
ZariskiSplit zariski_decompose(const SurfaceModel& model, const RatVec& divisor);

bool is_big(const SurfaceModel& model, const RatVec& divisor);

// Self-intersection of the positive part; 0 when the class is not big.
Rat volume(const SurfaceModel& model, const RatVec& divisor);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Independent re-check of a claimed split: reconstruction, coefficient
// positivity, (Z1)-(Z3).
VerifyReport verify_split(const SurfaceModel& model, const RatVec& divisor,
                          const ZariskiSplit& split);

// Oracle: scan subsets of the curve list with negative-definite Gram, solve
// the orthogonality system on each, and accept those with non-negative
// coefficients and a nef positive part. Asserts that all accepted splits
// agree after dropping zero coefficients.
ZariskiSplit brute_force_decompose(const SurfaceModel& model,
                                   const RatVec& divisor);

// Exact solve of gram * x = rhs by rational Gaussian elimination; the Gram
// of a negative-definite support is always invertible.
RatVec solve_gram_system(const IntMat& gram, const RatVec& rhs);

}  // namespace zch

#endif  // ZCH_ZARISKI_HPP
