// Chamber bookkeeping on the big cone: Weyl sign vectors, Zariski chamber
// labels, the numerically-determined criterion, the two-divisor witness
// construction, and a seeded sampling census.
#ifndef ZCH_CHAMBERS_HPP
#define ZCH_CHAMBERS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zch/zariski.hpp"

namespace zch {

// Strict sign of D.C for every declared curve, in model curve order. A fixed
// strict sign region is convex, hence connected, so the sign vector pins
// down the simple Weyl chamber exactly.
struct WeylSignature {
  std::vector<std::pair<std::string, int>> signs;  // +1 / -1

  std::string key() const;
  bool operator==(const WeylSignature&) const = default;
};

struct ChamberLabel {
  std::vector<std::string> support;
  // Curves outside the support that still pair to zero with the positive
  // part. Reported raw; no interiority claim attached.
  std::vector<std::string> boundary_null;

  bool operator==(const ChamberLabel&) const = default;
};

WeylSignature weyl_signature(const SurfaceModel& model, const RatVec& divisor);
ChamberLabel chamber_label(const SurfaceModel& model, const RatVec& divisor);

struct CriterionVerdict {
  bool determined = true;
  // Set when the model does not claim a complete curve list; the verdict is
  // then only about the declared curves.
  bool caveat_incomplete = false;
  std::vector<std::pair<std::string, std::string>> witnesses;
};

// For every meeting pair, tests (C1.C2)^2 >= C1^2 * C2^2 in exact integers.
CriterionVerdict numerically_determined(const SurfaceModel& model);

// True iff every negative-definite pair of declared curves is diagonal.
bool pairwise_disjoint_support_property(const SurfaceModel& model);

struct Counterexample {
  IntVec t1;  // nef class orthogonal to both curves
  IntVec d1;
  IntVec d2;
  Int d2_dot_c1;  // = a*c
  Int d2_dot_c2;  // = c^2 - 2ab
  ChamberLabel label_d1;
  ChamberLabel label_d2;
  WeylSignature signature_d1;
  WeylSignature signature_d2;
  std::vector<std::string> failures;  // empty when all identities verified
};

// Builds the pair of big divisors with equal Zariski support but distinct
// Weyl signatures from a witnessing pair of meeting curves whose Gram is
// negative definite.
Counterexample construct_counterexample(const SurfaceModel& model,
                                        const std::string& curve1,
                                        const std::string& curve2);

struct CensusRecord {
  RatVec divisor;
  WeylSignature signature;
  ChamberLabel label;
  bool injected = false;
};

struct Census {
  std::vector<CensusRecord> records;
  long skipped_not_big = 0;
  long skipped_on_wall = 0;
  // support key -> (signature key -> count)
  std::map<std::vector<std::string>, std::map<std::string, long>> summary;
};

// Deterministic seeded sampling of integer classes around the ample ray,
// filtered to big and off-wall. Extra divisors are evaluated first and
// marked as injected.
Census sample_chamber_census(const SurfaceModel& model, long n,
                             std::uint64_t seed,
                             const std::vector<RatVec>& extras = {});

}  // namespace zch

#endif  // ZCH_CHAMBERS_HPP
