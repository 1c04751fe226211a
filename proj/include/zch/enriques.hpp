// Fiber-component bookkeeping for elliptic fibrations on Enriques surfaces:
// Kodaira component counts, Shioda-Tate rank arithmetic, K3-cover fiber
// doubling, and the complement + isotropic-class pipeline in E8(-1) + U.
#ifndef ZCH_ENRIQUES_HPP
#define ZCH_ENRIQUES_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zch/lattice.hpp"

namespace zch {

struct KodairaType {
  enum class Kind { In, II, III, IV, IStarN, IIStar, IIIStar, IVStar };
  Kind kind = Kind::In;
  int n = 1;  // index for In (n >= 1) and I*n (n >= 0); ignored otherwise

  static KodairaType parse(const std::string& tag);
  std::string to_string() const;
  bool operator==(const KodairaType&) const = default;
};

int component_count(const KodairaType& t);
int euler_number(const KodairaType& t);

// An Enriques elliptic fibration has exactly two half-pencils; each is
// either irreducible or a reducible fiber of type I_k.
struct HalfPencil {
  bool reducible = false;
  int k = 0;  // I_k index when reducible

  static HalfPencil parse(const std::string& tag);
  std::string to_string() const;
  bool operator==(const HalfPencil&) const = default;
};

struct FibrationData {
  std::vector<KodairaType> fibers;
  std::array<HalfPencil, 2> half_pencils;
};

FibrationData fibration_from_json(const std::string& text);
std::string fibration_to_json(const FibrationData& f);
FibrationData load_fibration(const std::string& path);

// Maximum component count over fibers and reducible half-pencils (>= 1).
int max_fiber_components(const FibrationData& f);

// t = sum of (components - 1) over fibers and reducible half-pencils; this
// is rank(T_S) - 2 for the associated rational elliptic surface.
int trivial_lattice_excess(const FibrationData& f);

// 8 - t from the Shioda-Tate formula at rho = 10.
int mordell_weil_rank_rational(const FibrationData& f);

// Fibers induced on the K3 cover: every ordinary fiber doubles; a reducible
// I_k half-pencil induces a single I_{2k}; irreducible half-pencils add
// nothing.
std::vector<KodairaType> k3_cover_fibers(const FibrationData& f);

// Lower bound 10 + t for the Picard number of Jac of the K3 cover.
int picard_lower_bound_cover(const FibrationData& f);

// Sum of Euler numbers over fibers and reducible half-pencils; equals 12
// for relatively minimal rational elliptic fibration data.
int euler_sum(const FibrationData& f);

// First pair (in input order) of (-2)-classes meeting with product exactly
// one. Every input must have self-intersection -2.
std::optional<std::pair<std::size_t, std::size_t>> meeting_minus2_pair(
    const std::vector<IntVec>& curves, const IntersectionForm& form);

struct ProofPipelineResult {
  std::vector<IntVec> complement_basis;
  Signature complement_signature;
  std::optional<IntVec> isotropic;  // primitive with square zero, if found
};

// Orthogonal complement of two meeting (-2)-classes in E8(-1) + U, its
// signature (always (1,7,0)), and a bounded isotropic-primitive search.
ProofPipelineResult proof_pipeline_complement_isotropic(const IntVec& c1,
                                                        const IntVec& c2,
                                                        long bound = 4);

}  // namespace zch

#endif  // ZCH_ENRIQUES_HPP
