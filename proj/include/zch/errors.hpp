#ifndef ZCH_ERRORS_HPP
#define ZCH_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace zch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct PreconditionViolation : Error {
  using Error::Error;
};

// Raised when the Zariski fixpoint (or the subset oracle) detects that the
// input class cannot be pseudo-effective: the accumulating support loses
// negative-definiteness or a solved coefficient comes out negative.
struct NotPseudoEffective : Error {
  explicit NotPseudoEffective(const std::string& what,
                              std::vector<std::string> offending = {})
      : Error(what), offending_curves(std::move(offending)) {}
  std::vector<std::string> offending_curves;
};

struct NotBig : Error {
  using Error::Error;
};

struct OnWall : Error {
  explicit OnWall(const std::string& curve)
      : Error("class lies on the wall of curve '" + curve + "'"),
        curve_name(curve) {}
  std::string curve_name;
};

struct PairNotNegativeDefinite : Error {
  using Error::Error;
};

struct PairDisjoint : Error {
  using Error::Error;
};

struct InconsistentFibration : Error {
  using Error::Error;
};

struct IsotropicNotFoundInBound : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// Two distinct Zariski splits accepted by the subset oracle; impossible by
// uniqueness, so it signals an arithmetic bug.
struct InternalInvariantViolation : Error {
  using Error::Error;
};

}  // namespace zch

#endif  // ZCH_ERRORS_HPP
