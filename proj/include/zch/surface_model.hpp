// A surface, for our purposes: an intersection form with Hodge-index
// signature, a declared list of negative curves, and an ample class.
#ifndef ZCH_SURFACE_MODEL_HPP
#define ZCH_SURFACE_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "zch/lattice.hpp"

namespace zch {

struct CurveClass {
  std::string name;
  IntVec coords;
};

struct SurfaceModel {
  std::string name;
  IntersectionForm form;
  std::vector<CurveClass> curves;
  IntVec ample;
  // Whether the declared curve list is known to exhaust the negative curves
  // of the surface being modelled. All nef/big semantics are relative to the
  // declared list either way.
  bool curve_list_complete = false;
  std::string notes;

  std::optional<Eigen::Index> curve_index(const std::string& curve_name) const;
  Int curve_self_intersection(Eigen::Index i) const;
};

// Every violated invariant, with offending indices, in a deterministic order.
std::vector<std::string> validate(const SurfaceModel& model);

// Smooth cubic surface: rank-7 blow-up lattice, the 27 lines, ample -K.
SurfaceModel cubic_surface();

// Minimal numerical model of a degree-d surface containing two meeting
// lines (d >= 3). Curve list is not claimed complete.
SurfaceModel surface_with_meeting_lines(long d);

// Quartic K3 with a plane section splitting as conic + two meeting lines.
SurfaceModel quartic_Y4();

// Num(X) of an Enriques surface: E8(-1) + U, signature (1,9). The E8 block
// is taken negative definite.
IntersectionForm enriques_lattice();

SurfaceModel load_model(const std::string& path);
void save_model(const SurfaceModel& model, const std::string& path);

// JSON text form used by load/save (and the CLI).
std::string model_to_json(const SurfaceModel& model);
SurfaceModel model_from_json(const std::string& text);

bool models_equal(const SurfaceModel& a, const SurfaceModel& b);

// Builtin catalog, in stable order.
std::vector<std::string> catalog_names();
SurfaceModel catalog_model(const std::string& name);

}  // namespace zch

#endif  // ZCH_SURFACE_MODEL_HPP
