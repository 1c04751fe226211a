#include "zch/surface_model.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zch/errors.hpp"

namespace zch {

using nlohmann::json;

namespace {

bool vec_eq(const IntVec& a, const IntVec& b) {
  return a.size() == b.size() && a.cwiseEqual(b).all();
}

bool mat_eq(const IntMat& a, const IntMat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         a.cwiseEqual(b).all();
}

}  // namespace

std::optional<Eigen::Index> SurfaceModel::curve_index(
    const std::string& curve_name) const {
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].name == curve_name) return static_cast<Eigen::Index>(i);
  return std::nullopt;
}

Int SurfaceModel::curve_self_intersection(Eigen::Index i) const {
  return pair(curves[i].coords, curves[i].coords, form);
}

std::vector<std::string> validate(const SurfaceModel& model) {
  std::vector<std::string> violations;
  const Eigen::Index n = model.form.rank();

  bool lengths_ok = model.ample.size() == n;
  if (!lengths_ok)
    violations.push_back("ample class length does not match rank");
  for (std::size_t i = 0; i < model.curves.size(); ++i)
    if (model.curves[i].coords.size() != n) {
      violations.push_back("curve[" + std::to_string(i) + "] '" +
                           model.curves[i].name + "' length does not match rank");
      lengths_ok = false;
    }
  if (!lengths_ok) return violations;

  const Signature sig = signature(model.form);
  const Signature hodge{1, static_cast<int>(n - 1), 0};
  if (!(sig == hodge))
    violations.push_back("form signature (" + std::to_string(sig.positive) +
                         "," + std::to_string(sig.negative) + "," +
                         std::to_string(sig.zero) + ") is not (1," +
                         std::to_string(n - 1) + ",0)");

  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    const Int self = model.curve_self_intersection(i);
    if (self >= 0)
      violations.push_back("curve[" + std::to_string(i) + "] '" +
                           model.curves[i].name +
                           "' has non-negative self-intersection " +
                           to_string(self));
  }
  for (std::size_t i = 0; i < model.curves.size(); ++i)
    for (std::size_t j = i + 1; j < model.curves.size(); ++j) {
      if (vec_eq(model.curves[i].coords, model.curves[j].coords))
        violations.push_back("curves[" + std::to_string(i) + "," +
                             std::to_string(j) + "] have identical classes");
      else {
        const Int prod =
            pair(model.curves[i].coords, model.curves[j].coords, model.form);
        if (prod < 0)
          violations.push_back("curves[" + std::to_string(i) + "," +
                               std::to_string(j) +
                               "] meet negatively: " + to_string(prod));
      }
    }

  if (pair(model.ample, model.ample, model.form) <= 0)
    violations.push_back("ample class has non-positive self-intersection");
  for (std::size_t i = 0; i < model.curves.size(); ++i)
    if (pair(model.ample, model.curves[i].coords, model.form) <= 0)
      violations.push_back("ample class does not pair positively with curve[" +
                           std::to_string(i) + "] '" + model.curves[i].name +
                           "'");
  return violations;
}

SurfaceModel cubic_surface() {
  const Eigen::Index n = 7;
  IntMat gram = IntMat::Zero(n, n);
  gram(0, 0) = 1;
  for (Eigen::Index i = 1; i < n; ++i) gram(i, i) = -1;
  IntersectionForm form(gram);

  std::vector<CurveClass> curves;
  // Exceptional curves of the six blown-up points.
  for (int i = 1; i <= 6; ++i) {
    IntVec v = IntVec::Zero(n);
    v[i] = 1;
    curves.push_back({"E" + std::to_string(i), v});
  }
  // Strict transforms of lines through two points.
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      IntVec v = IntVec::Zero(n);
      v[0] = 1;
      v[i] = -1;
      v[j] = -1;
      curves.push_back({"F" + std::to_string(i) + std::to_string(j), v});
    }
  // Strict transforms of conics through five points.
  for (int i = 1; i <= 6; ++i) {
    IntVec v = IntVec::Constant(n, -1);
    v[0] = 2;
    v[i] = 0;
    curves.push_back({"G" + std::to_string(i), v});
  }

  IntVec ample = IntVec::Constant(n, -1);
  ample[0] = 3;  // -K = 3e0 - e1 - ... - e6

  SurfaceModel m{"cubic_surface", form, std::move(curves), ample, true,
                 "smooth cubic surface in P3; the 27 lines are the complete "
                 "negative-curve list; ample class is -K"};
  return m;
}

SurfaceModel surface_with_meeting_lines(long d) {
  if (d < 3)
    throw PreconditionViolation("surface_with_meeting_lines requires d >= 3");
  IntMat gram(3, 3);
  gram << Int(d), Int(1), Int(1),
          Int(1), Int(2 - d), Int(1),
          Int(1), Int(1), Int(2 - d);
  IntersectionForm form(gram);
  IntVec l1 = IntVec::Zero(3);
  l1[1] = 1;
  IntVec l2 = IntVec::Zero(3);
  l2[2] = 1;
  IntVec ample = IntVec::Zero(3);
  ample[0] = 1;
  SurfaceModel m{"meeting_lines_" + std::to_string(d),
                 form,
                 {{"L1", l1}, {"L2", l2}},
                 ample,
                 false,
                 "numerical model of a degree-" + std::to_string(d) +
                     " surface with two meeting lines; the curve list is NOT "
                     "claimed complete"};
  return m;
}

SurfaceModel quartic_Y4() {
  IntMat gram(3, 3);
  gram << Int(4), Int(1), Int(1),
          Int(1), Int(-2), Int(1),
          Int(1), Int(1), Int(-2);
  IntersectionForm form(gram);
  IntVec lp = IntVec::Zero(3);
  lp[1] = 1;
  IntVec lpp = IntVec::Zero(3);
  lpp[2] = 1;
  IntVec conic(3);
  conic << 1, -1, -1;  // C = h - l' - l''
  IntVec ample = IntVec::Zero(3);
  ample[0] = 1;
  SurfaceModel m{"quartic_Y4",
                 form,
                 {{"l'", lp}, {"l''", lpp}, {"C", conic}},
                 ample,
                 true,
                 "quartic K3 whose plane section splits as conic + two "
                 "meeting lines; C, l', l'' exhaust the (-2)-curves"};
  return m;
}

IntersectionForm enriques_lattice() {
  // E8(-1) as the negated Cartan matrix on the T(2,3,5) tree, then U.
  IntMat gram = IntMat::Zero(10, 10);
  const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                       {4, 5}, {5, 6}, {4, 7}};
  for (int i = 0; i < 8; ++i) gram(i, i) = -2;
  for (auto [a, b] : edges) {
    gram(a, b) = 1;
    gram(b, a) = 1;
  }
  gram(8, 9) = 1;
  gram(9, 8) = 1;
  return IntersectionForm(gram);
}

namespace {

constexpr long long kSafeJsonInt = (1LL << 53) - 1;

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) {
    const long s = v.get_si();
    if (s <= kSafeJsonInt && s >= -kSafeJsonInt) return json(s);
  }
  return json(to_string(v));
}

Int int_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer() || j.is_number_unsigned())
    return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("field '" + field + "': bad integer literal '" +
                       j.get<std::string>() + "'");
    }
  }
  if (j.is_number_float())
    throw ParseError("field '" + field +
                     "': floating-point values are rejected, integers only");
  throw ParseError("field '" + field + "': expected an integer");
}

IntVec vec_from_json(const json& j, const std::string& field,
                     Eigen::Index expected_len) {
  if (!j.is_array())
    throw ParseError("field '" + field + "': expected an array");
  if (static_cast<Eigen::Index>(j.size()) != expected_len)
    throw ParseError("field '" + field + "': expected length " +
                     std::to_string(expected_len) + ", got " +
                     std::to_string(j.size()));
  IntVec v(expected_len);
  for (Eigen::Index i = 0; i < expected_len; ++i)
    v[i] = int_from_json(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

json vec_to_json(const IntVec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(int_to_json(v[i]));
  return arr;
}

}  // namespace

std::string model_to_json(const SurfaceModel& model) {
  json j;
  j["name"] = model.name;
  j["rank"] = static_cast<long long>(model.form.rank());
  json gram = json::array();
  for (Eigen::Index i = 0; i < model.form.rank(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < model.form.rank(); ++c)
      row.push_back(int_to_json(model.form.gram()(i, c)));
    gram.push_back(row);
  }
  j["gram"] = gram;
  json curves = json::array();
  for (const auto& c : model.curves)
    curves.push_back({{"name", c.name}, {"coords", vec_to_json(c.coords)}});
  j["curves"] = curves;
  j["ample"] = vec_to_json(model.ample);
  j["metadata"] = {{"curve_list_complete", model.curve_list_complete},
                   {"notes", model.notes}};
  return j.dump(2);
}

SurfaceModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("model document must be a JSON object");
  for (const char* field : {"name", "rank", "gram", "curves", "ample"})
    if (!j.contains(field))
      throw ParseError(std::string("missing field '") + field + "'");

  if (!j["name"].is_string()) throw ParseError("field 'name': expected string");
  const Int rank_i = int_from_json(j["rank"], "rank");
  if (rank_i < 1 || !rank_i.fits_slong_p())
    throw ParseError("field 'rank': must be a positive integer");
  const Eigen::Index rank = rank_i.get_si();

  if (!j["gram"].is_array() ||
      static_cast<Eigen::Index>(j["gram"].size()) != rank)
    throw ParseError("field 'gram': expected " + std::to_string(rank) +
                     " rows");
  IntMat gram(rank, rank);
  for (Eigen::Index i = 0; i < rank; ++i)
    gram.row(i) = vec_from_json(j["gram"][i], "gram[" + std::to_string(i) + "]",
                                rank)
                      .transpose();
  for (Eigen::Index i = 0; i < rank; ++i)
    for (Eigen::Index c = 0; c < i; ++c)
      if (gram(i, c) != gram(c, i))
        throw ParseError("field 'gram': not symmetric at (" +
                         std::to_string(i) + "," + std::to_string(c) + ")");

  std::vector<CurveClass> curves;
  if (!j["curves"].is_array())
    throw ParseError("field 'curves': expected an array");
  for (std::size_t i = 0; i < j["curves"].size(); ++i) {
    const json& c = j["curves"][i];
    const std::string field = "curves[" + std::to_string(i) + "]";
    if (!c.is_object() || !c.contains("name") || !c.contains("coords") ||
        !c["name"].is_string())
      throw ParseError("field '" + field + "': expected {name, coords}");
    curves.push_back({c["name"].get<std::string>(),
                      vec_from_json(c["coords"], field + ".coords", rank)});
  }

  IntVec ample = vec_from_json(j["ample"], "ample", rank);
  bool complete = false;
  std::string notes;
  if (j.contains("metadata")) {
    const json& md = j["metadata"];
    if (!md.is_object()) throw ParseError("field 'metadata': expected object");
    if (md.contains("curve_list_complete")) {
      if (!md["curve_list_complete"].is_boolean())
        throw ParseError("field 'metadata.curve_list_complete': expected bool");
      complete = md["curve_list_complete"].get<bool>();
    }
    if (md.contains("notes")) {
      if (!md["notes"].is_string())
        throw ParseError("field 'metadata.notes': expected string");
      notes = md["notes"].get<std::string>();
    }
  }
  return SurfaceModel{j["name"].get<std::string>(), IntersectionForm(gram),
                      std::move(curves), std::move(ample), complete,
                      std::move(notes)};
}

SurfaceModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return model_from_json(ss.str());
}

void save_model(const SurfaceModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file '" + path + "'");
  out << model_to_json(model) << "\n";
}

bool models_equal(const SurfaceModel& a, const SurfaceModel& b) {
  if (a.name != b.name || !mat_eq(a.form.gram(), b.form.gram()) ||
      !vec_eq(a.ample, b.ample) ||
      a.curve_list_complete != b.curve_list_complete || a.notes != b.notes ||
      a.curves.size() != b.curves.size())
    return false;
  for (std::size_t i = 0; i < a.curves.size(); ++i)
    if (a.curves[i].name != b.curves[i].name ||
        !vec_eq(a.curves[i].coords, b.curves[i].coords))
      return false;
  return true;
}

std::vector<std::string> catalog_names() {
  return {"cubic_surface", "meeting_lines_4", "quartic_Y4"};
}

SurfaceModel catalog_model(const std::string& name) {
  if (name == "cubic_surface") return cubic_surface();
  if (name == "quartic_Y4") return quartic_Y4();
  if (name.rfind("meeting_lines_", 0) == 0) {
    const std::string suffix = name.substr(14);
    try {
      std::size_t pos = 0;
      const long d = std::stol(suffix, &pos);
      if (pos == suffix.size()) return surface_with_meeting_lines(d);
    } catch (const std::exception&) {
    }
  }
  throw ParseError("unknown catalog model '" + name + "'");
}

}  // namespace zch
