#include "zch/enriques.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zch/errors.hpp"
#include "zch/surface_model.hpp"

namespace zch {

using nlohmann::json;

KodairaType KodairaType::parse(const std::string& tag) {
  auto parse_index = [&tag](std::size_t offset, int min) {
    const std::string digits = tag.substr(offset);
    if (digits.empty()) throw ParseError("bad Kodaira tag '" + tag + "'");
    for (char ch : digits)
      if (ch < '0' || ch > '9')
        throw ParseError("bad Kodaira tag '" + tag + "'");
    const long value = std::stol(digits);
    if (value < min || value > 1000000)
      throw ParseError("Kodaira index out of range in '" + tag + "'");
    return static_cast<int>(value);
  };
  if (tag == "II") return {Kind::II, 0};
  if (tag == "III") return {Kind::III, 0};
  if (tag == "IV") return {Kind::IV, 0};
  if (tag == "II*") return {Kind::IIStar, 0};
  if (tag == "III*") return {Kind::IIIStar, 0};
  if (tag == "IV*") return {Kind::IVStar, 0};
  if (tag.rfind("I*", 0) == 0) return {Kind::IStarN, parse_index(2, 0)};
  if (tag.rfind("I", 0) == 0) return {Kind::In, parse_index(1, 1)};
  throw ParseError("bad Kodaira tag '" + tag + "'");
}

std::string KodairaType::to_string() const {
  switch (kind) {
    case Kind::In:
      return "I" + std::to_string(n);
    case Kind::II:
      return "II";
    case Kind::III:
      return "III";
    case Kind::IV:
      return "IV";
    case Kind::IStarN:
      return "I*" + std::to_string(n);
    case Kind::IIStar:
      return "II*";
    case Kind::IIIStar:
      return "III*";
    case Kind::IVStar:
      return "IV*";
  }
  throw Error("unreachable");
}

int component_count(const KodairaType& t) {
  switch (t.kind) {
    case KodairaType::Kind::In:
      return t.n;
    case KodairaType::Kind::II:
      return 1;
    case KodairaType::Kind::III:
      return 2;
    case KodairaType::Kind::IV:
      return 3;
    case KodairaType::Kind::IStarN:
      return 5 + t.n;
    case KodairaType::Kind::IVStar:
      return 7;
    case KodairaType::Kind::IIIStar:
      return 8;
    case KodairaType::Kind::IIStar:
      return 9;
  }
  throw Error("unreachable");
}

int euler_number(const KodairaType& t) {
  switch (t.kind) {
    case KodairaType::Kind::In:
      return t.n;
    case KodairaType::Kind::II:
      return 2;
    case KodairaType::Kind::III:
      return 3;
    case KodairaType::Kind::IV:
      return 4;
    case KodairaType::Kind::IStarN:
      return t.n + 6;
    case KodairaType::Kind::IVStar:
      return 8;
    case KodairaType::Kind::IIIStar:
      return 9;
    case KodairaType::Kind::IIStar:
      return 10;
  }
  throw Error("unreachable");
}

HalfPencil HalfPencil::parse(const std::string& tag) {
  if (tag == "irr" || tag == "irreducible") return {false, 0};
  std::string t = tag;
  if (t.rfind("I_", 0) == 0) t = "I" + t.substr(2);
  const KodairaType kt = KodairaType::parse(t);
  if (kt.kind != KodairaType::Kind::In || kt.n < 1)
    throw ParseError("half-pencil must be 'irr' or of type I_k: '" + tag + "'");
  return {true, kt.n};
}

std::string HalfPencil::to_string() const {
  return reducible ? "I_" + std::to_string(k) : "irr";
}

FibrationData fibration_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("fibration JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("fibers") || !j.contains("half_pencils"))
    throw ParseError("fibration document needs 'fibers' and 'half_pencils'");
  if (!j["fibers"].is_array())
    throw ParseError("field 'fibers': expected an array of Kodaira tags");
  if (!j["half_pencils"].is_array() || j["half_pencils"].size() != 2)
    throw ParseError("field 'half_pencils': expected exactly two entries");
  FibrationData f;
  for (const auto& tag : j["fibers"]) {
    if (!tag.is_string())
      throw ParseError("field 'fibers': entries must be strings");
    f.fibers.push_back(KodairaType::parse(tag.get<std::string>()));
  }
  for (int i = 0; i < 2; ++i) {
    if (!j["half_pencils"][i].is_string())
      throw ParseError("field 'half_pencils': entries must be strings");
    f.half_pencils[i] =
        HalfPencil::parse(j["half_pencils"][i].get<std::string>());
  }
  return f;
}

std::string fibration_to_json(const FibrationData& f) {
  json j;
  j["fibers"] = json::array();
  for (const auto& fiber : f.fibers) j["fibers"].push_back(fiber.to_string());
  j["half_pencils"] = {f.half_pencils[0].to_string(),
                       f.half_pencils[1].to_string()};
  return j.dump(2);
}

FibrationData load_fibration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fibration file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return fibration_from_json(ss.str());
}

int max_fiber_components(const FibrationData& f) {
  int best = 1;
  for (const auto& fiber : f.fibers) best = std::max(best, component_count(fiber));
  for (const auto& hp : f.half_pencils)
    if (hp.reducible) best = std::max(best, hp.k);
  return best;
}

int trivial_lattice_excess(const FibrationData& f) {
  int t = 0;
  for (const auto& fiber : f.fibers) t += component_count(fiber) - 1;
  for (const auto& hp : f.half_pencils)
    if (hp.reducible) t += hp.k - 1;
  return t;
}

int mordell_weil_rank_rational(const FibrationData& f) {
  const int t = trivial_lattice_excess(f);
  if (t > 8)
    throw InconsistentFibration(
        "trivial lattice excess " + std::to_string(t) +
        " exceeds the rank budget of a rational elliptic surface");
  return 8 - t;
}

std::vector<KodairaType> k3_cover_fibers(const FibrationData& f) {
  std::vector<KodairaType> cover;
  for (const auto& fiber : f.fibers) {
    cover.push_back(fiber);
    cover.push_back(fiber);
  }
  for (const auto& hp : f.half_pencils)
    if (hp.reducible)
      cover.push_back({KodairaType::Kind::In, 2 * hp.k});
  return cover;
}

int picard_lower_bound_cover(const FibrationData& f) {
  const int t = trivial_lattice_excess(f);
  const int mw = mordell_weil_rank_rational(f);  // validates t <= 8
  const int bound = 10 + t;
  if (!f.half_pencils[0].reducible && !f.half_pencils[1].reducible) {
    // Cross-check via the cover: 2 + rank excess of the doubled fibers
    // plus the Mordell-Weil rank carried over from the base.
    int cover_excess = 0;
    for (const auto& fiber : k3_cover_fibers(f))
      cover_excess += component_count(fiber) - 1;
    if (2 + cover_excess + mw != bound)
      throw InternalInvariantViolation(
          "cover-side Shioda-Tate cross-check failed");
  }
  return bound;
}

int euler_sum(const FibrationData& f) {
  int e = 0;
  for (const auto& fiber : f.fibers) e += euler_number(fiber);
  for (const auto& hp : f.half_pencils)
    if (hp.reducible) e += hp.k;
  return e;
}

std::optional<std::pair<std::size_t, std::size_t>> meeting_minus2_pair(
    const std::vector<IntVec>& curves, const IntersectionForm& form) {
  for (const auto& c : curves)
    if (pair(c, c, form) != -2)
      throw PreconditionViolation(
          "meeting_minus2_pair: a class has self-intersection != -2");
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      if (pair(curves[i], curves[j], form) == 1) return std::make_pair(i, j);
  return std::nullopt;
}

ProofPipelineResult proof_pipeline_complement_isotropic(const IntVec& c1,
                                                        const IntVec& c2,
                                                        long bound) {
  const IntersectionForm form = enriques_lattice();
  if (c1.size() != form.rank() || c2.size() != form.rank())
    throw DimensionMismatch("classes must live in the rank-10 Enriques lattice");
  if (pair(c1, c1, form) != -2 || pair(c2, c2, form) != -2 ||
      pair(c1, c2, form) != 1)
    throw PreconditionViolation(
        "expected two (-2)-classes with intersection product 1");

  ProofPipelineResult result;
  result.complement_basis = orthogonal_complement({c1, c2}, form);
  const IntersectionForm complement_form(
      restricted_gram(form, result.complement_basis));
  result.complement_signature = signature(complement_form);
  if (!(result.complement_signature == Signature{1, 7, 0}))
    throw InternalInvariantViolation(
        "complement of a meeting (-2)-pair must have signature (1,7,0)");
  const auto found = find_isotropic_primitive(complement_form, bound);
  if (found) {
    // Re-express in ambient coordinates.
    IntVec ambient = IntVec::Zero(form.rank());
    for (std::size_t i = 0; i < result.complement_basis.size(); ++i)
      ambient += (*found)[static_cast<Eigen::Index>(i)] *
                 result.complement_basis[i];
    result.isotropic = ambient;
  }
  return result;
}

}  // namespace zch
