#include "zch/chambers.hpp"

#include <random>

#include "zch/errors.hpp"

namespace zch {

std::string WeylSignature::key() const {
  std::string k;
  for (const auto& [name, s] : signs) {
    if (!k.empty()) k += ",";
    k += name;
    k += (s > 0 ? ":+" : ":-");
  }
  return k;
}

WeylSignature weyl_signature(const SurfaceModel& model, const RatVec& divisor) {
  if (!is_big(model, divisor)) throw NotBig("class is not big");
  WeylSignature sig;
  for (const auto& curve : model.curves) {
    const Rat product = pair(divisor, curve.coords, model.form);
    if (product == 0) throw OnWall(curve.name);
    sig.signs.emplace_back(curve.name, product > 0 ? 1 : -1);
  }
  return sig;
}

ChamberLabel chamber_label(const SurfaceModel& model, const RatVec& divisor) {
  ZariskiSplit split;
  try {
    split = zariski_decompose(model, divisor);
  } catch (const NotPseudoEffective&) {
    throw NotBig("class is not big");
  }
  if (!(pair(split.positive, split.positive, model.form) > 0 &&
        pair(split.positive, model.ample, model.form) > 0))
    throw NotBig("class is not big");
  ChamberLabel label;
  label.support = split.support();
  for (const auto& curve : model.curves) {
    bool in_support = false;
    for (const auto& name : label.support)
      if (name == curve.name) in_support = true;
    if (!in_support &&
        pair(split.positive, curve.coords, model.form) == 0)
      label.boundary_null.push_back(curve.name);
  }
  return label;
}

CriterionVerdict numerically_determined(const SurfaceModel& model) {
  CriterionVerdict verdict;
  verdict.caveat_incomplete = !model.curve_list_complete;
  for (std::size_t i = 0; i < model.curves.size(); ++i)
    for (std::size_t j = i + 1; j < model.curves.size(); ++j) {
      const Int product =
          pair(model.curves[i].coords, model.curves[j].coords, model.form);
      if (product <= 0) continue;
      const Int lhs = product * product;
      const Int rhs = model.curve_self_intersection(i) *
                      model.curve_self_intersection(j);
      if (lhs < rhs) {
        verdict.determined = false;
        verdict.witnesses.emplace_back(model.curves[i].name,
                                       model.curves[j].name);
      }
    }
  return verdict;
}

bool pairwise_disjoint_support_property(const SurfaceModel& model) {
  for (std::size_t i = 0; i < model.curves.size(); ++i)
    for (std::size_t j = i + 1; j < model.curves.size(); ++j) {
      const Int off =
          pair(model.curves[i].coords, model.curves[j].coords, model.form);
      if (off == 0) continue;
      IntMat g(2, 2);
      g(0, 0) = model.curve_self_intersection(i);
      g(1, 1) = model.curve_self_intersection(j);
      g(0, 1) = off;
      g(1, 0) = off;
      if (is_negative_definite(g)) return false;
    }
  return true;
}

Counterexample construct_counterexample(const SurfaceModel& model,
                                        const std::string& curve1,
                                        const std::string& curve2) {
  const auto i1 = model.curve_index(curve1);
  const auto i2 = model.curve_index(curve2);
  if (!i1 || !i2)
    throw PreconditionViolation("unknown curve name '" +
                                (i1 ? curve2 : curve1) + "'");
  const IntVec& c1 = model.curves[*i1].coords;
  const IntVec& c2 = model.curves[*i2].coords;
  const Int c = pair(c1, c2, model.form);
  if (c == 0) throw PairDisjoint("curves '" + curve1 + "' and '" + curve2 +
                                 "' are disjoint");
  IntMat g(2, 2);
  g(0, 0) = pair(c1, c1, model.form);
  g(1, 1) = pair(c2, c2, model.form);
  g(0, 1) = c;
  g(1, 0) = c;
  if (!is_negative_definite(g))
    throw PairNotNegativeDefinite("pair Gram of '" + curve1 + "', '" + curve2 +
                                  "' is not negative definite");

  const Int a = -g(0, 0);
  const Int b = -g(1, 1);
  const Int h1 = pair(model.ample, c1, model.form);
  const Int h2 = pair(model.ample, c2, model.form);
  const Int det = a * b - c * c;
  const Int k1 = b * h1 + c * h2;  // coefficient of C1 in T_1
  const Int k2 = a * h2 + c * h1;  // coefficient of C2 in T_1

  Counterexample result;
  const Int two_k1 = 2 * k1, two_k2 = 2 * k2;
  const Int d2_coeff1 = k1 + c, d2_coeff2 = k2 + 2 * a;
  result.t1 = det * model.ample + k1 * c1 + k2 * c2;
  result.d1 = det * model.ample + two_k1 * c1 + two_k2 * c2;
  result.d2 = det * model.ample + d2_coeff1 * c1 + d2_coeff2 * c2;
  result.d2_dot_c1 = pair(result.d2, c1, model.form);
  result.d2_dot_c2 = pair(result.d2, c2, model.form);

  auto check = [&result](bool ok, const std::string& what) {
    if (!ok) result.failures.push_back(what);
  };
  check(pair(result.t1, c1, model.form) == 0, "T1.C1 = 0");
  check(pair(result.t1, c2, model.form) == 0, "T1.C2 = 0");
  check(pair(result.d1, c1, model.form) < 0, "D1.C1 < 0");
  check(pair(result.d1, c2, model.form) < 0, "D1.C2 < 0");
  check(result.d2_dot_c1 == a * c, "D2.C1 = a*c");
  check(result.d2_dot_c1 > 0, "D2.C1 > 0");
  check(result.d2_dot_c2 == c * c - 2 * a * b, "D2.C2 = c^2 - 2ab");
  check(result.d2_dot_c2 < 0, "D2.C2 < 0");

  result.label_d1 = chamber_label(model, to_rational(result.d1));
  result.label_d2 = chamber_label(model, to_rational(result.d2));
  std::vector<std::string> expected_support;
  for (const auto& curve : model.curves)
    if (curve.name == curve1 || curve.name == curve2)
      expected_support.push_back(curve.name);
  check(result.label_d1.support == expected_support, "supp(N_D1) = {C1,C2}");
  check(result.label_d2.support == expected_support, "supp(N_D2) = {C1,C2}");

  result.signature_d1 = weyl_signature(model, to_rational(result.d1));
  result.signature_d2 = weyl_signature(model, to_rational(result.d2));
  check(!(result.signature_d1 == result.signature_d2),
        "Weyl signatures of D1, D2 differ");
  return result;
}

namespace {

// Implementation-pinned bounded draw; std::uniform_int_distribution is not
// reproducible across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

}  // namespace

Census sample_chamber_census(const SurfaceModel& model, long n,
                             std::uint64_t seed,
                             const std::vector<RatVec>& extras) {
  if (n < 1) throw PreconditionViolation("census sample count must be >= 1");
  Census census;
  auto record = [&](const RatVec& divisor, bool injected) {
    if (!is_big(model, divisor)) {
      ++census.skipped_not_big;
      return;
    }
    CensusRecord rec;
    rec.divisor = divisor;
    rec.injected = injected;
    try {
      rec.signature = weyl_signature(model, divisor);
    } catch (const OnWall&) {
      ++census.skipped_on_wall;
      return;
    }
    rec.label = chamber_label(model, divisor);
    census.summary[rec.label.support][rec.signature.key()] += 1;
    census.records.push_back(std::move(rec));
  };

  for (const RatVec& extra : extras) record(extra, true);

  std::mt19937_64 rng(seed);
  const long ncurves = static_cast<long>(model.curves.size());
  for (long i = 0; i < n; ++i) {
    const long ample_mult = draw(rng, 1, 6);
    RatVec divisor = Rat(ample_mult) * to_rational(model.ample);
    const long picks = draw(rng, 0, std::min<long>(3, ncurves));
    for (long p = 0; p < picks; ++p) {
      const long which = draw(rng, 0, ncurves - 1);
      const long coeff = draw(rng, 1, 8);
      divisor += Rat(coeff) * to_rational(model.curves[which].coords);
    }
    record(divisor, false);
  }
  return census;
}

}  // namespace zch
