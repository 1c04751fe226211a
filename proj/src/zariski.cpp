#include "zch/zariski.hpp"

#include <algorithm>
#include <set>

#include "zch/errors.hpp"

namespace zch {

namespace {

std::vector<std::string> subset_names(const SurfaceModel& model,
                                      const std::vector<Eigen::Index>& subset) {
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (Eigen::Index i : subset) names.push_back(model.curves[i].name);
  return names;
}

IntMat subset_gram(const SurfaceModel& model,
                   const std::vector<Eigen::Index>& subset) {
  const Eigen::Index s = static_cast<Eigen::Index>(subset.size());
  IntMat g(s, s);
  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < s; ++j)
      g(i, j) = pair(model.curves[subset[i]].coords,
                     model.curves[subset[j]].coords, model.form);
  return g;
}

}  // namespace

std::vector<std::string> ZariskiSplit::support() const {
  std::vector<std::string> names;
  names.reserve(negative_coeffs.size());
  for (const auto& [name, coeff] : negative_coeffs) names.push_back(name);
  return names;
}

RatVec ZariskiSplit::negative_part(const SurfaceModel& model) const {
  RatVec n = RatVec::Zero(model.form.rank());
  for (const auto& [name, coeff] : negative_coeffs) {
    const auto idx = model.curve_index(name);
    if (!idx) throw PreconditionViolation("unknown support curve '" + name + "'");
    n += coeff * to_rational(model.curves[*idx].coords);
  }
  return n;
}

bool splits_equal(const ZariskiSplit& a, const ZariskiSplit& b) {
  if (a.negative_coeffs.size() != b.negative_coeffs.size()) return false;
  for (std::size_t i = 0; i < a.negative_coeffs.size(); ++i)
    if (a.negative_coeffs[i] != b.negative_coeffs[i]) return false;
  return a.positive.size() == b.positive.size() &&
         a.positive.cwiseEqual(b.positive).all();
}

RatVec solve_gram_system(const IntMat& gram, const RatVec& rhs) {
  const Eigen::Index n = gram.rows();
  RatMat a(n, n + 1);
  a.leftCols(n) = to_rational(gram);
  a.col(n) = rhs;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n)
      throw InternalInvariantViolation("singular support Gram in solve");
    if (p != k) a.row(p).swap(a.row(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rat f = a(i, k) / a(k, k);
      a.row(i) -= f * a.row(k);
    }
  }
  RatVec x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = a(i, n) / a(i, i);
  return x;
}

namespace {

struct RawSplit {
  RatVec positive;
  std::vector<Eigen::Index> support;  // increasing model indices
  RatVec coeffs;                      // aligned with support, may contain zeros
};

ZariskiSplit finalize(const SurfaceModel& model, const RawSplit& raw) {
  ZariskiSplit split;
  split.positive = raw.positive;
  for (std::size_t i = 0; i < raw.support.size(); ++i)
    if (raw.coeffs[static_cast<Eigen::Index>(i)] != 0)
      split.negative_coeffs.emplace_back(
          model.curves[raw.support[i]].name,
          raw.coeffs[static_cast<Eigen::Index>(i)]);
  return split;
}

RawSplit solve_on_support(const SurfaceModel& model, const RatVec& divisor,
                          const std::vector<Eigen::Index>& support) {
  RawSplit raw;
  raw.support = support;
  if (support.empty()) {
    raw.positive = divisor;
    raw.coeffs = RatVec(0);
    return raw;
  }
  const Eigen::Index s = static_cast<Eigen::Index>(support.size());
  RatVec rhs(s);
  for (Eigen::Index j = 0; j < s; ++j)
    rhs[j] = pair(divisor, model.curves[support[j]].coords, model.form);
  raw.coeffs = solve_gram_system(subset_gram(model, support), rhs);
  raw.positive = divisor;
  for (Eigen::Index j = 0; j < s; ++j)
    raw.positive -= raw.coeffs[j] * to_rational(model.curves[support[j]].coords);
  return raw;
}

}  // namespace

ZariskiSplit zariski_decompose(const SurfaceModel& model,
                               const RatVec& divisor) {
  if (divisor.size() != model.form.rank())
    throw DimensionMismatch("divisor length does not match model rank");
  const std::size_t ncurves = model.curves.size();

  std::set<Eigen::Index> support;
  for (std::size_t i = 0; i < ncurves; ++i)
    if (pair(divisor, model.curves[i].coords, model.form) < 0)
      support.insert(static_cast<Eigen::Index>(i));

  RawSplit raw;
  for (;;) {
    std::vector<Eigen::Index> sub(support.begin(), support.end());
    if (!is_negative_definite(subset_gram(model, sub)))
      throw NotPseudoEffective(
          "support Gram is not negative definite; class is not pseudo-effective",
          subset_names(model, sub));
    raw = solve_on_support(model, divisor, sub);
    for (Eigen::Index j = 0; j < raw.coeffs.size(); ++j)
      if (raw.coeffs[j] < 0)
        throw NotPseudoEffective(
            "negative coefficient on curve '" + model.curves[sub[j]].name +
                "'; class is not pseudo-effective",
            subset_names(model, sub));
    bool grew = false;
    for (std::size_t i = 0; i < ncurves; ++i) {
      const Eigen::Index idx = static_cast<Eigen::Index>(i);
      if (support.count(idx)) continue;
      if (pair(raw.positive, model.curves[i].coords, model.form) < 0) {
        support.insert(idx);
        grew = true;
      }
    }
    if (!grew) break;
  }
  if (pair(raw.positive, raw.positive, model.form) < 0)
    throw NotPseudoEffective(
        "positive part has negative self-intersection; class is not "
        "pseudo-effective",
        subset_names(model, raw.support));
  return finalize(model, raw);
}

bool is_big(const SurfaceModel& model, const RatVec& divisor) {
  try {
    const ZariskiSplit split = zariski_decompose(model, divisor);
    return pair(split.positive, split.positive, model.form) > 0 &&
           pair(split.positive, model.ample, model.form) > 0;
  } catch (const NotPseudoEffective&) {
    return false;
  }
}

Rat volume(const SurfaceModel& model, const RatVec& divisor) {
  const ZariskiSplit split = zariski_decompose(model, divisor);
  const Rat square = pair(split.positive, split.positive, model.form);
  if (square > 0 && pair(split.positive, model.ample, model.form) > 0)
    return square;
  return 0;
}

VerifyReport verify_split(const SurfaceModel& model, const RatVec& divisor,
                          const ZariskiSplit& split) {
  VerifyReport report;
  auto fail = [&report](const std::string& msg) {
    report.ok = false;
    report.failures.push_back(msg);
  };

  std::vector<Eigen::Index> support_idx;
  for (const auto& [name, coeff] : split.negative_coeffs) {
    const auto idx = model.curve_index(name);
    if (!idx) {
      fail("support names unknown curve '" + name + "'");
      return report;
    }
    support_idx.push_back(*idx);
    if (coeff <= 0)
      fail("coefficient of '" + name + "' is not strictly positive");
  }

  RatVec reconstructed = split.positive + split.negative_part(model);
  bool reconstructs = reconstructed.size() == divisor.size();
  for (Eigen::Index i = 0; reconstructs && i < divisor.size(); ++i)
    reconstructs = reconstructed[i] == divisor[i];
  if (!reconstructs) fail("reconstruction P + N does not equal D");

  // (Z1) relative to the declared curves, plus non-negative square.
  for (const auto& curve : model.curves)
    if (pair(split.positive, curve.coords, model.form) < 0)
      fail("(Z1) fails: P pairs negatively with '" + curve.name + "'");
  if (pair(split.positive, split.positive, model.form) < 0)
    fail("(Z1) fails: P has negative self-intersection");

  if (!is_negative_definite(subset_gram(model, support_idx)))
    fail("(Z2) fails: support Gram is not negative definite");

  for (Eigen::Index i : support_idx)
    if (pair(split.positive, model.curves[i].coords, model.form) != 0)
      fail("(Z3) fails: P does not pair to zero with '" +
           model.curves[i].name + "'");
  return report;
}

namespace {

struct OracleState {
  const SurfaceModel* model;
  const RatVec* divisor;
  IntMat gram_all;                    // pairwise curve products, precomputed
  std::vector<Rat> products;          // pair(D, C_i)
  std::vector<std::vector<bool>> meets;
  bool found = false;
  ZariskiSplit best;
};

// Every connected component of an actual support contains a curve pairing
// negatively with D: otherwise the component's coefficient vector would
// pair non-negatively against itself under a negative-definite Gram.
bool components_touch_negative(const OracleState& st,
                               const std::vector<Eigen::Index>& subset) {
  const std::size_t s = subset.size();
  std::vector<bool> visited(s, false);
  for (std::size_t start = 0; start < s; ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> stack{start};
    visited[start] = true;
    bool has_negative = false;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      if (st.products[subset[cur]] < 0) has_negative = true;
      for (std::size_t other = 0; other < s; ++other)
        if (!visited[other] && st.meets[subset[cur]][subset[other]]) {
          visited[other] = true;
          stack.push_back(other);
        }
    }
    if (!has_negative) return false;
  }
  return true;
}

void try_subset(OracleState& st, const std::vector<Eigen::Index>& subset) {
  if (!components_touch_negative(st, subset)) return;
  const SurfaceModel& model = *st.model;
  RawSplit raw = solve_on_support(model, *st.divisor, subset);
  for (Eigen::Index j = 0; j < raw.coeffs.size(); ++j)
    if (raw.coeffs[j] < 0) return;
  for (const auto& curve : model.curves)
    if (pair(raw.positive, curve.coords, model.form) < 0) return;
  if (pair(raw.positive, raw.positive, model.form) < 0) return;
  ZariskiSplit candidate = finalize(model, raw);
  if (st.found) {
    if (!splits_equal(st.best, candidate))
      throw InternalInvariantViolation(
          "subset oracle accepted two distinct Zariski splits");
    return;
  }
  st.found = true;
  st.best = std::move(candidate);
}

// Subsets are extended in increasing index order, so all proper leading
// minors of the candidate Gram were verified on ancestor nodes; only the
// sign of the full determinant is new.
bool extension_stays_negative_definite(const OracleState& st,
                                       const std::vector<Eigen::Index>& subset) {
  const Eigen::Index s = static_cast<Eigen::Index>(subset.size());
  IntMat g(s, s);
  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < s; ++j)
      g(i, j) = st.gram_all(subset[i], subset[j]);
  const Int det = exact_determinant(g);
  return (s % 2 == 0) ? det > 0 : det < 0;
}

void scan_subsets(OracleState& st, std::vector<Eigen::Index>& subset,
                  Eigen::Index next) {
  try_subset(st, subset);
  const Eigen::Index n = static_cast<Eigen::Index>(st.model->curves.size());
  for (Eigen::Index c = next; c < n; ++c) {
    subset.push_back(c);
    if (extension_stays_negative_definite(st, subset))
      scan_subsets(st, subset, c + 1);
    subset.pop_back();
  }
}

}  // namespace

ZariskiSplit brute_force_decompose(const SurfaceModel& model,
                                   const RatVec& divisor) {
  if (divisor.size() != model.form.rank())
    throw DimensionMismatch("divisor length does not match model rank");
  if (model.curves.size() > 32)
    throw PreconditionViolation(
        "subset oracle guarded to models with at most 32 declared curves");
  OracleState st;
  st.model = &model;
  st.divisor = &divisor;
  st.products.reserve(model.curves.size());
  for (const auto& curve : model.curves)
    st.products.push_back(pair(divisor, curve.coords, model.form));
  const std::size_t n = model.curves.size();
  st.gram_all = IntMat(n, n);
  st.meets.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Int prod =
          pair(model.curves[i].coords, model.curves[j].coords, model.form);
      st.gram_all(i, j) = prod;
      st.gram_all(j, i) = prod;
      if (i != j && prod > 0) {
        st.meets[i][j] = true;
        st.meets[j][i] = true;
      }
    }
  std::vector<Eigen::Index> subset;
  scan_subsets(st, subset, 0);
  if (!st.found)
    throw NotPseudoEffective(
        "no subset passes (Z1)-(Z3); class is not pseudo-effective");
  return st.best;
}

}  // namespace zch
