#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "zch/chambers.hpp"
#include "zch/errors.hpp"

using namespace zch;
using zch::testutil::vec_eq;

namespace {

RatVec rvec(std::initializer_list<long> vals) {
  RatVec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (long x : vals) v[i++] = Rat(x);
  return v;
}

int sign_of(const WeylSignature& sig, const std::string& name) {
  for (const auto& [n, s] : sig.signs)
    if (n == name) return s;
  FAIL("curve not found in signature");
  return 0;
}

// Random valid rank <= 4 blow-up style models with a mix of determined and
// non-determined curve configurations.
SurfaceModel random_model(std::mt19937_64& rng) {
  const Eigen::Index rank = 2 + static_cast<Eigen::Index>(rng() % 3);
  IntMat gram = IntMat::Zero(rank, rank);
  gram(0, 0) = 1;
  for (Eigen::Index i = 1; i < rank; ++i) gram(i, i) = -1;
  IntersectionForm form(gram);

  // Candidate negative classes in the blow-up basis.
  std::vector<IntVec> pool;
  for (Eigen::Index i = 1; i < rank; ++i) {
    IntVec e = IntVec::Zero(rank);
    e[i] = 1;
    pool.push_back(e);  // (-1)-class
    for (Eigen::Index j = 1; j < i; ++j) {
      IntVec diff = IntVec::Zero(rank);
      diff[i] = 1;
      diff[j] = -1;
      pool.push_back(diff);  // (-2)-class e_i - e_j
    }
    if (rank >= 3)
      for (Eigen::Index j = i + 1; j < rank; ++j) {
        IntVec line = IntVec::Zero(rank);
        line[0] = 1;
        line[i] = -1;
        line[j] = -1;
        pool.push_back(line);  // (-1)-class e0 - e_i - e_j
      }
  }

  SurfaceModel model{"random", form, {}, IntVec::Zero(rank), true, ""};
  const std::size_t want = 1 + rng() % 3;
  for (std::size_t attempt = 0; attempt < 12 && model.curves.size() < want;
       ++attempt) {
    const IntVec& cand = pool[rng() % pool.size()];
    bool ok = true;
    for (const auto& existing : model.curves) {
      if (vec_eq(existing.coords, cand)) ok = false;
      else if (pair(existing.coords, cand, form) < 0) ok = false;
    }
    if (ok)
      model.curves.push_back(
          {"N" + std::to_string(model.curves.size()), cand});
  }
  // Distinct negative entries keep the ample pairing strictly positive on
  // every class in the pool.
  model.ample = IntVec::Zero(rank);
  model.ample[0] = 10 * static_cast<long>(rank);
  for (Eigen::Index i = 1; i < rank; ++i) model.ample[i] = -i;
  return model;
}

}  // namespace

TEST_CASE("Weyl signatures on the quartic") {
  const SurfaceModel y4 = quartic_Y4();
  const WeylSignature all_plus = weyl_signature(y4, rvec({1, 0, 0}));
  for (const auto& [name, s] : all_plus.signs) CHECK(s == 1);

  const WeylSignature d1 = weyl_signature(y4, rvec({3, 6, 6}));
  CHECK(sign_of(d1, "l'") == -1);
  CHECK(sign_of(d1, "l''") == -1);
  CHECK(sign_of(d1, "C") == 1);

  const WeylSignature d2 = weyl_signature(y4, rvec({3, 4, 7}));
  CHECK(sign_of(d2, "l'") == 1);
  CHECK(sign_of(d2, "l''") == -1);

  CHECK_THROWS_AS(weyl_signature(y4, rvec({3, 3, 3})), OnWall);  // T1
  CHECK_THROWS_AS(weyl_signature(y4, rvec({-1, 0, 0})), NotBig);
}

TEST_CASE("chamber labels") {
  const SurfaceModel y4 = quartic_Y4();
  const ChamberLabel d1 = chamber_label(y4, rvec({3, 6, 6}));
  CHECK(d1.support == std::vector<std::string>{"l'", "l''"});
  CHECK(d1.boundary_null.empty());

  const ChamberLabel d2 = chamber_label(y4, rvec({3, 4, 7}));
  CHECK(d2.support == std::vector<std::string>{"l'", "l''"});

  const ChamberLabel nef = chamber_label(y4, rvec({1, 0, 0}));
  CHECK(nef.support.empty());
  CHECK(nef.boundary_null.empty());

  // T1 is big and nef with two null directions outside the support.
  const ChamberLabel t1 = chamber_label(y4, rvec({3, 3, 3}));
  CHECK(t1.support.empty());
  CHECK(t1.boundary_null == std::vector<std::string>{"l'", "l''"});

  CHECK_THROWS_AS(chamber_label(y4, rvec({0, 1, 0})), NotBig);
}

TEST_CASE("numerically determined criterion") {
  const CriterionVerdict cubic = numerically_determined(cubic_surface());
  CHECK(cubic.determined);
  CHECK(cubic.witnesses.empty());
  CHECK_FALSE(cubic.caveat_incomplete);

  const CriterionVerdict deg4 =
      numerically_determined(surface_with_meeting_lines(4));
  CHECK_FALSE(deg4.determined);
  REQUIRE(deg4.witnesses.size() == 1);
  CHECK(deg4.witnesses[0] == std::pair<std::string, std::string>{"L1", "L2"});
  CHECK(deg4.caveat_incomplete);

  const CriterionVerdict deg3 =
      numerically_determined(surface_with_meeting_lines(3));
  CHECK(deg3.determined);  // 1 >= 1

  const CriterionVerdict y4 = numerically_determined(quartic_Y4());
  CHECK_FALSE(y4.determined);
  REQUIRE(y4.witnesses.size() == 1);
  CHECK(y4.witnesses[0] == std::pair<std::string, std::string>{"l'", "l''"});
}

TEST_CASE("criterion equals the pairwise-disjointness property") {
  CHECK(pairwise_disjoint_support_property(cubic_surface()));
  CHECK_FALSE(pairwise_disjoint_support_property(quartic_Y4()));
  CHECK_FALSE(
      pairwise_disjoint_support_property(surface_with_meeting_lines(5)));

  SurfaceModel lonely = quartic_Y4();
  lonely.curves.resize(1);
  CHECK(pairwise_disjoint_support_property(lonely));

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const SurfaceModel model = random_model(rng);
    REQUIRE(validate(model).empty());
    CHECK(numerically_determined(model).determined ==
          pairwise_disjoint_support_property(model));
  }
}

TEST_CASE("counterexample construction on the quartic") {
  const SurfaceModel y4 = quartic_Y4();
  const Counterexample cx = construct_counterexample(y4, "l'", "l''");
  CHECK(vec_eq(cx.t1, [] {
    IntVec v(3);
    v << 3, 3, 3;
    return v;
  }()));
  CHECK(vec_eq(cx.d1, [] {
    IntVec v(3);
    v << 3, 6, 6;
    return v;
  }()));
  CHECK(vec_eq(cx.d2, [] {
    IntVec v(3);
    v << 3, 4, 7;
    return v;
  }()));
  CHECK(cx.d2_dot_c1 == 2);
  CHECK(cx.d2_dot_c2 == -7);
  CHECK(cx.label_d1.support == cx.label_d2.support);
  CHECK_FALSE(cx.signature_d1 == cx.signature_d2);
  CHECK(cx.failures.empty());
}

TEST_CASE("counterexample rejects bad pairs") {
  const SurfaceModel x3 = cubic_surface();
  CHECK_THROWS_AS(construct_counterexample(x3, "E1", "F12"),
                  PairNotNegativeDefinite);
  CHECK_THROWS_AS(construct_counterexample(x3, "E1", "E2"), PairDisjoint);
  CHECK_THROWS_AS(construct_counterexample(x3, "E1", "nope"),
                  PreconditionViolation);
}

TEST_CASE("scaling invariance of signatures and labels") {
  const SurfaceModel y4 = quartic_Y4();
  const RatVec d = rvec({3, 4, 7});
  const Rat lambda = make_rat(5, 3);
  CHECK(weyl_signature(y4, d) == weyl_signature(y4, (lambda * d).eval()));
  CHECK(chamber_label(y4, d) == chamber_label(y4, (lambda * d).eval()));
}

TEST_CASE("census on a determined model: one signature per support") {
  const SurfaceModel x3 = cubic_surface();
  const Census census = sample_chamber_census(x3, 200, 7);
  CHECK(!census.records.empty());
  for (const auto& rec : census.records) {
    // Support is exactly the negative-sign curves.
    std::vector<std::string> negative;
    for (const auto& [name, s] : rec.signature.signs)
      if (s < 0) negative.push_back(name);
    CHECK(rec.label.support == negative);
  }
  for (const auto& [support, sigs] : census.summary)
    CHECK(sigs.size() == 1);
}

TEST_CASE("census on the quartic with injected witnesses") {
  const SurfaceModel y4 = quartic_Y4();
  const Census census =
      sample_chamber_census(y4, 200, 7, {rvec({3, 6, 6}), rvec({3, 4, 7})});
  const std::vector<std::string> support{"l'", "l''"};
  REQUIRE(census.summary.count(support) == 1);
  CHECK(census.summary.at(support).size() >= 2);

  CHECK_THROWS_AS(sample_chamber_census(y4, 0, 7), PreconditionViolation);
}

TEST_CASE("census is deterministic for a fixed seed") {
  const SurfaceModel y4 = quartic_Y4();
  const Census a = sample_chamber_census(y4, 100, 13);
  const Census b = sample_chamber_census(y4, 100, 13);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(vec_eq(a.records[i].divisor, b.records[i].divisor));
    CHECK(a.records[i].signature == b.records[i].signature);
    CHECK(a.records[i].label == b.records[i].label);
  }
}
