#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "test_util.hpp"
#include "zch/enriques.hpp"
#include "zch/errors.hpp"
#include "zch/surface_model.hpp"

using namespace zch;

namespace {

FibrationData make_fibration(const std::vector<std::string>& fiber_tags,
                             const std::string& hp0 = "irr",
                             const std::string& hp1 = "irr") {
  FibrationData f;
  for (const auto& tag : fiber_tags) f.fibers.push_back(KodairaType::parse(tag));
  f.half_pencils = {HalfPencil::parse(hp0), HalfPencil::parse(hp1)};
  return f;
}

}  // namespace

TEST_CASE("Kodaira tag parsing and printing") {
  CHECK(KodairaType::parse("I5").to_string() == "I5");
  CHECK(KodairaType::parse("I*0").to_string() == "I*0");
  CHECK(KodairaType::parse("II*").to_string() == "II*");
  CHECK(KodairaType::parse("IV").to_string() == "IV");
  CHECK_THROWS_AS(KodairaType::parse("I0"), ParseError);
  CHECK_THROWS_AS(KodairaType::parse("V"), ParseError);
  CHECK_THROWS_AS(KodairaType::parse("I*x"), ParseError);
  CHECK_THROWS_AS(KodairaType::parse(""), ParseError);

  CHECK(HalfPencil::parse("irr") == HalfPencil{false, 0});
  CHECK(HalfPencil::parse("I_3") == HalfPencil{true, 3});
  CHECK(HalfPencil::parse("I3") == HalfPencil{true, 3});
  CHECK_THROWS_AS(HalfPencil::parse("II"), ParseError);
  CHECK_THROWS_AS(HalfPencil::parse("I_0"), ParseError);
}

TEST_CASE("component counts and Euler numbers") {
  CHECK(component_count(KodairaType::parse("I1")) == 1);
  CHECK(component_count(KodairaType::parse("I7")) == 7);
  CHECK(component_count(KodairaType::parse("II")) == 1);
  CHECK(component_count(KodairaType::parse("III")) == 2);
  CHECK(component_count(KodairaType::parse("IV")) == 3);
  CHECK(component_count(KodairaType::parse("I*0")) == 5);
  CHECK(component_count(KodairaType::parse("I*4")) == 9);
  CHECK(component_count(KodairaType::parse("IV*")) == 7);
  CHECK(component_count(KodairaType::parse("III*")) == 8);
  CHECK(component_count(KodairaType::parse("II*")) == 9);

  CHECK(euler_number(KodairaType::parse("I6")) == 6);
  CHECK(euler_number(KodairaType::parse("II")) == 2);
  CHECK(euler_number(KodairaType::parse("III")) == 3);
  CHECK(euler_number(KodairaType::parse("IV")) == 4);
  CHECK(euler_number(KodairaType::parse("I*2")) == 8);
  CHECK(euler_number(KodairaType::parse("IV*")) == 8);
  CHECK(euler_number(KodairaType::parse("III*")) == 9);
  CHECK(euler_number(KodairaType::parse("II*")) == 10);
}

TEST_CASE("euler sums") {
  CHECK(euler_sum(make_fibration(std::vector<std::string>(12, "I1"))) == 12);
  CHECK(euler_sum(make_fibration({"II*", "I1", "I1"})) == 12);
  CHECK(euler_sum(make_fibration({"I8"}, "I_2", "I_2")) == 12);
  CHECK(euler_sum(make_fibration({"I*0", "I*0"})) == 12);
}

TEST_CASE("Shioda-Tate arithmetic") {
  const FibrationData smooth = make_fibration(std::vector<std::string>(12, "I1"));
  CHECK(trivial_lattice_excess(smooth) == 0);
  CHECK(mordell_weil_rank_rational(smooth) == 8);
  CHECK(max_fiber_components(smooth) == 1);
  CHECK(picard_lower_bound_cover(smooth) == 10);

  const FibrationData i2 = make_fibration({"I2"});
  CHECK(trivial_lattice_excess(i2) == 1);
  CHECK(mordell_weil_rank_rational(i2) == 7);
  CHECK(max_fiber_components(i2) == 2);
  CHECK(picard_lower_bound_cover(i2) == 11);

  const FibrationData big = make_fibration({"II*"});
  CHECK(trivial_lattice_excess(big) == 8);
  CHECK(mordell_weil_rank_rational(big) == 0);
  CHECK(picard_lower_bound_cover(big) == 18);

  const FibrationData half = make_fibration({"I5"}, "I_3", "irr");
  CHECK(trivial_lattice_excess(half) == 4 + 2);
  CHECK(max_fiber_components(half) == 5);
  CHECK(picard_lower_bound_cover(half) == 16);

  // I10 alone overflows the rank budget of a rational elliptic surface.
  const FibrationData overflow = make_fibration({"I10"});
  CHECK_THROWS_AS(mordell_weil_rank_rational(overflow), InconsistentFibration);
  CHECK_THROWS_AS(picard_lower_bound_cover(overflow), InconsistentFibration);
}

TEST_CASE("K3-cover fiber doubling") {
  const FibrationData f = make_fibration({"I3", "IV"}, "I_2", "irr");
  const auto cover = k3_cover_fibers(f);
  REQUIRE(cover.size() == 5);
  CHECK(cover[0].to_string() == "I3");
  CHECK(cover[1].to_string() == "I3");
  CHECK(cover[2].to_string() == "IV");
  CHECK(cover[3].to_string() == "IV");
  CHECK(cover[4].to_string() == "I4");  // I_2 half-pencil doubles to I4
}

TEST_CASE("fibration JSON round-trip") {
  const FibrationData f = make_fibration({"I*1", "III", "I4"}, "I_2", "irr");
  const std::string text = fibration_to_json(f);
  const FibrationData back = fibration_from_json(text);
  REQUIRE(back.fibers.size() == 3);
  CHECK(back.fibers[0] == f.fibers[0]);
  CHECK(back.fibers[2] == f.fibers[2]);
  CHECK(back.half_pencils[0] == f.half_pencils[0]);
  CHECK(back.half_pencils[1] == f.half_pencils[1]);

  const std::string path = "/tmp/zch_fibration_test.json";
  {
    std::ofstream out(path);
    out << text;
  }
  const FibrationData loaded = load_fibration(path);
  CHECK(loaded.fibers.size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("fibration parser rejects malformed input") {
  CHECK_THROWS_AS(fibration_from_json("{"), ParseError);
  CHECK_THROWS_AS(fibration_from_json(R"({"fibers": ["I1"]})"), ParseError);
  CHECK_THROWS_AS(fibration_from_json(
                      R"({"fibers": ["Ix"], "half_pencils": ["irr", "irr"]})"),
                  ParseError);
  CHECK_THROWS_AS(
      fibration_from_json(R"({"fibers": [], "half_pencils": ["irr"]})"),
      ParseError);
  CHECK_THROWS_AS(fibration_from_json(
                      R"({"fibers": [], "half_pencils": ["II", "irr"]})"),
                  ParseError);
}

TEST_CASE("finding a meeting (-2)-pair") {
  const IntersectionForm form = enriques_lattice();
  std::vector<IntVec> roots;
  for (int i = 0; i < 4; ++i) {
    IntVec v = IntVec::Zero(10);
    v[i] = 1;
    roots.push_back(v);  // simple roots of the E8(-1) block
  }
  const auto found = meeting_minus2_pair(roots, form);
  REQUIRE(found.has_value());
  CHECK(found->first == 0);
  CHECK(found->second == 1);

  // Two orthogonal roots only.
  const auto none = meeting_minus2_pair({roots[0], roots[2]}, form);
  CHECK_FALSE(none.has_value());

  IntVec not_root = IntVec::Zero(10);
  not_root[8] = 1;  // isotropic
  CHECK_THROWS_AS(meeting_minus2_pair({not_root}, form),
                  PreconditionViolation);
}

TEST_CASE("complement + isotropic pipeline") {
  const IntersectionForm form = enriques_lattice();
  IntVec c1 = IntVec::Zero(10);
  c1[0] = 1;
  IntVec c2 = IntVec::Zero(10);
  c2[1] = 1;
  const ProofPipelineResult r = proof_pipeline_complement_isotropic(c1, c2);
  CHECK(r.complement_basis.size() == 8);
  CHECK(r.complement_signature == Signature{1, 7, 0});
  REQUIRE(r.isotropic.has_value());
  CHECK(pair(*r.isotropic, *r.isotropic, form) == 0);
  CHECK(pair(*r.isotropic, c1, form) == 0);
  CHECK(pair(*r.isotropic, c2, form) == 0);
  CHECK(is_primitive(*r.isotropic));

  // Disjoint roots violate the meeting precondition.
  IntVec c3 = IntVec::Zero(10);
  c3[2] = 1;
  CHECK_THROWS_AS(proof_pipeline_complement_isotropic(c1, c3),
                  PreconditionViolation);
  CHECK_THROWS_AS(proof_pipeline_complement_isotropic(c1, IntVec::Zero(5)),
                  DimensionMismatch);
}
