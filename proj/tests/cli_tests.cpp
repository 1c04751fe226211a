// End-to-end checks of the zchamber binary (path passed as argv[1]).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

json run_json(const std::string& args, int expected_exit = 0) {
  const RunResult r = run("--json " + args);
  CHECK(r.exit_code == expected_exit);
  return json::parse(r.output);
}

}  // namespace

TEST_CASE("catalog lists the builtin models") {
  const json j = run_json("catalog");
  CHECK(j["status"] == "ok");
  bool has_cubic = false, has_quartic = false;
  for (const auto& m : j["models"]) {
    if (m["name"] == "cubic_surface") {
      has_cubic = true;
      CHECK(m["curves"] == 27);
    }
    if (m["name"] == "quartic_Y4") has_quartic = true;
  }
  CHECK(has_cubic);
  CHECK(has_quartic);
}

TEST_CASE("decompose reports exact rationals") {
  const json j = run_json("decompose quartic_Y4 1,1,0");
  CHECK(j["status"] == "ok");
  CHECK(j["volume"] == "9/2");
  CHECK(j["big"] == true);
  CHECK(j["support"] == json::array({"l'"}));
  CHECK(j["negative_coeffs"]["l'"] == "1/2");
  CHECK(j["positive"] == json::array({"1", "1/2", "0"}));
}

TEST_CASE("criterion verdicts") {
  CHECK(run_json("criterion cubic_surface")["verdict"] == "determined");
  const json q = run_json("criterion quartic_Y4");
  CHECK(q["verdict"] == "not_determined");
  CHECK(q["witnesses"] == json::array({json::array({"l'", "l''"})}));
  const json m = run_json("criterion meeting_lines_4");
  CHECK(m["verdict"] == "not_determined");
  CHECK(m["curve_list_complete_caveat"] == true);
}

TEST_CASE("counterexample report on the quartic") {
  const json j = run_json("counterexample quartic_Y4 \"l'\" \"l''\"");
  CHECK(j["status"] == "ok");
  CHECK(j["T1"] == json::array({"3", "3", "3"}));
  CHECK(j["D1"] == json::array({"3", "6", "6"}));
  CHECK(j["D2"] == json::array({"3", "4", "7"}));
  CHECK(j["D2_dot_c1"] == "2");
  CHECK(j["D2_dot_c2"] == "-7");
  CHECK(j["support_D1"] == j["support_D2"]);
  CHECK(j["weyl_D1"] != j["weyl_D2"]);
  CHECK(j["verified"] == true);
}

TEST_CASE("census is reproducible and sees the injected witnesses") {
  const std::string args =
      "census quartic_Y4 --n 80 --seed 11 --inject 3,6,6 --inject 3,4,7";
  const RunResult a = run("--json " + args);
  const RunResult b = run("--json " + args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const json j = json::parse(a.output);
  bool found = false;
  for (const auto& entry : j["summary"])
    if (entry["support"] == json::array({"l'", "l''"}) &&
        entry["signatures"].size() >= 2)
      found = true;
  CHECK(found);
}

TEST_CASE("enriques-check on a fibration file") {
  const std::string path = "/tmp/zch_cli_fibration.json";
  {
    std::ofstream out(path);
    out << R"({"fibers": ["I3", "I5"], "half_pencils": ["irr", "irr"]})";
  }
  const json j = run_json(std::string("enriques-check ") + path);
  CHECK(j["status"] == "ok");
  CHECK(j["max_fiber_components"] == 5);
  CHECK(j["trivial_lattice_excess"] == 6);
  CHECK(j["mordell_weil_rank"] == 2);
  CHECK(j["picard_lower_bound_cover"] == 16);
  CHECK(j["condition_b_holds"] == false);
  std::remove(path.c_str());
}

TEST_CASE("lattice subcommands") {
  const json sig = run_json("lattice signature enriques");
  CHECK(sig["signature"]["positive"] == 1);
  CHECK(sig["signature"]["negative"] == 9);
  CHECK(sig["signature"]["zero"] == 0);

  const json comp = run_json(
      "lattice complement enriques 1,0,0,0,0,0,0,0,0,0 0,1,0,0,0,0,0,0,0,0");
  CHECK(comp["basis"].size() == 8);
  CHECK(comp["signature"]["positive"] == 1);
  CHECK(comp["signature"]["negative"] == 7);

  const json iso = run_json("lattice isotropic enriques --bound 1");
  CHECK(iso["isotropic"].is_array());
}

TEST_CASE("model files work as command inputs") {
  const std::string path = "/tmp/zch_cli_model.json";
  {
    const RunResult shown = run("--json show quartic_Y4");
    CHECK(shown.exit_code == 0);
    json j = json::parse(shown.output);
    j.erase("status");
    std::ofstream out(path);
    out << j.dump();
  }
  const json j = run_json(std::string("criterion ") + path);
  CHECK(j["verdict"] == "not_determined");
  std::remove(path.c_str());
}

TEST_CASE("domain errors exit 1 with a structured payload") {
  const RunResult r = run("--json decompose quartic_Y4 -- -1,0,0");
  CHECK(r.exit_code == 1);
  const json j = json::parse(r.output);
  CHECK(j["status"] == "error");
  CHECK(j.contains("offending_curves"));

  const RunResult bad_rat = run("--json decompose quartic_Y4 1.5,0,0");
  CHECK(bad_rat.exit_code == 1);
  CHECK(json::parse(bad_rat.output)["status"] == "error");

  const RunResult missing = run("--json show no_such_model_anywhere");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("no-such-subcommand").exit_code == 2);
  CHECK(run("decompose").exit_code == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-zchamber>\n");
    return 2;
  }
  g_binary = argv[1];
  doctest::Context context;
  context.applyCommandLine(1, argv);
  return context.run();
}
