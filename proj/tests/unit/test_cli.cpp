#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "parhiggs/json_codec.hpp"
#include "parhiggs/lambda_connection.hpp"

using namespace parhiggs;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

CliResult run(const std::string& args) {
  std::string command = std::string(PARHIGGS_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("parhiggs_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

const char* kSection = "hitchin-section --alpha 1/8,1/6,1/5,1/4 --I 3,4 --mu 1/2,1/3,0,1 --t 2";

}  // namespace

TEST(Cli, ChamberCensus) {
  CliResult r = run("chambers --grid 40 --golden-dir " PARHIGGS_GOLDEN_DIR);
  ASSERT_EQ(r.exit_code, 0);
  Json j = r.json();
  EXPECT_EQ(j["schema"], "parhiggs.report/1");
  EXPECT_EQ(j["outputs"]["chamber_count"], 24);
  EXPECT_EQ(j["outputs"]["stable_bundle_chambers"], 16);
  EXPECT_EQ(j["verification"]["golden_match"], true);
}

TEST(Cli, GoldenDirFromEnvironment) {
  setenv("PARHIGGS_GOLDEN_DIR", PARHIGGS_GOLDEN_DIR, 1);
  CliResult r = run("chambers --grid 40");
  unsetenv("PARHIGGS_GOLDEN_DIR");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json()["verification"]["golden_match"], true);
}

TEST(Cli, AtlasSlice) {
  std::string csv = temp_path("slice.csv");
  CliResult r = run("chambers --grid 20 --slice 1/5,1/4 --csv " + csv);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json()["outputs"]["atlas_rows"], 81);
  std::ifstream in(csv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 82);
  EXPECT_EQ(run("chambers --grid 20 --slice 1/5,1/4").exit_code, 2);
}

TEST(Cli, FixedPoints) {
  CliResult r = run("fixed-points --alpha 1/8,1/6,1/5,1/4");
  ASSERT_EQ(r.exit_code, 0);
  Json j = r.json();
  EXPECT_EQ(j["outputs"]["component_count"], 5);
  EXPECT_EQ(j["outputs"]["exterior"].size(), 4u);
  EXPECT_EQ(j["outputs"]["central"]["kind"], "stable-bundle");
  EXPECT_EQ(j["verified"], true);
}

TEST(Cli, Tables) {
  CliResult cl = run("tables --rule cl --alpha 1/4,1/8,1/6,1/5 --mu 0,0,0,0 --hbar 1");
  ASSERT_EQ(cl.exit_code, 0);
  Json t = cl.json()["outputs"]["transformed"];
  EXPECT_EQ(t["alpha"], Json({"1/4", "1/8", "1/6", "1/5"}));
  EXPECT_EQ(t["mu"], Json({"1/4", "1/8", "1/6", "1/5"}));
  CliResult nah = run("tables --rule nah --alpha 1/4,1/8,1/6,1/5 --mu 1/8,0,0,0");
  Json n = nah.json()["outputs"]["transformed"];
  EXPECT_EQ(n["alpha"][0], "0");
  EXPECT_EQ(n["mu"][0], "1/4");
  CliResult sampled = run("--seed 5 tables --rule lambda --lambda i --alpha 1/4,1/8,1/6,1/5 --mu 1/2,0,0,0 --samples 50");
  EXPECT_EQ(sampled.exit_code, 0);
  EXPECT_EQ(sampled.json()["verification"]["random_identities"], true);
  EXPECT_EQ(run("tables --rule other --alpha 1/4,1/8,1/6,1/5 --mu 0,0,0,0").exit_code, 2);
}

TEST(Cli, HitchinSectionRoundTrip) {
  CliResult r = run(kSection);
  ASSERT_EQ(r.exit_code, 0);
  Json j = r.json();
  EXPECT_EQ(j["outputs"]["branch"], "deg-2");
  EXPECT_EQ(j["verified"], true);
  for (const auto& [key, value] : j["verification"].items()) EXPECT_EQ(value, true) << key;
  Json conn = j["outputs"]["connection"];
  EXPECT_EQ(encode(decode_connection(conn)), conn);
}

TEST(Cli, ReportsAreDeterministic) {
  EXPECT_EQ(run(kSection).out, run(kSection).out);
  std::string seeded = "hitchin-section --alpha 1/8,1/6,1/5,1/4 --I 3,4 --mu 1/2,1/3,0,1";
  CliResult a = run("--seed 9 " + seeded);
  CliResult b = run(seeded + " --seed 9");
  CliResult c = run("--seed 10 " + seeded);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.json()["inputs"]["t"], c.json()["inputs"]["t"]);
  EXPECT_FALSE(a.json().contains("timing"));
  Json timed = run(std::string(kSection) + " --timing").json();
  EXPECT_TRUE(timed["timing"]["wall_ms"].is_number_integer());
}

TEST(Cli, StabilityAndLimitFromReport) {
  std::string report = write_temp("section.json", run(kSection).out);
  CliResult s = run("stability --input " + report);
  ASSERT_EQ(s.exit_code, 0);
  EXPECT_EQ(s.json()["outputs"]["stable"], true);
  CliResult c = run("climit --input " + report);
  ASSERT_EQ(c.exit_code, 0);
  Json limit = c.json()["outputs"];
  EXPECT_EQ(limit["steps"], 1);
  EXPECT_EQ(limit["invariants"]["subset"], Json({3, 4}));
  EXPECT_EQ(c.json()["verification"]["matches_hn_limit"], true);
  CliResult hn = run("climit --filtration hn --input " + report);
  EXPECT_EQ(hn.json()["outputs"]["steps"], 0);
  EXPECT_EQ(hn.json()["outputs"]["invariants"], limit["invariants"]);
}

TEST(Cli, BareConnectionInput) {
  Json conn = run(kSection).json()["outputs"]["connection"];
  std::string path = write_temp("connection.json", conn.dump());
  CliResult s = run("stability --input " + path);
  ASSERT_EQ(s.exit_code, 0);
  EXPECT_EQ(s.json()["inputs"]["connection"], conn);
}

TEST(Cli, OperCheck) {
  CliResult r = run("oper-check --input " PARHIGGS_SAMPLES_DIR "/connection_lambda1.json --I 1,2,3,4");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json()["outputs"]["oper"], true);
  CliResult twisted = run("oper-check --input " PARHIGGS_SAMPLES_DIR "/connection_lambda1.json --I 3,4");
  EXPECT_EQ(twisted.json()["outputs"]["oper"], false);
  CliResult higgs = run("oper-check --input " PARHIGGS_SAMPLES_DIR "/hitchin_I34.json --I 3,4");
  EXPECT_EQ(higgs.exit_code, 1);
  EXPECT_EQ(higgs.json()["error"]["type"], "InvalidInput");
}

TEST(Cli, Cone) {
  CliResult r = run("cone --alpha 1/8,1/8,1/8,1/8 --I none");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json()["outputs"]["area_over_pi"], "1/2");
  CliResult negative = run("cone --alpha 1/4,1/4,1/4,1/4 --I 1,2,3,4");
  EXPECT_EQ(negative.exit_code, 1);
  EXPECT_EQ(negative.json()["error"]["type"], "NegativeArea");
}

TEST(Cli, DomainErrors) {
  CliResult wall = run("fixed-points --alpha 1/8,1/8,1/8,1/8");
  EXPECT_EQ(wall.exit_code, 1);
  Json j = wall.json();
  EXPECT_EQ(j["error"]["type"], "OnWall");
  EXPECT_TRUE(j["error"]["wall"].is_number_integer());
  EXPECT_EQ(j["command"], "fixed-points");
  CliResult cond = run("hitchin-section --alpha 1/8,1/6,1/5,1/4 --I 1,2 --mu 0,0,0,0 --t 1");
  EXPECT_EQ(cond.exit_code, 1);
  EXPECT_EQ(cond.json()["error"]["type"], "ConditionViolated");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("fixed-points").exit_code, 2);
  EXPECT_EQ(run("fixed-points --alpha 1/8,1/6").exit_code, 2);
  EXPECT_EQ(run("fixed-points --alpha x,1/6,1/5,1/4").exit_code, 2);
  EXPECT_EQ(run("fixed-points --alpha 0,1/6,1/5,1/4").exit_code, 2);
  EXPECT_EQ(run("cone --alpha 1/8,1/6,1/5,1/4 --I 5").exit_code, 2);
  EXPECT_EQ(run("stability --input /nonexistent.json").exit_code, 2);
  EXPECT_EQ(run("stability --input " + write_temp("bad.json", "{\"lambda\": 0}")).exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}
