#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "asep2/measure.hpp"
#include "cli.hpp"

using asep2::cli::run_cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(CliVerify, AlgebraPasses) {
  const Outcome o = call({"verify", "algebra", "--sites", "2"});
  EXPECT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  ASSERT_TRUE(j.is_array());
  std::set<std::string> names;
  for (const auto& r : j) {
    EXPECT_TRUE(r["holds"].get<bool>()) << r["relation"];
    EXPECT_TRUE(r["first_mismatch"].is_null());
    EXPECT_EQ(r["L"], 2);
    names.insert(r["relation"].get<std::string>());
  }
  EXPECT_EQ(names.size(), j.size());
}

TEST(CliVerify, SizeLimits) {
  EXPECT_EQ(call({"verify", "algebra", "--sites", "0"}).code, 2);
  EXPECT_EQ(call({"verify", "algebra", "--sites", "6"}).code, 2);
  EXPECT_EQ(call({"verify", "symmetry", "--sites", "7"}).code, 2);
  EXPECT_EQ(call({"verify", "algebra"}).code, 2);
  EXPECT_EQ(call({"verify"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(CliVerify, SymmetryPasses) {
  for (const char* L : {"2", "4"}) {
    const Outcome o = call({"verify", "symmetry", "--sites", L});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_TRUE(o.err.empty());
  }
}

TEST(CliVerify, CorruptedRateFails) {
  // Entry (0A, A0) of H at L = 2 is the rate of A0 -> 0A.
  const Outcome o = call({"verify", "symmetry", "--sites", "2", "--corrupt", "H:4,2"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("failed: G = R^-1 H R"), std::string::npos) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  bool found = false;
  for (const auto& r : j)
    if (r["relation"] == "G = R^-1 H R") {
      found = true;
      EXPECT_FALSE(r["holds"].get<bool>());
      EXPECT_EQ(r["first_mismatch"]["row"], 4);
      EXPECT_EQ(r["first_mismatch"]["col"], 2);
    }
  EXPECT_TRUE(found);
}

TEST(CliVerify, CorruptedRepresentationFails) {
  const Outcome o = call({"verify", "algebra", "--sites", "2", "--corrupt", "X1+:1,2"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("[X1+, X1-]"), std::string::npos) << o.err;
  EXPECT_EQ(call({"verify", "algebra", "--sites", "2", "--corrupt", "H:1,1"}).code, 2);
  EXPECT_EQ(call({"verify", "algebra", "--sites", "2", "--corrupt", "X1+:10,1"}).code, 2);
  EXPECT_EQ(call({"verify", "algebra", "--sites", "2", "--corrupt", "garbage"}).code, 2);
}

TEST(CliStationary, ExponentsAndNormalization) {
  const Outcome o = call({"stationary", "--sites", "2", "--n", "1", "--m", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["weights"][0]["config"], "AB");
  EXPECT_EQ(j["weights"][0]["q_exponent"], -1);
  EXPECT_EQ(j["weights"][1]["config"], "BA");
  EXPECT_EQ(j["weights"][1]["q_exponent"], 1);

  EXPECT_EQ(nlohmann::json::parse(call({"stationary", "--sites", "4", "--n", "1", "--m", "1"}).out)["weights"].size(), 12u);

  const Outcome n = call({"stationary", "--sites", "2", "--n", "1", "--m", "0", "--q", "2", "--normalize", "--format", "csv"});
  ASSERT_EQ(n.code, 0);
  std::istringstream lines(n.out);
  std::string header, a0, zero_a;
  std::getline(lines, header);
  std::getline(lines, a0);
  std::getline(lines, zero_a);
  EXPECT_EQ(header, "config,q_exponent,value");
  EXPECT_NEAR(std::stod(a0.substr(a0.rfind(',') + 1)), 0.2, 1e-15);
  EXPECT_NEAR(std::stod(zero_a.substr(zero_a.rfind(',') + 1)), 0.8, 1e-15);

  EXPECT_EQ(call({"stationary", "--sites", "2", "--n", "1", "--m", "0", "--normalize"}).code, 2);
  EXPECT_EQ(call({"stationary", "--sites", "2", "--n", "2", "--m", "1"}).code, 2);
  EXPECT_EQ(call({"stationary", "--sites", "2", "--n", "1", "--m", "0", "--q", "-1"}).code, 2);
  EXPECT_EQ(call({"stationary", "--sites", "2", "--n", "1", "--m", "0", "--format", "xml"}).code, 2);
}

TEST(CliStationary, GoldenAgainstTables) {
  for (const auto& table : asep2::appendix_tables()) {
    const Outcome o = call({"stationary", "--sites", std::to_string(table.L), "--n", std::to_string(table.sector.N), "--m",
                            std::to_string(table.sector.M)});
    ASSERT_EQ(o.code, 0);
    std::map<std::string, int> expected;
    for (const auto& [e, list] : table.terms)
      for (const auto& c : list) expected[c] = e;
    const auto j = nlohmann::json::parse(o.out);
    ASSERT_EQ(j["weights"].size(), expected.size());
    for (const auto& w : j["weights"]) EXPECT_EQ(w["q_exponent"].get<int>(), expected.at(w["config"].get<std::string>()));
  }
}

TEST(CliCheck, TablesAndPartition) {
  EXPECT_EQ(call({"check", "appendix"}).code, 0);
  EXPECT_EQ(call({"check", "partition", "--sites", "5"}).code, 0);
  EXPECT_EQ(call({"check", "partition", "--sites", "1"}).code, 0);
  EXPECT_EQ(call({"check", "measure", "--sites", "3"}).code, 0);
  EXPECT_EQ(call({"check", "entrywise", "--sites", "2"}).code, 0);
  EXPECT_EQ(call({"check", "partition", "--sites", "0"}).code, 2);
}

TEST(CliSimulate, CompareAndDeterminism) {
  const std::vector<std::string> args = {"simulate", "--sites", "3", "--n", "1", "--m", "1", "--q", "1.5",
                                         "--t-max", "1e6", "--compare", "--format", "json"};
  const Outcome o = call(args);
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_LT(j["tv_distance"].get<double>(), 0.01);

  const std::vector<std::string> small = {"simulate", "--sites", "3", "--n", "1", "--m", "1", "--q", "1.5", "--t-max", "1000", "--seed", "9"};
  const Outcome a = call(small), b = call(small);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(count_lines(a.out), 7u);
}

TEST(CliSimulate, AbsorbingWarning) {
  const Outcome o = call({"simulate", "--sites", "2", "--n", "2", "--m", "0", "--q", "2", "--t-max", "10"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.err.find("absorbing"), std::string::npos);
}

TEST(CliSimulate, BadFlags) {
  EXPECT_EQ(call({"simulate", "--sites", "3", "--n", "1", "--m", "1", "--q", "1.5", "--t-max", "10", "--events", "10"}).code, 2);
  EXPECT_EQ(call({"simulate", "--sites", "3", "--n", "1", "--m", "1"}).code, 2);
  EXPECT_EQ(call({"simulate", "--sites", "3", "--n", "3", "--m", "1", "--q", "1.5"}).code, 2);
  EXPECT_EQ(call({"simulate", "--sites", "3", "--n", "1", "--m", "1", "--q", "1.5", "--burn-in", "1.5"}).code, 2);
  EXPECT_EQ(call({"simulate", "--sites", "3", "--n", "1", "--m", "1", "--q", "1.5", "--events", "2.5"}).code, 2);
  EXPECT_EQ(call({"simulate", "--sites", "3", "--n", "1", "--m", "1", "--q", "1.5", "--initial", "AAB"}).code, 2);
}

TEST(CliSimulate, SummaryFile) {
  const auto dir = std::filesystem::temp_directory_path() / "asep2_cli_test";
  std::filesystem::create_directories(dir);
  const auto explicit_path = dir / "explicit.json";
  ASSERT_EQ(call({"simulate", "--sites", "2", "--n", "1", "--m", "0", "--q", "2", "--t-max", "100", "--summary",
                  explicit_path.string()})
                .code,
            0);
  std::ifstream f(explicit_path);
  ASSERT_TRUE(f.good());
  const auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["rng"], "mt19937_64");

  ::setenv("ASEP2_OUTPUT_DIR", dir.string().c_str(), 1);
  std::filesystem::remove(dir / "simulate_summary.json");
  EXPECT_EQ(call({"simulate", "--sites", "2", "--n", "1", "--m", "0", "--q", "2", "--t-max", "100"}).code, 0);
  ::unsetenv("ASEP2_OUTPUT_DIR");
  EXPECT_TRUE(std::filesystem::exists(dir / "simulate_summary.json"));
  std::filesystem::remove_all(dir);
}

TEST(CliDump, Targets) {
  const Outcome h = call({"dump", "generator", "--sites", "2"});
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(count_lines(h.out), 12u);
  EXPECT_NE(h.out.find("2 2 1*q^1\n"), std::string::npos);
  EXPECT_NE(h.out.find("4 2 -1*q^1\n"), std::string::npos);
  EXPECT_EQ(count_lines(call({"dump", "rmatrix", "--sites", "2"}).out), 9u);
  EXPECT_EQ(call({"dump", "perk-schultz", "--sites", "2", "--q1"}).out, call({"dump", "generator", "--sites", "2", "--q1"}).out);
  EXPECT_EQ(call({"dump", "rep", "X1+", "--sites", "1"}).out, "1 2 1*q^0\n");
  EXPECT_EQ(call({"dump", "rep", "Y2-", "--sites", "2"}).code, 0);
  EXPECT_EQ(call({"dump", "rep", "Z1+", "--sites", "2"}).code, 2);
  EXPECT_EQ(call({"dump", "bogus", "--sites", "2"}).code, 2);
}
