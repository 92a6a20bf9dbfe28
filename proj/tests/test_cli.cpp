#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "arcforge/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = arcforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("arcforge_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, ConstructHermitian) {
  const auto r = run({"construct", "--family", "hermitian", "--p", "3", "--m", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["k"], 28);
  EXPECT_EQ(j["d"], 4);
}

TEST(Cli, ConstructFermatD) {
  const auto r = run({"construct", "--family", "fermat-d", "--p", "3", "--n", "3", "--e", "1", "--a", "[1]", "--b",
                      "[1]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("k      208"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("d      13"), std::string::npos) << r.out;
}

TEST(Cli, ConstructRejectsCharacteristicTwo) {
  const auto r = run({"construct", "--family", "fermat-qm1", "--p", "2", "--n", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("p >= 3 required"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "nope", "--p", "3"}).code, 2);
  EXPECT_EQ(run({"certify", "--family", "hermitian", "--p", "3", "--m", "1", "--checks", "arc,wat"}).code, 2);
  EXPECT_EQ(run({"repro-paper", "--only", "nope"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ConstructWritesFilesThatCertifyReads) {
  const auto dir = temp_dir();
  const auto curve = dir / "herm.curve";
  const auto points = dir / "herm.points";
  const auto r = run({"construct", "--family", "hermitian", "--p", "3", "--m", "1", "--curve-out", curve.string(),
                      "--points-out", points.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string pts = slurp(points);
  EXPECT_EQ(std::count(pts.begin(), pts.end(), '\n'), 28);
  const auto c = run({"certify", "--curve", curve.string(), "--checks", "arc,complete"});
  ASSERT_EQ(c.code, 0) << c.err << c.out;
  const auto j = nlohmann::json::parse(c.out);
  EXPECT_EQ(j["k"], 28);
  EXPECT_EQ(j["source"], "curve-file");
  std::filesystem::remove_all(dir);
}

TEST(Cli, CertifyHermitianAllChecks) {
  const auto r = run({"certify", "--family", "hermitian", "--p", "3", "--m", "1", "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["is_complete"], true);
  EXPECT_EQ(j["frobenius"]["verdict"], "nonclassical");
  EXPECT_EQ(j["epsilon"]["value"], 3);
  EXPECT_EQ(j["passed"], true);
}

TEST(Cli, CertifyExpectationDrivesExitCode) {
  // The q = 8 char-2 arc is incomplete: (1:1:1) can be added.
  const std::vector<std::string> base{"certify", "--family", "char2", "--n", "3", "--checks", "arc,complete"};
  auto args = base;
  EXPECT_EQ(run(args).code, 1);
  args.insert(args.end(), {"--expect", "incomplete"});
  EXPECT_EQ(run(args).code, 0);
  args = base;
  args.insert(args.end(), {"--expect", "complete"});
  const auto r = run(args);
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["is_complete"], false);
  EXPECT_EQ(j["counterexample"], nlohmann::json::parse("[[1,0,0],[1,0,0],[1,0,0]]"));
}

TEST(Cli, CertifyIsByteIdentical) {
  const std::vector<std::string> args{"certify", "--family", "fermat-d", "--p", "3", "--n", "3", "--e", "1"};
  const auto a = run(args);
  auto args_jobs = args;
  args_jobs.insert(args_jobs.end(), {"--jobs", "3"});
  const auto b = run(args_jobs);
  ASSERT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CertifyGolden) {
  const auto r = run({"certify", "--family", "hermitian", "--p", "3", "--m", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(std::filesystem::path(ARCFORGE_TEST_DATA_DIR) / "golden" / "hermitian_q9.json"));
}

TEST(Cli, Criteria) {
  auto r = run({"criteria", "--check", "thmB", "--d", "13", "--q", "27", "--eps", "3"});
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["lhs"], 156);
  EXPECT_EQ(j["rhs"], 84);

  r = run({"criteria", "--check", "thm41", "--k", "28", "--d", "4", "--eps", "3", "--q", "9"});
  EXPECT_EQ(r.code, 0);
  r = run({"criteria", "--check", "lemma21", "--d", "8", "--q", "9", "--k", "64", "--classical"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "hypothesis_violated");
  r = run({"criteria", "--check", "lambda", "--q", "125", "--eps", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["lambdas"], nlohmann::json::array({3, 4}));
  r = run({"criteria", "--check", "dual", "--d", "5", "--eps", "3"});
  EXPECT_EQ(r.code, 2);
  r = run({"criteria", "--check", "thmB", "--d", "13"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, ReproFiltering) {
  const auto r = run({"repro-paper", "--only", "thmA2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["q"], 9);
  EXPECT_EQ(j["rows"][1]["q"], 27);
  const auto small = nlohmann::json::parse(run({"repro-paper", "--only", "thmA1", "--q-max", "9", "--format", "json"}).out);
  for (const auto& row : small["rows"]) EXPECT_LE(row["q"].get<int>(), 9);
}
