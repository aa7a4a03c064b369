#include <pbundle/cli.hpp>
#include <pbundle/json_io.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace pbundle {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PBUNDLE_TEST_DATA) + "/" + name; }

TEST(CliTest, SegreOutput) {
  const CliRun r = run({"segre", "--n", "3", "--chern", "1,5,15,39", "--deterministic"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(j.at("exit_code"), 0);
  EXPECT_FALSE(j.contains("timing"));
  EXPECT_NE(r.out.find("-14"), std::string::npos);
}

TEST(CliTest, TimingPresentByDefault) {
  const CliRun r = run({"segre", "--n", "2", "--chern", "1,2,3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Json::parse(r.out).contains("timing"));
}

TEST(CliTest, CheckExitCodes) {
  EXPECT_EQ(run({"check", "--params", data("example3_params.json")}).code, kExitOk);
  EXPECT_EQ(run({"check", "--params", data("example3_alpha2_params.json")}).code, kExitMathFailure);
  const CliRun bad = run({"check", "--params", data("malformed_params.json")});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_EQ(bad.err.rfind("error: ", 0), 0u);
  EXPECT_EQ(run({"check", "--params", data("does_not_exist.json")}).code, kExitUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"replay", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "replay", "all"}).code, kExitUsage);
  EXPECT_EQ(run({"segre", "--n", "2", "--chern", "2,0,0"}).code, kExitUsage);
}

TEST(CliTest, ReplayAllDeterministicBytes) {
  const CliRun a = run({"--deterministic", "replay", "all"});
  const CliRun b = run({"--deterministic", "replay", "all"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, EnumerateConfigs) {
  const CliRun d2 = run({"--deterministic", "enumerate", "--config", data("enumerate_d2.json")});
  ASSERT_EQ(d2.code, kExitOk) << d2.err;
  EXPECT_NE(d2.out.find("registry:ex1"), std::string::npos);
  EXPECT_EQ(d2.out, run({"--deterministic", "enumerate", "--config", data("enumerate_d2.json")}).out);

  const CliRun empty = run({"enumerate", "--config", data("enumerate_empty.json")});
  EXPECT_EQ(empty.code, kExitOk) << empty.err;
  EXPECT_EQ(Json::parse(empty.out).at("outputs").at("survivor_count"), 0);

  const CliRun huge = run({"enumerate", "--config", data("enumerate_huge.json")});
  EXPECT_EQ(huge.code, kExitUsage);
  EXPECT_FALSE(huge.err.empty());
  EXPECT_EQ(run({"enumerate", "--config", data("enumerate_d2.json"), "--budget", "1"}).code, kExitUsage);
}

TEST(CliTest, ExamplesVerifyAndExport) {
  EXPECT_EQ(run({"examples", "verify"}).code, kExitOk);
  EXPECT_EQ(run({"examples", "verify", "--id", "2", "--k", "3"}).code, kExitOk);
  EXPECT_EQ(run({"examples", "verify", "--id", "42"}).code, kExitUsage);
  const CliRun ex = run({"--deterministic", "examples", "export", "--max-n", "4"});
  ASSERT_EQ(ex.code, kExitOk) << ex.err;
  EXPECT_NE(ex.out.find("ex3:k=6"), std::string::npos);
}

TEST(CliTest, TableFormats) {
  const CliRun csv = run({"--format", "csv", "segre", "--n", "3", "--chern", "1,5,15,39"});
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  EXPECT_EQ(csv.out.find('{'), std::string::npos);
  EXPECT_NE(csv.out.find(','), std::string::npos);
  const CliRun md = run({"--format", "md", "replay", "thmA_mod9"});
  ASSERT_EQ(md.code, kExitOk) << md.err;
  EXPECT_NE(md.out.find("| "), std::string::npos);
}

TEST(CliTest, OutFile) {
  const std::string path = ::testing::TempDir() + "pbundle_cli_out.json";
  const CliRun r = run({"--deterministic", "--out", path, "replay", "thmC_r3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(Json::parse(buf.str()).at("command").at("name"), "replay");
  std::remove(path.c_str());
}

}  // namespace
}  // namespace pbundle
