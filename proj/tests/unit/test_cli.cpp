#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polytor/cli/commands.hpp"

namespace {

namespace fs = std::filesystem;
using polytor::cli::cmd_constants;
using polytor::cli::cmd_run;
using polytor::cli::cmd_tables;
using polytor::cli::ConstantsConfig;
using polytor::cli::RunConfig;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("polytor_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& body) {
  const fs::path path = dir / "config.json";
  std::ofstream(path) << body;
  return path;
}

std::size_t line_count(const fs::path& path) {
  std::ifstream in(path);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

nlohmann::json read_json(const fs::path& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

const char* kSmallConfig = R"({
  "seed": 3,
  "checks": [
    {"name": "lemma1_bridge/small", "instances": 4, "params": {"q": 2, "m_max": 2, "n_max": 3}},
    {"name": "kahane/small", "instances": 4, "params": {"m_max": 2, "n_max": 2}}
  ]
})";

TEST(CliRun, MissingConfigExitsTwo) {
  std::ostringstream out, err;
  RunConfig c;
  c.config_path = "/nonexistent/config.json";
  c.output_dir = scratch("missing");
  EXPECT_EQ(cmd_run(c, out, err), 2);
  EXPECT_FALSE(err.str().empty());
}

TEST(CliRun, MalformedConfigExitsTwo) {
  const auto dir = scratch("malformed");
  std::ostringstream out, err;
  RunConfig c;
  c.config_path = write_config(dir, "{\"checks\": [");
  c.output_dir = dir / "out";
  EXPECT_EQ(cmd_run(c, out, err), 2);
  EXPECT_NE(err.str().find("line"), std::string::npos);
}

TEST(CliRun, FilterSelectsBridgeChecks) {
  const auto dir = scratch("filter");
  std::ostringstream out, err;
  RunConfig c;
  c.config_path = write_config(dir, kSmallConfig);
  c.output_dir = dir / "out";
  c.filter = "lemma1*";
  EXPECT_EQ(cmd_run(c, out, err), 0) << err.str();
  const auto results = read_json(c.output_dir / "results.json");
  const auto& checks = results["payload"]["checks"];
  ASSERT_EQ(checks.size(), 1u);
  EXPECT_EQ(checks[0]["name"], "lemma1_bridge/small");
  std::ifstream csv(c.output_dir / "summary.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "name,lhs,rhs,constant,margin,pass");
  for (std::string line; std::getline(csv, line);) EXPECT_EQ(line.rfind("lemma1_bridge/small", 0), 0u) << line;
}

TEST(CliRun, IdenticalInvocationsGiveIdenticalDigests) {
  const auto dir = scratch("determinism");
  const auto config = write_config(dir, kSmallConfig);
  std::string digests[2];
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out, err;
    RunConfig c;
    c.config_path = config;
    c.output_dir = dir / ("out" + std::to_string(i));
    c.jobs = i == 0 ? 1 : 8;
    c.seed_override = 12345;
    ASSERT_EQ(cmd_run(c, out, err), 0) << err.str();
    const auto results = read_json(c.output_dir / "results.json");
    digests[i] = results["digest"];
    EXPECT_TRUE(results.contains("timestamp"));
  }
  EXPECT_EQ(digests[0], digests[1]);
}

TEST(CliRun, BinaryHonoursEnvironmentSeedAndFlagPrecedence) {
  const auto dir = scratch("binary");
  const auto config = write_config(dir, kSmallConfig);
  auto run = [&](const std::string& env, const std::string& flags, const fs::path& out) {
    const std::string cmd = env + " \"" POLYTOR_CLI_PATH "\" run --config \"" + config.string() + "\" --out \"" +
                            out.string() + "\" " + flags + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  ASSERT_EQ(run("POLYTOR_SEED=7", "", dir / "env"), 0);
  ASSERT_EQ(run("", "--seed 7", dir / "flag"), 0);
  ASSERT_EQ(run("POLYTOR_SEED=8", "--seed 7", dir / "both"), 0);
  ASSERT_EQ(run("", "", dir / "config"), 0);
  const auto digest = [&](const char* sub) { return read_json(dir / sub / "results.json")["digest"]; };
  EXPECT_EQ(digest("env"), digest("flag"));
  EXPECT_EQ(digest("both"), digest("flag"));
  EXPECT_NE(digest("config"), digest("flag"));
  EXPECT_EQ(run("", "--jobs 0", dir / "bad"), 2);
  EXPECT_EQ(run("", "--config /nonexistent.json", dir / "bad"), 2);
}

TEST(CliConstants, EuclideanCotypeIsOne) {
  std::ostringstream out, err;
  ConstantsConfig c;
  c.space_json = R"({"family":"euclidean","dim":2})";
  c.q = 2.0;
  c.budget = 8;
  c.seed = 4;
  ASSERT_EQ(cmd_constants(c, out, err), 0) << err.str();
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_NEAR(j["value"].get<double>(), 1.0, 1e-6);
}

TEST(CliConstants, DomainGuards) {
  std::ostringstream out, err;
  ConstantsConfig c;
  c.space_json = R"({"family":"ellp","p":1,"dim":2})";
  c.q = 1.5;
  EXPECT_EQ(cmd_constants(c, out, err), 2);
  c.q.reset();
  c.p = 2.5;
  EXPECT_EQ(cmd_constants(c, out, err), 2);
  c.p = 1.5;
  c.space_json = "{not json";
  EXPECT_EQ(cmd_constants(c, out, err), 2);
}

TEST(CliConstants, FixedSeedReproduces) {
  ConstantsConfig c;
  c.space_json = R"({"family":"ellp","p":"inf","dim":2})";
  c.q = 2.0;
  c.budget = 6;
  c.seed = 19;
  std::ostringstream a, b, err;
  ASSERT_EQ(cmd_constants(c, a, err), 0);
  ASSERT_EQ(cmd_constants(c, b, err), 0);
  EXPECT_EQ(a.str(), b.str());
}

TEST(CliTables, WritesThreeTables) {
  const auto dir = scratch("tables");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_tables(dir, out, err), 0) << err.str();
  EXPECT_EQ(line_count(dir / "hilbert_growth.csv"), 16u);
  std::size_t stirling_rows = 0;
  for (int m = 1; m <= 40; ++m) stirling_rows += static_cast<std::size_t>(40 / m);
  EXPECT_EQ(line_count(dir / "stirling_ratios.csv"), stirling_rows + 1);
  EXPECT_EQ(line_count(dir / "kahane_ratios.csv"), 1u + 3 * 3 * 2);
}

}  // namespace
