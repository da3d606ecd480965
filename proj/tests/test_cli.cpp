#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"

using zimin::cli::App;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  App app;
  int code = app.run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  CliRun r = run(std::move(args));
  EXPECT_EQ(r.err, "");
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, EvalTText) {
  CliRun r = run({"eval-t", "4", "3", "1", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/16\n0.0625\n");
}

TEST(Cli, JsonEnvelope) {
  auto j = nlohmann::ordered_json::parse(run({"eval-t", "2", "2", "2"}).out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"tool", "version", "command", "seed", "precision_bits", "policy",
                                             "result", "verdicts", "exit_code"}));
  EXPECT_EQ(j["tool"], "zimin-bounds");
  EXPECT_EQ(j["result"]["T"]["exact"], "3/8");
  EXPECT_EQ(j["result"]["T"]["decimal"], "0.375");
  EXPECT_EQ(j["exit_code"], 0);
}

TEST(Cli, CsvHasHeaderAndRows) {
  CliRun r = run({"eval-p", "5", "3", "--format", "csv", "--digits", "8"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "m,k,P_lo,P_hi");
  EXPECT_EQ(row.rfind("5,3,", 0), 0u);
  EXPECT_FALSE(std::getline(lines, extra));
}

TEST(Cli, SandwichVerdicts) {
  auto j = run_json({"sandwich", "4", "1"});
  EXPECT_EQ(j["verdicts"]["K(4,1) <= 2 m^(2^i)/m^(i+1)"], "tight");
  EXPECT_EQ(j["verdicts"]["K(4,1) >= (1/21) m^(2^i)/m^(i+1)"], "holds");
  EXPECT_EQ(j["exit_code"], 0);
}

TEST(Cli, PInf) {
  CliRun r = run({"p-inf", "4"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdicts"]["P_inf <= 42"], "holds");
  EXPECT_EQ(j["verdicts"]["ln 41 + 30*3^31/4^30 <= ln 42"], "holds");
  EXPECT_EQ(j["result"]["regime"], "4<=m<=6");
  auto large = run_json({"p-inf", "9"});
  EXPECT_EQ(large["verdicts"]["ln 5 + 2/21 <= ln 42"], "holds");
}

TEST(Cli, Words) {
  auto j = run_json({"check-word", "programmable", "aab"});
  EXPECT_EQ(j["result"]["contains"], true);
  EXPECT_EQ(j["result"]["witness"]["segments"], (nlohmann::json{"am", "ma", "ble"}));
  auto none = run_json({"check-word", "aabb", "aba"});
  EXPECT_EQ(none["result"]["contains"], false);
  EXPECT_TRUE(none["result"]["witness"].is_null());
  auto csv = run_json({"check-word", "0,1,1,0", "1,2,1"});
  EXPECT_EQ(csv["result"]["contains"], true);
  EXPECT_EQ(run_json({"zimin", "3"})["result"]["length"], 7);
  auto lab = run_json({"lab-search", "2", "2"});
  EXPECT_EQ(lab["result"]["L"], 5);
  EXPECT_EQ(lab["result"]["longest_avoider"].get<std::string>().size(), 7u);  // "0,0,1,1"
}

TEST(Cli, MonteCarloRecordsSeedAndGenerator) {
  auto j = run_json({"mc-t", "3", "2", "2", "--samples", "2000", "--seed", "77"});
  EXPECT_EQ(j["seed"], 77);
  EXPECT_EQ(j["policy"]["generator"], "mt19937_64");
  EXPECT_EQ(j["result"]["samples"], 2000);
  auto again = run_json({"mc-t", "3", "2", "2", "--samples", "2000", "--seed", "77"});
  EXPECT_EQ(j, again);
  auto other = run_json({"mc-t", "3", "2", "2", "--samples", "2000", "--seed", "78"});
  EXPECT_NE(j["result"]["hits"], other["result"]["hits"]);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"eval-s", "5", "4"},
      {"eval-k", "6", "3", "--precision", "256"},
      {"sandwich-grid", "--m", "4..5", "--i", "1..3"},
      {"lab-table", "--m", "5", "--i", "1..4"},
      {"mc-t", "4", "2", "3", "--samples", "5000", "--seed", "1"},
  };
  for (const auto& c : commands) {
    CliRun a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, PolicyFlags) {
  auto fixed = run_json({"eval-s", "5", "2", "--a-max", "4"});
  EXPECT_EQ(fixed["policy"]["a_max"], 4);
  EXPECT_EQ(fixed["result"]["terms_summed"], 25);
  auto adaptive = run_json({"eval-s", "5", "4", "--width", "1/1000000"});
  EXPECT_EQ(adaptive["result"]["target_met"], true);
  EXPECT_EQ(adaptive["policy"]["target_width"], "1/1000000");
  EXPECT_EQ(run({"eval-s", "5", "2", "--a-max", "4", "--width", "0.1"}).code, 3);
}

TEST(Cli, ConfigFile) {
  auto cfg = temp_file("zimin_cli_cfg.json", R"({"a_max": 3, "precision_bits": 192})");
  auto j = run_json({"eval-s", "4", "2", "--config", cfg.string()});
  EXPECT_EQ(j["policy"]["a_max"], 3);
  EXPECT_EQ(j["precision_bits"], 192);
  // flags win over the file
  auto k = run_json({"eval-s", "4", "2", "--config", cfg.string(), "--a-max", "5"});
  EXPECT_EQ(k["policy"]["a_max"], 5);

  auto bad = temp_file("zimin_cli_bad.json", R"({"a_maxx": 3})");
  CliRun r = run({"eval-s", "4", "2", "--config", bad.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("unknown config key"), std::string::npos);
  EXPECT_EQ(run({"eval-s", "4", "2", "--config", "/nonexistent/cfg.json"}).code, 3);
}

TEST(Cli, OutFile) {
  auto path = std::filesystem::temp_directory_path() / "zimin_cli_out.json";
  std::filesystem::remove(path);
  CliRun r = run({"zimin", "2", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["result"]["pattern"], "v1 v2 v1");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"no-such-command"}).code, 3);
  EXPECT_EQ(run({"eval-t", "4", "3"}).code, 3);
  EXPECT_EQ(run({"eval-t", "0", "1", "1"}).code, 3);
  EXPECT_EQ(run({"eval-s", "3", "2"}).code, 3);
  EXPECT_EQ(run({"zimin", "0"}).code, 3);
  EXPECT_EQ(run({"eval-t", "4", "3", "1", "--format", "xml"}).code, 3);
  EXPECT_EQ(run({"sandwich-grid", "--m", "8..4"}).code, 3);
  EXPECT_EQ(run({"eval-k", "4", "2", "--precision", "8"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}
