#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "crnsim/experiment.hpp"

using namespace crnsim;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n_cr = 25;
  c.n_pr = 10;
  c.runs = 40;
  c.area_side = 500.0;
  c.radius = 220.0;
  return c;
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("defaults reproduce the 5-channel scenario") {
  const ExperimentConfig c;
  CHECK(c.n_cr == 70);
  CHECK(c.n_pr == 30);
  CHECK(c.channels == 5);
  CHECK(c.acs_size == 3);
  CHECK(c.beta == 10);
  CHECK(c.tau_t == 6);
  CHECK(c.resolved_ttl() == 6);
  CHECK(c.runs == 1000);
  CHECK(c.strategies.size() == 4);
}

TEST_CASE("json config parsing") {
  const auto c = ExperimentConfig::from_json_text(
      R"({"channels": 15, "acs_size": 8, "beta": 18, "ttl": "auto", "strategies": ["SURF", "CA"]})");
  CHECK(c.channels == 15);
  CHECK(c.acs_size == 8);
  CHECK(c.beta == 18);
  CHECK(c.resolved_ttl() == 6);
  CHECK(c.strategies == std::vector<StrategyKind>{StrategyKind::SURF, StrategyKind::CA});

  CHECK_THROWS(ExperimentConfig::from_json_text(R"({"acs_size": 9})"));
  CHECK_THROWS(ExperimentConfig::from_json_text(R"({"runs": 0})"));
  CHECK_THROWS(ExperimentConfig::from_json_text(R"({"ttl": "sometimes"})"));
  CHECK_THROWS(ExperimentConfig::from_json_text(R"({"activity_prob": 1.5})"));
}

TEST_CASE("child seeds are pairwise distinct") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t domain = 0; domain < 5; ++domain)
    for (std::uint64_t run = 0; run < 200000; ++run)
      CHECK(seen.insert(child_seed(42, domain, run)).second);
}

TEST_CASE("run_strategy is identical across thread counts") {
  const ExperimentConfig c = small_config();
  const auto serial = run_strategy(c, StrategyKind::SURF, 1);
  const auto parallel = run_strategy(c, StrategyKind::SURF, 8);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t r = 0; r < serial.size(); ++r) {
    CHECK(serial[r].source == parallel[r].source);
    REQUIRE(serial[r].hops.size() == parallel[r].hops.size());
    for (std::size_t h = 0; h < serial[r].hops.size(); ++h)
      CHECK(serial[r].hops[h].new_receivers == parallel[r].hops[h].new_receivers);
  }
}

TEST_CASE("campaign writes the three CSVs") {
  TempDir dir("crnsim_test_campaign");
  ExperimentConfig c = small_config();
  CampaignOptions options;
  options.out_dir = dir.path.string();
  const auto results = run_campaign(c, options);
  CHECK(results.size() == 4);

  const std::string hops = slurp((dir.path / "hops.csv").string());
  CHECK(hops.rfind("strategy,channels,beta,hop,mean_acc_receivers,ci95\n", 0) == 0);
  // 4 strategies x ttl rows + header.
  CHECK(std::count(hops.begin(), hops.end(), '\n') == 1 + 4 * c.resolved_ttl());

  const std::string delivery = slurp((dir.path / "delivery.csv").string());
  CHECK(std::count(delivery.begin(), delivery.end(), '\n') == 1 + 4 * c.n_cr);

  const std::string summary = slurp((dir.path / "summary.csv").string());
  CHECK(std::count(summary.begin(), summary.end(), '\n') == 1 + 4);
}

TEST_CASE("byte-identical rerun and runs=1 missing CIs") {
  TempDir a("crnsim_test_rerun_a"), b("crnsim_test_rerun_b");
  ExperimentConfig c = small_config();
  c.runs = 15;
  CampaignOptions oa, ob;
  oa.out_dir = a.path.string();
  ob.out_dir = b.path.string();
  ob.threads = 4;
  run_campaign(c, oa);
  run_campaign(c, ob);
  for (const char* name : {"hops.csv", "delivery.csv", "summary.csv"})
    CHECK(slurp((a.path / name).string()) == slurp((b.path / name).string()));

  TempDir single("crnsim_test_single");
  c.runs = 1;
  c.strategies = {StrategyKind::SURF};
  CampaignOptions os;
  os.out_dir = single.path.string();
  run_campaign(c, os);
  std::istringstream summary(slurp((single.path / "summary.csv").string()));
  std::string header, row;
  std::getline(summary, header);
  std::getline(summary, row);
  CHECK(row.back() == ',');  // empty CI field
}

TEST_CASE("trace dump produces one JSON line per hop") {
  TempDir dir("crnsim_test_dump");
  ExperimentConfig c = small_config();
  c.runs = 5;
  c.strategies = {StrategyKind::SURF};
  CampaignOptions options;
  options.out_dir = dir.path.string();
  options.trace_dump_path = (dir.path / "traces.jsonl").string();
  run_campaign(c, options);
  const std::string dump = slurp(options.trace_dump_path);
  CHECK(std::count(dump.begin(), dump.end(), '\n') >= 5);
  CHECK(dump.find("\"hop\"") != std::string::npos);
  CHECK(dump.find("\"collisions\"") != std::string::npos);
}

TEST_CASE("beta sweep rows") {
  TempDir dir("crnsim_test_sweep");
  ExperimentConfig c = small_config();
  c.runs = 20;
  CampaignOptions options;
  options.out_dir = dir.path.string();
  const auto rows = beta_sweep(c, {4, 10}, options);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].beta == 4);
  CHECK(rows[1].beta == 10);
  for (const auto& row : rows) {
    CHECK(row.pct_nodes_reached >= 0.0);
    CHECK(row.pct_nodes_reached <= 100.0);
    CHECK(row.collision_rate >= 0.0);
    CHECK(row.collision_rate <= 1.0);
  }
  CHECK(std::filesystem::exists(dir.path / "beta_sweep.csv"));
  CHECK_THROWS_AS(beta_sweep(c, {}, options), std::invalid_argument);
}
