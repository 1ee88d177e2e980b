#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crnsim/experiment.hpp"
#include "crnsim/topology.hpp"

namespace {

crnsim::ExperimentConfig load_config(const std::string& path) {
  if (path.empty()) return {};  // defaults = Ch=5 scenario
  return crnsim::ExperimentConfig::from_file(path);
}

std::vector<crnsim::StrategyKind> parse_strategies(const std::string& csv) {
  std::vector<crnsim::StrategyKind> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(crnsim::strategy_from_string(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crnsim - slotted cognitive-radio dissemination simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string strategies_csv;
  std::string trace_dump;
  int runs = -1;
  std::int64_t seed = -1;
  int threads = 0;

  auto* run = app.add_subcommand("run", "run the dissemination campaign and write CSVs");
  run->add_option("--config", config_path, "JSON config file (defaults to the 5-channel scenario)");
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--strategies", strategies_csv, "comma-separated subset of SURF,RD,SB,CA");
  run->add_option("--runs", runs, "override run count");
  run->add_option("--seed", seed, "override master seed");
  run->add_option("--threads", threads, "worker threads (0 = CRNSIM_THREADS env, else 1)");
  run->add_option("--dump-traces", trace_dump, "write per-hop trace records (JSON lines)");

  std::string betas_csv = "2,6,10,14,18";
  auto* sweep = app.add_subcommand("sweep-beta", "run the SURF campaign across beta values");
  sweep->add_option("--config", config_path, "JSON config file");
  sweep->add_option("--betas", betas_csv, "comma-separated beta values");
  sweep->add_option("--out", out_dir, "output directory");
  sweep->add_option("--runs", runs, "override run count");
  sweep->add_option("--seed", seed, "override master seed");
  sweep->add_option("--threads", threads, "worker threads");

  std::string topo_out;
  auto* dump = app.add_subcommand("dump-topology", "generate and print the campaign topology as JSON");
  dump->add_option("--config", config_path, "JSON config file");
  dump->add_option("--seed", seed, "override master seed");
  dump->add_option("--out", topo_out, "write to file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    crnsim::ExperimentConfig config = load_config(config_path);
    if (runs > 0) config.runs = runs;
    if (seed >= 0) config.master_seed = static_cast<std::uint64_t>(seed);
    if (!strategies_csv.empty()) config.strategies = parse_strategies(strategies_csv);
    config.validate();

    if (run->parsed()) {
      crnsim::CampaignOptions options;
      options.out_dir = out_dir;
      options.threads = threads;
      options.trace_dump_path = trace_dump;
      const auto results = crnsim::run_campaign(config, options);
      for (const auto& [kind, result] : results) {
        std::cout << crnsim::to_string(kind) << ": reached " << result.pct_nodes_reached
                  << "% of nodes, " << result.mean_tx_per_node << " tx per transmitting node\n";
      }
    } else if (sweep->parsed()) {
      std::vector<int> betas;
      std::stringstream ss(betas_csv);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) betas.push_back(std::stoi(item));
      }
      crnsim::CampaignOptions options;
      options.out_dir = out_dir;
      options.threads = threads;
      const auto rows = crnsim::beta_sweep(config, betas, options);
      for (const auto& row : rows) {
        std::cout << "beta=" << row.beta << ": reached " << row.pct_nodes_reached
                  << "%, collision rate " << row.collision_rate << "\n";
      }
    } else if (dump->parsed()) {
      const auto topology = crnsim::campaign_topology(config);
      const std::string text = crnsim::topology_to_json(topology);
      if (topo_out.empty()) {
        std::cout << text << "\n";
      } else {
        std::ofstream out(topo_out);
        if (!out) throw std::runtime_error("cannot open " + topo_out);
        out << text << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "crnsim: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
