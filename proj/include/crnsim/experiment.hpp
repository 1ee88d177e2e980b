#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crnsim/metrics.hpp"
#include "crnsim/sim.hpp"

namespace crnsim {

// Full campaign description. Defaults reproduce the Ch=5 scenario, so a run
// with no config file is the primary experiment.
struct ExperimentConfig {
  int n_cr = 70;
  int n_pr = 30;
  int channels = 5;
  int acs_size = 3;
  int beta = 10;
  int tau_t = 6;
  double radius = 250.0;
  double area_side = 707.0;
  int ttl = 0;  // 0 = auto, ceil(2a/R)
  int runs = 1000;
  std::uint64_t master_seed = 42;
  std::vector<StrategyKind> strategies = {StrategyKind::SURF, StrategyKind::RD,
                                          StrategyKind::SB, StrategyKind::CA};
  double activity_prob = 0.5;
  OccupancyMode occupancy_mode = OccupancyMode::Normalized;
  bool topology_per_run = false;    // default: one topology per campaign
  bool require_connected = false;
  bool sensing_lag = false;  // stale sensing: transmissions land in a fresh PR redraw

  int resolved_ttl() const;
  void validate() const;

  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_file(const std::string& path);
};

struct CampaignOptions {
  std::string out_dir = ".";
  int threads = 0;                // 0: CRNSIM_THREADS env, else 1
  std::string trace_dump_path;    // empty: no per-run trace dump
};

// Child-seed chain, stable across platforms (see README).
std::uint64_t child_seed(std::uint64_t master, std::uint64_t domain, std::uint64_t index);

// Topology used by every strategy of a campaign (unless topology_per_run).
Topology campaign_topology(const ExperimentConfig& config);

// All runs of one strategy, seeded from the config, traces in run order.
std::vector<DisseminationTrace> run_strategy(const ExperimentConfig& config, StrategyKind kind,
                                             int threads);

// Executes the campaign and writes hops.csv, delivery.csv, summary.csv into
// out_dir. Partial files are removed if anything throws.
std::map<StrategyKind, ExperimentResult> run_campaign(const ExperimentConfig& config,
                                                      const CampaignOptions& options);

struct BetaSweepRow {
  int beta = 0;
  double pct_nodes_reached = 0.0;
  double collision_rate = 0.0;
  double ci_half = 0.0;
  bool ci_defined = false;
};

// SURF campaign per beta; writes beta_sweep.csv into out_dir.
std::vector<BetaSweepRow> beta_sweep(const ExperimentConfig& config,
                                     const std::vector<int>& betas,
                                     const CampaignOptions& options);

}  // namespace crnsim
