#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crnsim/sim.hpp"

namespace crnsim {

// Sample mean plus a 95% normal-approximation half-width (z = 1.96).
// Requires at least two samples.
std::pair<double, double> ci95(const std::vector<double>& samples);

// Distinct receivers (source excluded) accumulated by each hop, padded with
// the final value up to ttl entries.
std::vector<int> accumulative_receivers(const DisseminationTrace& trace, int ttl);

struct DeliveryRatio {
  std::vector<std::optional<double>> ratio;       // per node; nullopt = no eligible runs
  std::vector<std::optional<double>> ci_half;     // nullopt when < 2 samples
};

// Per-node fraction of packets received, over runs where the node was not
// the source.
DeliveryRatio delivery_ratio(const std::vector<DisseminationTrace>& traces, int n);

// Aggregate of one strategy's campaign.
struct ExperimentResult {
  int runs = 0;
  std::vector<double> hop_mean;                  // mean accumulative receivers per hop
  std::vector<std::optional<double>> hop_ci;
  DeliveryRatio delivery;
  double mean_tx_per_node = 0.0;                 // over transmitting nodes, averaged over runs
  double pct_nodes_reached = 0.0;                // percent of non-source nodes, averaged
  std::optional<double> pct_ci;
  double collision_rate = 0.0;                   // collisions / (collisions + receptions)
};

ExperimentResult aggregate(const std::vector<DisseminationTrace>& traces, int n, int ttl);

}  // namespace crnsim
