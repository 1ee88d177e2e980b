#pragma once

#include <string>
#include <vector>

#include "crnsim/rng.hpp"
#include "crnsim/spectrum.hpp"
#include "crnsim/topology.hpp"

namespace crnsim {

enum class StrategyKind { SURF, RD, SB, CA };

enum class OccupancyMode { Normalized, Literal };

StrategyKind strategy_from_string(const std::string& name);
std::string to_string(StrategyKind kind);

struct StrategyConfig {
  StrategyKind kind = StrategyKind::SURF;
  int beta = 10;  // tenancy factor, >= 1
  OccupancyMode occupancy_mode = OccupancyMode::Normalized;
  double tie_tolerance = 1e-9;  // relative, for "identical values of P_w"
};

struct ChannelDecision {
  std::vector<int> tx_channels;
  std::vector<int> rx_channels;
};

// CR occupancy score as a function of competing neighbors. Peaks around
// cr_n = beta. Normalized mode keeps all branches fractional; literal mode
// uses raw slot counts in branch 1.
double cr_occupancy(int cr_n, int beta, int tau_a, int tau_t, double cr_as, OccupancyMode mode);

// Channel weight e^(-PR_o) * CR_o.
double surf_weight(double pr_o, double cr_o);

// Highest-weight channel; ties broken by lower PR_o, then uniformly.
int surf_select(const std::vector<ChannelView>& views, const StrategyConfig& cfg, Rng& rng);

// Uniform pick from the node's available channel set.
int rd_select(const std::vector<int>& acs, Rng& rng);

// Greedy set cover: smallest-effort subset of own_acs giving every coverable
// neighbor at least one shared channel. Ties go to the lowest channel id.
// Neighbors disjoint from own_acs are simply not covered.
std::vector<int> essential_channel_set(const std::vector<int>& own_acs,
                                       const std::vector<std::vector<int>>& neighbor_acs);

// Per-strategy transmit/receive channel choice from a node's local view.
ChannelDecision decide(const StrategyConfig& cfg, const NodeView& view, Rng& rng);

}  // namespace crnsim
