#include "crnsim/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace crnsim {

StrategyKind strategy_from_string(const std::string& name) {
  if (name == "SURF") return StrategyKind::SURF;
  if (name == "RD") return StrategyKind::RD;
  if (name == "SB") return StrategyKind::SB;
  if (name == "CA") return StrategyKind::CA;
  throw std::invalid_argument("unknown strategy: " + name);
}

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::SURF: return "SURF";
    case StrategyKind::RD: return "RD";
    case StrategyKind::SB: return "SB";
    case StrategyKind::CA: return "CA";
  }
  return "?";
}

double cr_occupancy(int cr_n, int beta, int tau_a, int tau_t, double cr_as, OccupancyMode mode) {
  if (tau_t < 1) throw std::invalid_argument("cr_occupancy: tau_t must be >= 1");
  if (tau_a < 0 || tau_a > tau_t) throw std::invalid_argument("cr_occupancy: tau_a out of range");
  if (cr_n < 0) throw std::invalid_argument("cr_occupancy: negative neighbor count");
  if (beta < 1) throw std::invalid_argument("cr_occupancy: beta must be >= 1");

  const double avail = mode == OccupancyMode::Normalized
                           ? static_cast<double>(tau_a) / tau_t
                           : static_cast<double>(tau_a);
  if (cr_n < beta) return avail / (beta - cr_n);
  if (cr_n == beta) return cr_as;
  const double frame = mode == OccupancyMode::Normalized ? 1.0 : static_cast<double>(tau_t);
  return avail / (frame * cr_n);
}

double surf_weight(double pr_o, double cr_o) {
  if (pr_o < 0.0 || pr_o > 1.0) throw std::domain_error("surf_weight: PR_o outside [0,1]");
  if (cr_o < 0.0) throw std::domain_error("surf_weight: negative CR_o");
  return std::exp(-pr_o) * cr_o;
}

namespace {

bool nearly_equal(double a, double b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

int surf_select(const std::vector<ChannelView>& views, const StrategyConfig& cfg, Rng& rng) {
  if (views.empty()) throw std::invalid_argument("surf_select: no channels to choose from");

  std::vector<double> weights;
  weights.reserve(views.size());
  for (const ChannelView& v : views) {
    const double occ = cr_occupancy(v.cr_neighbors, cfg.beta, v.available_slots,
                                    v.total_slots, v.cr_available_share, cfg.occupancy_mode);
    weights.push_back(surf_weight(v.pr_occupancy, occ));
  }

  const double best = *std::max_element(weights.begin(), weights.end());
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < views.size(); ++i)
    if (nearly_equal(weights[i], best, cfg.tie_tolerance)) tied.push_back(i);

  if (tied.size() > 1) {
    double lowest = views[tied.front()].pr_occupancy;
    for (std::size_t i : tied) lowest = std::min(lowest, views[i].pr_occupancy);
    std::vector<std::size_t> filtered;
    for (std::size_t i : tied)
      if (views[i].pr_occupancy <= lowest + 1e-12) filtered.push_back(i);
    tied = std::move(filtered);
  }

  const std::size_t pick =
      tied.size() == 1 ? tied.front() : tied[rng.uniform_index(tied.size())];
  return views[pick].channel_id;
}

int rd_select(const std::vector<int>& acs, Rng& rng) {
  if (acs.empty()) throw std::invalid_argument("rd_select: empty channel set");
  return acs[rng.uniform_index(acs.size())];
}

std::vector<int> essential_channel_set(const std::vector<int>& own_acs,
                                       const std::vector<std::vector<int>>& neighbor_acs) {
  // Index neighbors still uncovered whose Acs meets ours at all.
  std::set<std::size_t> uncovered;
  for (std::size_t i = 0; i < neighbor_acs.size(); ++i) {
    for (int ch : neighbor_acs[i]) {
      if (std::binary_search(own_acs.begin(), own_acs.end(), ch)) {
        uncovered.insert(i);
        break;
      }
    }
  }

  std::vector<int> cover;
  std::set<int> remaining(own_acs.begin(), own_acs.end());
  while (!uncovered.empty()) {
    int best_ch = -1;
    std::size_t best_gain = 0;
    for (int ch : remaining) {
      std::size_t gain = 0;
      for (std::size_t i : uncovered) {
        const auto& nacs = neighbor_acs[i];
        if (std::binary_search(nacs.begin(), nacs.end(), ch)) ++gain;
      }
      if (gain > best_gain) {  // remaining iterates ascending, ties keep lowest id
        best_gain = gain;
        best_ch = ch;
      }
    }
    if (best_ch < 0) break;  // unreachable given uncovered construction
    cover.push_back(best_ch);
    remaining.erase(best_ch);
    for (auto it = uncovered.begin(); it != uncovered.end();) {
      const auto& nacs = neighbor_acs[*it];
      if (std::binary_search(nacs.begin(), nacs.end(), best_ch))
        it = uncovered.erase(it);
      else
        ++it;
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

ChannelDecision decide(const StrategyConfig& cfg, const NodeView& view, Rng& rng) {
  ChannelDecision d;
  switch (cfg.kind) {
    case StrategyKind::SURF: {
      const int ch = surf_select(view.channel_views, cfg, rng);
      d.tx_channels = {ch};
      d.rx_channels = {ch};
      break;
    }
    case StrategyKind::RD: {
      d.tx_channels = {rd_select(view.acs, rng)};
      d.rx_channels = {rd_select(view.acs, rng)};
      break;
    }
    case StrategyKind::SB: {
      d.tx_channels = essential_channel_set(view.acs, view.neighbor_acs);
      d.rx_channels = {rd_select(view.acs, rng)};
      break;
    }
    case StrategyKind::CA: {
      d.tx_channels = essential_channel_set(view.acs, view.neighbor_acs);
      // Same draw sequence as SB: CA differs only by overhearing the whole
      // Acs, so paired SB/CA runs on one seed share transmissions and slots.
      (void)rd_select(view.acs, rng);
      d.rx_channels = view.acs;
      break;
    }
  }
  return d;
}

}  // namespace crnsim
