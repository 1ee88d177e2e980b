#pragma once

#include <map>
#include <optional>
#include <vector>

#include "crnsim/rng.hpp"
#include "crnsim/spectrum.hpp"
#include "crnsim/strategy.hpp"
#include "crnsim/topology.hpp"

namespace crnsim {

struct Transmission {
  int sender = 0;
  int channel = 0;
  int slot = 0;
  int hop = 0;
};

struct ReceptionEvent {
  int receiver = 0;
  int sender = 0;
  int channel = 0;
  int slot = 0;
};

struct HopRecord {
  int hop = 0;
  std::vector<Transmission> transmissions;
  std::vector<int> new_receivers;   // first-time receivers this hop
  int collisions = 0;               // listener-side same-channel/slot losses
  int suppressed = 0;               // transmissions dropped for tau_a = 0
};

struct DisseminationTrace {
  int source = 0;
  int node_count = 0;
  std::vector<HopRecord> hops;
  std::vector<int> tx_count;  // per node, copies actually sent
  int collision_count = 0;
  int reception_count = 0;
};

struct ReceptionOutcome {
  std::vector<ReceptionEvent> events;
  int collisions = 0;
};

// Applies the reception rules: in range, listening on the transmission's
// channel, slot free of PR activity, and no second in-range transmission on
// the same channel and slot (collision).
ReceptionOutcome resolve_receptions(const std::vector<Transmission>& transmissions,
                                    const std::map<int, std::vector<int>>& listener_rx,
                                    const Topology& topology,
                                    const std::vector<SlotFrame>& pr_frames);

// One TTL-bounded flood from `source` (uniform random when absent). PR
// frames are redrawn each hop; every node forwards once, at the hop after
// first reception. With sensing_lag, nodes decide on the frame sensed at
// hop start but the transmission lands in a freshly redrawn frame, so a
// slot that looked free can be interrupted by PR activity.
DisseminationTrace run_dissemination(const Topology& topology, const StrategyConfig& cfg,
                                     int ttl, const PrActivityModel& pr_model, Rng& rng,
                                     std::optional<int> source = std::nullopt,
                                     bool sensing_lag = false);

}  // namespace crnsim
