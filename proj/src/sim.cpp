#include "crnsim/sim.hpp"

#include <algorithm>
#include <stdexcept>

namespace crnsim {

ReceptionOutcome resolve_receptions(const std::vector<Transmission>& transmissions,
                                    const std::map<int, std::vector<int>>& listener_rx,
                                    const Topology& topology,
                                    const std::vector<SlotFrame>& pr_frames) {
  ReceptionOutcome out;
  for (const auto& [listener, rx_channels] : listener_rx) {
    for (int ch : rx_channels) {
      if (ch < 0 || ch >= static_cast<int>(pr_frames.size()))
        throw std::runtime_error("resolve_receptions: missing PR frame");
      const SlotFrame& frame = pr_frames[static_cast<std::size_t>(ch)];
      // Group candidate transmissions by slot; two on one slot collide.
      for (int slot = 0; slot < frame.total_slots; ++slot) {
        const Transmission* candidate = nullptr;
        int in_range = 0;
        for (const Transmission& t : transmissions) {
          if (t.channel != ch || t.slot != slot) continue;
          if (t.sender == listener) continue;
          if (!topology.in_range(listener, t.sender)) continue;
          ++in_range;
          candidate = &t;
        }
        if (in_range == 0) continue;
        if (frame.occupied[static_cast<std::size_t>(slot)]) continue;  // PR interruption
        if (in_range > 1) {
          ++out.collisions;
          continue;
        }
        out.events.push_back({listener, candidate->sender, ch, slot});
      }
    }
  }
  return out;
}

DisseminationTrace run_dissemination(const Topology& topology, const StrategyConfig& cfg,
                                     int ttl, const PrActivityModel& pr_model, Rng& rng,
                                     std::optional<int> source_opt, bool sensing_lag) {
  if (ttl < 0) throw std::invalid_argument("run_dissemination: negative ttl");
  const int n = topology.node_count();
  const int source =
      source_opt ? *source_opt : static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n)));
  if (source < 0 || source >= n) throw std::invalid_argument("run_dissemination: source out of range");

  DisseminationTrace trace;
  trace.source = source;
  trace.node_count = n;
  trace.tx_count.assign(static_cast<std::size_t>(n), 0);

  std::vector<bool> has_message(static_cast<std::size_t>(n), false);
  has_message[static_cast<std::size_t>(source)] = true;
  std::vector<int> frontier{source};  // received last hop, forward this hop

  auto draw_frames = [&] {
    std::vector<SlotFrame> frames;
    frames.reserve(static_cast<std::size_t>(topology.channels));
    for (int ch = 0; ch < topology.channels; ++ch) {
      auto it = pr_model.pr_nodes_per_channel.find(ch);
      const int pr_count = it == pr_model.pr_nodes_per_channel.end() ? 0 : it->second;
      frames.push_back(
          generate_pr_activity(pr_count, pr_model.total_slots, pr_model.activity_probability, rng));
    }
    return frames;
  };

  // The opportunity map nodes act on this hop. Without sensing lag the same
  // frames carry the transmissions, so a chosen slot is guaranteed PR-free;
  // with sensing lag the map is one redraw stale when transmissions land.
  std::vector<SlotFrame> sensed = draw_frames();

  for (int hop = 1; hop <= ttl && !frontier.empty(); ++hop) {
    HopRecord record;
    record.hop = hop;

    for (int sender : frontier) {
      const NodeView view = node_view(topology, sender, sensed);
      const ChannelDecision decision = decide(cfg, view, rng);
      for (int ch : decision.tx_channels) {
        const auto free = sensed[static_cast<std::size_t>(ch)].free_slots();
        if (free.empty()) {
          ++record.suppressed;
          continue;
        }
        const int slot = free[rng.uniform_index(free.size())];
        record.transmissions.push_back({sender, ch, slot, hop});
        ++trace.tx_count[static_cast<std::size_t>(sender)];
      }
    }

    std::map<int, std::vector<int>> listener_rx;
    for (int node = 0; node < n; ++node) {
      if (has_message[static_cast<std::size_t>(node)]) continue;
      const NodeView view = node_view(topology, node, sensed);
      listener_rx[node] = decide(cfg, view, rng).rx_channels;
    }

    // With sensing lag, PR activity is redrawn for the round the
    // transmissions actually occupy; a slot that was free on the sensed map
    // may now carry PR traffic, interrupting that transmission.
    const std::vector<SlotFrame> actual = sensing_lag ? draw_frames() : sensed;
    ReceptionOutcome outcome = resolve_receptions(record.transmissions, listener_rx, topology, actual);
    sensed = sensing_lag ? actual : draw_frames();
    record.collisions = outcome.collisions;
    trace.collision_count += outcome.collisions;

    std::vector<int> next_frontier;
    for (const ReceptionEvent& ev : outcome.events) {
      if (!has_message[static_cast<std::size_t>(ev.receiver)]) {
        has_message[static_cast<std::size_t>(ev.receiver)] = true;
        record.new_receivers.push_back(ev.receiver);
        next_frontier.push_back(ev.receiver);
      }
      ++trace.reception_count;
    }
    std::sort(record.new_receivers.begin(), record.new_receivers.end());
    std::sort(next_frontier.begin(), next_frontier.end());

    trace.hops.push_back(std::move(record));
    frontier = std::move(next_frontier);
  }

  return trace;
}

}  // namespace crnsim
