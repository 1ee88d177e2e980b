#pragma once

#include <string>
#include <vector>

#include "crnsim/rng.hpp"
#include "crnsim/spectrum.hpp"

namespace crnsim {

// Random geometric CR network plus the spectrum-side bookkeeping: per-node
// available channel sets and the PR population per channel. Immutable after
// generation.
struct Topology {
  std::vector<std::pair<double, double>> positions;  // meters
  double radius = 0.0;                               // unit-disk range R
  double area_side = 0.0;                            // square side a
  std::vector<std::vector<int>> adjacency;           // sorted neighbor ids
  std::vector<std::vector<int>> acs;                 // sorted channel ids per node
  std::vector<int> pr_assignment;                    // PR count per channel
  int channels = 0;

  int node_count() const { return static_cast<int>(positions.size()); }
  bool in_range(int i, int j) const;
  bool is_connected() const;
};

// One node's local picture, the input to a strategy decision.
struct NodeView {
  int node_id = 0;
  std::vector<int> acs;
  std::vector<ChannelView> channel_views;        // one per channel in acs
  std::vector<std::vector<int>> neighbor_acs;    // Acs of each neighbor
};

Topology generate_topology(int n, double area_side, double radius, int channels,
                           int acs_size, int pr_count, Rng& rng);

// Neighbors of `node` whose Acs contains `channel`. Throws if the channel is
// not in the node's own Acs.
int cr_neighbor_count(const Topology& topology, int node, int channel);

// Hop budget ceil(2a/R).
int ttl_for(double area_side, double radius);

// Assembles ChannelViews from the round's PR frames (indexed by channel id)
// plus exact neighbor counts from the topology.
NodeView node_view(const Topology& topology, int node, const std::vector<SlotFrame>& pr_frames);

// JSON round-trip for regression fixtures.
std::string topology_to_json(const Topology& topology);
Topology topology_from_json(const std::string& text);

}  // namespace crnsim
