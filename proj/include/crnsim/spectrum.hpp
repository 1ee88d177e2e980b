#pragma once

#include <map>
#include <vector>

#include "crnsim/rng.hpp"

namespace crnsim {

// One round's PR occupancy of a slotted channel. total_slots is the frame
// length tau_t; a slot is either taken by PR activity or free for CR use.
struct SlotFrame {
  int total_slots = 0;
  std::vector<bool> occupied;  // size total_slots

  int occupied_count() const {
    int c = 0;
    for (bool b : occupied) c += b ? 1 : 0;
    return c;
  }
  int available_slots() const { return total_slots - occupied_count(); }

  std::vector<int> free_slots() const {
    std::vector<int> out;
    for (int s = 0; s < total_slots; ++s)
      if (!occupied[s]) out.push_back(s);
    return out;
  }
};

// A CR node's local knowledge of one channel.
struct ChannelView {
  int channel_id = 0;
  double pr_occupancy = 0.0;       // PR_o, fraction of slots taken
  int available_slots = 0;         // tau_a
  int total_slots = 0;             // tau_t
  double cr_available_share = 0.0; // 1 - PR_o
  int cr_neighbors = 0;            // CR_n on this channel
};

struct PrActivityModel {
  double activity_probability = 0.5;        // per-PR, per-round
  int total_slots = 6;                      // tau_t, frame length
  std::map<int, int> pr_nodes_per_channel;  // channel -> PR count
};

// Fraction of the frame taken by PR activity. Throws on an empty frame.
double pr_occupancy(const SlotFrame& frame);

// Share left for CR nodes, 1 - PR_o. Throws outside [0,1].
double cr_available_share(double pr_occupancy);

// Stochastic occupancy realization: each PR node is active with probability
// activity_prob and, if active, takes one uniform slot. Two PRs landing in
// the same slot still occupy a single slot.
SlotFrame generate_pr_activity(int pr_count, int total_slots, double activity_prob, Rng& rng);

}  // namespace crnsim
