#include "crnsim/spectrum.hpp"

#include <stdexcept>

namespace crnsim {

double pr_occupancy(const SlotFrame& frame) {
  if (frame.total_slots <= 0)
    throw std::invalid_argument("pr_occupancy: frame has no slots");
  return static_cast<double>(frame.occupied_count()) / frame.total_slots;
}

double cr_available_share(double pr_occupancy) {
  if (pr_occupancy < 0.0 || pr_occupancy > 1.0)
    throw std::domain_error("cr_available_share: occupancy outside [0,1]");
  return 1.0 - pr_occupancy;
}

SlotFrame generate_pr_activity(int pr_count, int total_slots, double activity_prob, Rng& rng) {
  if (total_slots < 1)
    throw std::invalid_argument("generate_pr_activity: total_slots must be >= 1");
  SlotFrame frame;
  frame.total_slots = total_slots;
  frame.occupied.assign(static_cast<std::size_t>(total_slots), false);
  for (int p = 0; p < pr_count; ++p) {
    if (rng.bernoulli(activity_prob)) {
      const auto slot = rng.uniform_index(static_cast<std::uint64_t>(total_slots));
      frame.occupied[static_cast<std::size_t>(slot)] = true;
    }
  }
  return frame;
}

}  // namespace crnsim
