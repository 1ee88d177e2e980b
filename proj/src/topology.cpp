#include "crnsim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace crnsim {

bool Topology::in_range(int i, int j) const {
  const auto [xi, yi] = positions[static_cast<std::size_t>(i)];
  const auto [xj, yj] = positions[static_cast<std::size_t>(j)];
  const double dx = xi - xj;
  const double dy = yi - yj;
  return dx * dx + dy * dy <= radius * radius;
}

bool Topology::is_connected() const {
  const int n = node_count();
  if (n <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Topology generate_topology(int n, double area_side, double radius, int channels,
                           int acs_size, int pr_count, Rng& rng) {
  if (n < 1) throw std::invalid_argument("generate_topology: need at least one node");
  if (channels < 1) throw std::invalid_argument("generate_topology: need at least one channel");
  if (acs_size < 1 || acs_size > channels)
    throw std::invalid_argument("generate_topology: acs_size must be in [1, channels]");
  if (pr_count < 0) throw std::invalid_argument("generate_topology: negative PR count");

  Topology t;
  t.radius = radius;
  t.area_side = area_side;
  t.channels = channels;
  t.positions.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform() * area_side;
    const double y = rng.uniform() * area_side;
    t.positions.emplace_back(x, y);
  }

  t.adjacency.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t.in_range(i, j)) {
        t.adjacency[static_cast<std::size_t>(i)].push_back(j);
        t.adjacency[static_cast<std::size_t>(j)].push_back(i);
      }

  // Uniform random acs_size-subset per node: partial Fisher-Yates.
  t.acs.reserve(static_cast<std::size_t>(n));
  std::vector<int> pool(static_cast<std::size_t>(channels));
  for (int i = 0; i < n; ++i) {
    std::iota(pool.begin(), pool.end(), 0);
    for (int k = 0; k < acs_size; ++k) {
      const auto pick = k + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(channels - k)));
      std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(pick)]);
    }
    std::vector<int> subset(pool.begin(), pool.begin() + acs_size);
    std::sort(subset.begin(), subset.end());
    t.acs.push_back(std::move(subset));
  }

  // PR nodes spread round-robin, counts differ by at most one.
  t.pr_assignment.assign(static_cast<std::size_t>(channels), 0);
  for (int p = 0; p < pr_count; ++p) ++t.pr_assignment[static_cast<std::size_t>(p % channels)];

  return t;
}

int cr_neighbor_count(const Topology& topology, int node, int channel) {
  const auto& own = topology.acs[static_cast<std::size_t>(node)];
  if (!std::binary_search(own.begin(), own.end(), channel))
    throw std::domain_error("cr_neighbor_count: channel not in node's Acs");
  int count = 0;
  for (int nb : topology.adjacency[static_cast<std::size_t>(node)]) {
    const auto& nacs = topology.acs[static_cast<std::size_t>(nb)];
    if (std::binary_search(nacs.begin(), nacs.end(), channel)) ++count;
  }
  return count;
}

int ttl_for(double area_side, double radius) {
  if (radius <= 0.0) throw std::invalid_argument("ttl_for: radius must be positive");
  return static_cast<int>(std::ceil(2.0 * area_side / radius));
}

NodeView node_view(const Topology& topology, int node, const std::vector<SlotFrame>& pr_frames) {
  NodeView view;
  view.node_id = node;
  view.acs = topology.acs[static_cast<std::size_t>(node)];
  for (int ch : view.acs) {
    if (ch < 0 || ch >= static_cast<int>(pr_frames.size()))
      throw std::runtime_error("node_view: missing PR frame for channel");
    const SlotFrame& frame = pr_frames[static_cast<std::size_t>(ch)];
    ChannelView cv;
    cv.channel_id = ch;
    cv.pr_occupancy = pr_occupancy(frame);
    cv.available_slots = frame.available_slots();
    cv.total_slots = frame.total_slots;
    cv.cr_available_share = cr_available_share(cv.pr_occupancy);
    cv.cr_neighbors = cr_neighbor_count(topology, node, ch);
    view.channel_views.push_back(cv);
  }
  for (int nb : topology.adjacency[static_cast<std::size_t>(node)])
    view.neighbor_acs.push_back(topology.acs[static_cast<std::size_t>(nb)]);
  return view;
}

std::string topology_to_json(const Topology& topology) {
  nlohmann::json j;
  j["radius"] = topology.radius;
  j["area_side"] = topology.area_side;
  j["channels"] = topology.channels;
  j["pr_assignment"] = topology.pr_assignment;
  j["acs"] = topology.acs;
  auto& pos = j["positions"] = nlohmann::json::array();
  for (const auto& [x, y] : topology.positions) pos.push_back({x, y});
  return j.dump(2);
}

Topology topology_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Topology t;
  t.radius = j.at("radius").get<double>();
  t.area_side = j.at("area_side").get<double>();
  t.channels = j.at("channels").get<int>();
  t.pr_assignment = j.at("pr_assignment").get<std::vector<int>>();
  t.acs = j.at("acs").get<std::vector<std::vector<int>>>();
  for (const auto& p : j.at("positions"))
    t.positions.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  const int n = t.node_count();
  t.adjacency.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i)
    for (int j2 = i + 1; j2 < n; ++j2)
      if (t.in_range(i, j2)) {
        t.adjacency[static_cast<std::size_t>(i)].push_back(j2);
        t.adjacency[static_cast<std::size_t>(j2)].push_back(i);
      }
  return t;
}

}  // namespace crnsim
