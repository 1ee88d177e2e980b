#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "crnsim/rng.hpp"
#include "crnsim/topology.hpp"

using namespace crnsim;

TEST_CASE("reference configuration shapes") {
  Rng rng(1);
  const Topology t = generate_topology(70, 707.0, 250.0, 5, 3, 30, rng);
  CHECK(t.node_count() == 70);
  for (const auto& acs : t.acs) {
    CHECK(acs.size() == 3);
    for (int ch : acs) {
      CHECK(ch >= 0);
      CHECK(ch < 5);
    }
  }
  for (int count : t.pr_assignment) CHECK(count == 6);
  for (const auto& [x, y] : t.positions) {
    CHECK(x >= 0.0);
    CHECK(x <= 707.0);
    CHECK(y >= 0.0);
    CHECK(y <= 707.0);
  }
}

TEST_CASE("unit-disk rule") {
  Topology t;
  t.radius = 250.0;
  t.positions = {{0.0, 0.0}, {0.0, 200.0}, {0.0, 300.0}};
  CHECK(t.in_range(0, 1));
  CHECK_FALSE(t.in_range(0, 2));
}

TEST_CASE("single node has no neighbors") {
  Rng rng(2);
  const Topology t = generate_topology(1, 707.0, 250.0, 5, 3, 30, rng);
  CHECK(t.adjacency[0].empty());
}

TEST_CASE("adjacency is symmetric and irreflexive") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Topology t = generate_topology(40, 500.0, 150.0, 5, 3, 10, rng);
    for (int i = 0; i < t.node_count(); ++i) {
      for (int j : t.adjacency[static_cast<std::size_t>(i)]) {
        CHECK(j != i);
        const auto& back = t.adjacency[static_cast<std::size_t>(j)];
        CHECK(std::find(back.begin(), back.end(), i) != back.end());
      }
    }
  }
}

TEST_CASE("mean degree under reference parameters") {
  Rng rng(4);
  double degree_sum = 0.0;
  int nodes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Topology t = generate_topology(70, 707.0, 250.0, 5, 3, 30, rng);
    for (const auto& adj : t.adjacency) degree_sum += static_cast<double>(adj.size());
    nodes += t.node_count();
  }
  const double mean = degree_sum / nodes;
  CHECK(mean >= 18.0);
  CHECK(mean <= 28.0);
}

TEST_CASE("acs frequencies are uniform across channels") {
  Rng rng(5);
  const int channels = 5, acs_size = 3;
  std::vector<int> counts(channels, 0);
  int total_nodes = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Topology t = generate_topology(70, 707.0, 250.0, channels, acs_size, 30, rng);
    total_nodes += t.node_count();
    for (const auto& acs : t.acs)
      for (int ch : acs) ++counts[static_cast<std::size_t>(ch)];
  }
  const double expected = static_cast<double>(acs_size) / channels;
  for (int ch = 0; ch < channels; ++ch)
    CHECK(std::abs(counts[static_cast<std::size_t>(ch)] / static_cast<double>(total_nodes) - expected) < 0.02);
}

TEST_CASE("invalid configurations throw") {
  Rng rng(6);
  CHECK_THROWS_AS(generate_topology(10, 707.0, 250.0, 5, 6, 30, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_topology(0, 707.0, 250.0, 5, 3, 30, rng), std::invalid_argument);
}

TEST_CASE("cr_neighbor_count") {
  Topology t;
  t.radius = 100.0;
  t.channels = 5;
  t.positions = {{0, 0}, {10, 0}, {20, 0}, {30, 0}};
  t.adjacency = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  t.acs = {{2}, {1, 2}, {2, 3}, {3, 4}};
  t.pr_assignment = {0, 0, 0, 0, 0};
  CHECK(cr_neighbor_count(t, 0, 2) == 2);
  CHECK_THROWS_AS(cr_neighbor_count(t, 0, 4), std::domain_error);

  // Complete graph, everyone shares the channel.
  Topology k;
  k.radius = 1000.0;
  k.channels = 2;
  for (int i = 0; i < 5; ++i) {
    k.positions.emplace_back(i * 10.0, 0.0);
    k.acs.push_back({1});
  }
  k.adjacency.assign(5, {});
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) k.adjacency[static_cast<std::size_t>(i)].push_back(j);
  k.pr_assignment = {0, 0};
  CHECK(cr_neighbor_count(k, 0, 1) == 4);
}

TEST_CASE("ttl_for") {
  CHECK(ttl_for(707.0, 250.0) == 6);
  CHECK(ttl_for(500.0, 500.0) == 2);
  CHECK(ttl_for(707.0, 707.0) == 2);
  CHECK_THROWS_AS(ttl_for(707.0, 0.0), std::invalid_argument);
}

TEST_CASE("node_view composes frames and neighbor counts") {
  Topology t;
  t.radius = 100.0;
  t.channels = 2;
  t.positions = {{0, 0}, {10, 0}, {20, 0}, {30, 0}, {40, 0}};
  t.adjacency.assign(5, {});
  for (int i = 1; i < 5; ++i) {
    t.adjacency[0].push_back(i);
    t.adjacency[static_cast<std::size_t>(i)].push_back(0);
  }
  t.acs = {{1}, {1}, {1}, {1}, {1}};
  t.pr_assignment = {0, 0};

  SlotFrame frame;
  frame.total_slots = 6;
  frame.occupied = {true, false, true, false, false, false};
  std::vector<SlotFrame> frames(2);
  frames[0].total_slots = 6;
  frames[0].occupied.assign(6, false);
  frames[1] = frame;

  const NodeView view = node_view(t, 0, frames);
  REQUIRE(view.channel_views.size() == 1);
  const ChannelView& cv = view.channel_views[0];
  CHECK(cv.channel_id == 1);
  CHECK(cv.pr_occupancy == doctest::Approx(1.0 / 3.0));
  CHECK(cv.available_slots == 4);
  CHECK(cv.cr_available_share == doctest::Approx(2.0 / 3.0));
  CHECK(cv.cr_neighbors == 4);
  CHECK(view.neighbor_acs.size() == 4);
}

TEST_CASE("topology json round-trip") {
  Rng rng(7);
  const Topology t = generate_topology(25, 500.0, 200.0, 5, 3, 10, rng);
  const Topology u = topology_from_json(topology_to_json(t));
  CHECK(u.positions == t.positions);
  CHECK(u.acs == t.acs);
  CHECK(u.adjacency == t.adjacency);
  CHECK(u.pr_assignment == t.pr_assignment);
  CHECK(u.channels == t.channels);
}
