#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crnsim/experiment.hpp"
#include "crnsim/metrics.hpp"
#include "crnsim/rng.hpp"
#include "crnsim/sim.hpp"
#include "crnsim/strategy.hpp"
#include "crnsim/topology.hpp"

namespace py = pybind11;
using namespace crnsim;

namespace {

OccupancyMode mode_arg(const std::string& mode) {
  if (mode == "normalized") return OccupancyMode::Normalized;
  if (mode == "literal") return OccupancyMode::Literal;
  throw std::invalid_argument("occupancy mode must be 'normalized' or 'literal'");
}

}  // namespace

PYBIND11_MODULE(_crnsim, m) {
  m.doc() = "Slotted cognitive-radio dissemination simulator";

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &Rng::uniform)
      .def("uniform_index", &Rng::uniform_index, py::arg("n"));

  py::class_<SlotFrame>(m, "SlotFrame")
      .def_readonly("total_slots", &SlotFrame::total_slots)
      .def_property_readonly("occupied",
                             [](const SlotFrame& f) {
                               std::vector<int> out;
                               for (int s = 0; s < f.total_slots; ++s)
                                 if (f.occupied[static_cast<std::size_t>(s)]) out.push_back(s);
                               return out;
                             })
      .def("available_slots", &SlotFrame::available_slots);

  m.def("pr_occupancy", &pr_occupancy, py::arg("frame"));
  m.def("cr_available_share", &cr_available_share, py::arg("pr_occupancy"));
  m.def("generate_pr_activity", &generate_pr_activity, py::arg("pr_count"), py::arg("total_slots"),
        py::arg("activity_prob"), py::arg("rng"));

  m.def(
      "cr_occupancy",
      [](int cr_n, int beta, int tau_a, int tau_t, double cr_as, const std::string& mode) {
        return cr_occupancy(cr_n, beta, tau_a, tau_t, cr_as, mode_arg(mode));
      },
      py::arg("cr_n"), py::arg("beta"), py::arg("tau_a"), py::arg("tau_t"), py::arg("cr_as"),
      py::arg("mode") = "normalized");
  m.def("surf_weight", &surf_weight, py::arg("pr_o"), py::arg("cr_o"));
  m.def("ttl_for", &ttl_for, py::arg("area_side"), py::arg("radius"));
  m.def(
      "essential_channel_set",
      [](std::vector<int> own, std::vector<std::vector<int>> neighbors) {
        std::sort(own.begin(), own.end());
        for (auto& n : neighbors) std::sort(n.begin(), n.end());
        return essential_channel_set(own, neighbors);
      },
      py::arg("own_acs"), py::arg("neighbor_acs"));

  py::class_<Topology>(m, "Topology")
      .def_readonly("positions", &Topology::positions)
      .def_readonly("acs", &Topology::acs)
      .def_readonly("adjacency", &Topology::adjacency)
      .def_readonly("pr_assignment", &Topology::pr_assignment)
      .def_readonly("channels", &Topology::channels)
      .def("node_count", &Topology::node_count)
      .def("is_connected", &Topology::is_connected)
      .def("to_json", [](const Topology& t) { return topology_to_json(t); })
      .def_static("from_json", [](const std::string& s) { return topology_from_json(s); });

  m.def("generate_topology", &generate_topology, py::arg("n"), py::arg("area_side"),
        py::arg("radius"), py::arg("channels"), py::arg("acs_size"), py::arg("pr_count"),
        py::arg("rng"));
  m.def("cr_neighbor_count", &cr_neighbor_count, py::arg("topology"), py::arg("node"),
        py::arg("channel"));

  m.def(
      "run_dissemination",
      [](const Topology& topology, const std::string& strategy, int beta, int ttl,
         double activity_prob, int tau_t, std::uint64_t seed, std::optional<int> source,
         const std::string& mode, bool sensing_lag) {
        StrategyConfig cfg;
        cfg.kind = strategy_from_string(strategy);
        cfg.beta = beta;
        cfg.occupancy_mode = mode_arg(mode);
        PrActivityModel pr;
        pr.activity_probability = activity_prob;
        pr.total_slots = tau_t;
        for (int ch = 0; ch < topology.channels; ++ch)
          pr.pr_nodes_per_channel[ch] = topology.pr_assignment[static_cast<std::size_t>(ch)];
        Rng rng(seed);
        const DisseminationTrace trace =
            run_dissemination(topology, cfg, ttl, pr, rng, source, sensing_lag);
        py::dict out;
        out["source"] = trace.source;
        out["accumulative_receivers"] = accumulative_receivers(trace, ttl);
        out["collisions"] = trace.collision_count;
        out["tx_count"] = trace.tx_count;
        return out;
      },
      py::arg("topology"), py::arg("strategy"), py::arg("beta"), py::arg("ttl"),
      py::arg("activity_prob") = 0.5, py::arg("tau_t") = 6, py::arg("seed") = 0,
      py::arg("source") = std::nullopt, py::arg("mode") = "normalized",
      py::arg("sensing_lag") = false);

  m.def(
      "run_campaign",
      [](const std::string& config_json, const std::string& out_dir, int threads) {
        const ExperimentConfig config = ExperimentConfig::from_json_text(config_json);
        CampaignOptions options;
        options.out_dir = out_dir;
        options.threads = threads;
        const auto results = run_campaign(config, options);
        py::dict out;
        for (const auto& [kind, result] : results) {
          py::dict r;
          r["runs"] = result.runs;
          r["hop_mean"] = result.hop_mean;
          r["mean_tx_per_node"] = result.mean_tx_per_node;
          r["pct_nodes_reached"] = result.pct_nodes_reached;
          r["collision_rate"] = result.collision_rate;
          out[py::str(to_string(kind))] = r;
        }
        return out;
      },
      py::arg("config_json") = "{}", py::arg("out_dir") = ".", py::arg("threads") = 0);

  m.def("ci95", [](const std::vector<double>& samples) { return ci95(samples); },
        py::arg("samples"));
  m.def("child_seed", &child_seed, py::arg("master"), py::arg("domain"), py::arg("index"));
}
