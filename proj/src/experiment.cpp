#include "crnsim/experiment.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace crnsim {

namespace {

// Domain tags for the child-seed chain.
constexpr std::uint64_t kTopologyDomain = 0x746F706FULL;   // campaign topology
constexpr std::uint64_t kStrategyDomainBase = 0x1000ULL;   // + strategy index
constexpr std::uint64_t kSweepDomainBase = 0xBE7A0000ULL;  // + beta

std::uint64_t strategy_domain(StrategyKind kind) {
  return kStrategyDomainBase + static_cast<std::uint64_t>(kind);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

OccupancyMode mode_from_string(const std::string& s) {
  if (s == "normalized") return OccupancyMode::Normalized;
  if (s == "literal") return OccupancyMode::Literal;
  throw std::invalid_argument("unknown occupancy_mode: " + s);
}

// Removes the named files on destruction unless released.
class OutputGuard {
 public:
  void track(const std::string& path) { paths_.push_back(path); }
  void release() { paths_.clear(); }
  ~OutputGuard() {
    for (const auto& p : paths_) {
      std::error_code ec;
      std::filesystem::remove(p, ec);
    }
  }

 private:
  std::vector<std::string> paths_;
};

int effective_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CRNSIM_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

Topology generate_for(const ExperimentConfig& config, Rng& rng) {
  for (int attempt = 0;; ++attempt) {
    Topology t = generate_topology(config.n_cr, config.area_side, config.radius, config.channels,
                                   config.acs_size, config.n_pr, rng);
    if (!config.require_connected || t.is_connected()) return t;
    if (attempt >= 1000)
      throw std::runtime_error("generate_for: no connected topology after 1000 draws");
  }
}

DisseminationTrace single_run(const ExperimentConfig& config, const Topology* shared_topology,
                              const StrategyConfig& strategy, std::uint64_t domain, int run_index) {
  Rng rng(child_seed(config.master_seed, domain, static_cast<std::uint64_t>(run_index)));
  Topology local;
  const Topology* topology = shared_topology;
  if (topology == nullptr) {
    local = generate_for(config, rng);
    topology = &local;
  }

  PrActivityModel pr_model;
  pr_model.activity_probability = config.activity_prob;
  pr_model.total_slots = config.tau_t;
  for (int ch = 0; ch < topology->channels; ++ch)
    pr_model.pr_nodes_per_channel[ch] = topology->pr_assignment[static_cast<std::size_t>(ch)];

  return run_dissemination(*topology, strategy, config.resolved_ttl(), pr_model, rng,
                           std::nullopt, config.sensing_lag);
}

std::vector<DisseminationTrace> run_many(const ExperimentConfig& config,
                                         const Topology* shared_topology,
                                         const StrategyConfig& strategy, std::uint64_t domain,
                                         int threads) {
  std::vector<DisseminationTrace> traces(static_cast<std::size_t>(config.runs));
  const int workers = std::min(effective_threads(threads), std::max(config.runs, 1));
  if (workers <= 1) {
    for (int r = 0; r < config.runs; ++r)
      traces[static_cast<std::size_t>(r)] = single_run(config, shared_topology, strategy, domain, r);
    return traces;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int r = w; r < config.runs; r += workers)
        traces[static_cast<std::size_t>(r)] = single_run(config, shared_topology, strategy, domain, r);
    });
  }
  for (auto& th : pool) th.join();
  return traces;
}

void dump_traces(std::ofstream& out, const std::string& strategy,
                 const std::vector<DisseminationTrace>& traces) {
  for (std::size_t run = 0; run < traces.size(); ++run) {
    const DisseminationTrace& trace = traces[run];
    for (const HopRecord& hop : trace.hops) {
      nlohmann::json line;
      line["strategy"] = strategy;
      line["run"] = run;
      line["source"] = trace.source;
      line["hop"] = hop.hop;
      auto& txs = line["transmissions"] = nlohmann::json::array();
      for (const Transmission& t : hop.transmissions)
        txs.push_back({{"sender", t.sender}, {"channel", t.channel}, {"slot", t.slot}});
      line["receptions"] = hop.new_receivers;
      line["collisions"] = hop.collisions;
      line["suppressed"] = hop.suppressed;
      out << line.dump() << '\n';
    }
  }
}

}  // namespace

int ExperimentConfig::resolved_ttl() const {
  return ttl > 0 ? ttl : ttl_for(area_side, radius);
}

void ExperimentConfig::validate() const {
  if (n_cr < 1) throw std::invalid_argument("config: n_cr must be positive");
  if (n_pr < 0) throw std::invalid_argument("config: n_pr must be non-negative");
  if (channels < 1) throw std::invalid_argument("config: channels must be positive");
  if (acs_size < 1 || acs_size > channels)
    throw std::invalid_argument("config: acs_size must be in [1, channels]");
  if (beta < 1) throw std::invalid_argument("config: beta must be >= 1");
  if (tau_t < 1) throw std::invalid_argument("config: tau_t must be >= 1");
  if (radius <= 0.0) throw std::invalid_argument("config: radius must be positive");
  if (area_side <= 0.0) throw std::invalid_argument("config: area_side must be positive");
  if (ttl < 0) throw std::invalid_argument("config: ttl must be >= 0 (0 = auto)");
  if (runs < 1) throw std::invalid_argument("config: runs must be positive");
  if (strategies.empty()) throw std::invalid_argument("config: no strategies selected");
  if (activity_prob < 0.0 || activity_prob > 1.0)
    throw std::invalid_argument("config: activity_prob outside [0,1]");
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ExperimentConfig c;
  if (j.contains("n_cr")) c.n_cr = j["n_cr"].get<int>();
  if (j.contains("n_pr")) c.n_pr = j["n_pr"].get<int>();
  if (j.contains("channels")) c.channels = j["channels"].get<int>();
  if (j.contains("acs_size")) c.acs_size = j["acs_size"].get<int>();
  if (j.contains("beta")) c.beta = j["beta"].get<int>();
  if (j.contains("tau_t")) c.tau_t = j["tau_t"].get<int>();
  if (j.contains("radius")) c.radius = j["radius"].get<double>();
  if (j.contains("area_side")) c.area_side = j["area_side"].get<double>();
  if (j.contains("ttl")) {
    if (j["ttl"].is_string()) {
      if (j["ttl"].get<std::string>() != "auto")
        throw std::invalid_argument("config: ttl must be an integer or \"auto\"");
      c.ttl = 0;
    } else {
      c.ttl = j["ttl"].get<int>();
    }
  }
  if (j.contains("runs")) c.runs = j["runs"].get<int>();
  if (j.contains("master_seed")) c.master_seed = j["master_seed"].get<std::uint64_t>();
  if (j.contains("strategies")) {
    c.strategies.clear();
    for (const auto& s : j["strategies"]) c.strategies.push_back(strategy_from_string(s.get<std::string>()));
  }
  if (j.contains("activity_prob")) c.activity_prob = j["activity_prob"].get<double>();
  if (j.contains("occupancy_mode")) c.occupancy_mode = mode_from_string(j["occupancy_mode"].get<std::string>());
  if (j.contains("topology_per_run")) c.topology_per_run = j["topology_per_run"].get<bool>();
  if (j.contains("require_connected")) c.require_connected = j["require_connected"].get<bool>();
  if (j.contains("sensing_lag")) c.sensing_lag = j["sensing_lag"].get<bool>();
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::uint64_t child_seed(std::uint64_t master, std::uint64_t domain, std::uint64_t index) {
  return Rng::derive(master, {domain, index});
}

Topology campaign_topology(const ExperimentConfig& config) {
  Rng rng(child_seed(config.master_seed, kTopologyDomain, 0));
  return generate_for(config, rng);
}

std::vector<DisseminationTrace> run_strategy(const ExperimentConfig& config, StrategyKind kind,
                                             int threads) {
  StrategyConfig strategy;
  strategy.kind = kind;
  strategy.beta = config.beta;
  strategy.occupancy_mode = config.occupancy_mode;

  if (config.topology_per_run)
    return run_many(config, nullptr, strategy, strategy_domain(kind), threads);
  const Topology topology = campaign_topology(config);
  return run_many(config, &topology, strategy, strategy_domain(kind), threads);
}

std::map<StrategyKind, ExperimentResult> run_campaign(const ExperimentConfig& config,
                                                      const CampaignOptions& options) {
  config.validate();
  std::filesystem::create_directories(options.out_dir);
  const std::string hops_path = options.out_dir + "/hops.csv";
  const std::string delivery_path = options.out_dir + "/delivery.csv";
  const std::string summary_path = options.out_dir + "/summary.csv";

  OutputGuard guard;
  guard.track(hops_path);
  guard.track(delivery_path);
  guard.track(summary_path);

  std::ofstream hops(hops_path);
  std::ofstream delivery(delivery_path);
  std::ofstream summary(summary_path);
  if (!hops || !delivery || !summary)
    throw std::runtime_error("run_campaign: cannot open output files in " + options.out_dir);

  std::ofstream traces_out;
  if (!options.trace_dump_path.empty()) {
    guard.track(options.trace_dump_path);
    traces_out.open(options.trace_dump_path);
    if (!traces_out) throw std::runtime_error("run_campaign: cannot open trace dump file");
  }

  hops << "strategy,channels,beta,hop,mean_acc_receivers,ci95\n";
  delivery << "strategy,channels,beta,node_id,delivery_ratio,ci95\n";
  summary << "strategy,channels,beta,runs,mean_tx_per_node,pct_nodes_reached,ci95\n";

  const int ttl = config.resolved_ttl();
  std::map<StrategyKind, ExperimentResult> results;
  for (StrategyKind kind : config.strategies) {
    const auto traces = run_strategy(config, kind, options.threads);
    if (traces_out.is_open()) dump_traces(traces_out, to_string(kind), traces);
    ExperimentResult result = aggregate(traces, config.n_cr, ttl);

    const std::string name = to_string(kind);
    const std::string prefix = name + "," + std::to_string(config.channels) + "," +
                               std::to_string(config.beta) + ",";
    for (int h = 1; h <= ttl; ++h) {
      const auto& ci = result.hop_ci[static_cast<std::size_t>(h - 1)];
      hops << prefix << h << ',' << fmt(result.hop_mean[static_cast<std::size_t>(h - 1)]) << ','
           << (ci ? fmt(*ci) : "") << '\n';
    }
    for (int v = 0; v < config.n_cr; ++v) {
      const auto& ratio = result.delivery.ratio[static_cast<std::size_t>(v)];
      const auto& ci = result.delivery.ci_half[static_cast<std::size_t>(v)];
      delivery << prefix << v << ',' << (ratio ? fmt(*ratio) : "") << ',' << (ci ? fmt(*ci) : "")
               << '\n';
    }
    summary << prefix << result.runs << ',' << fmt(result.mean_tx_per_node) << ','
            << fmt(result.pct_nodes_reached) << ',' << (result.pct_ci ? fmt(*result.pct_ci) : "")
            << '\n';

    results.emplace(kind, std::move(result));
  }

  guard.release();
  return results;
}

std::vector<BetaSweepRow> beta_sweep(const ExperimentConfig& config, const std::vector<int>& betas,
                                     const CampaignOptions& options) {
  config.validate();
  if (betas.empty()) throw std::invalid_argument("beta_sweep: empty beta list");

  std::filesystem::create_directories(options.out_dir);
  const std::string path = options.out_dir + "/beta_sweep.csv";
  OutputGuard guard;
  guard.track(path);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("beta_sweep: cannot open " + path);
  out << "beta,pct_nodes_reached,collision_rate,ci95\n";

  const int ttl = config.resolved_ttl();
  std::vector<BetaSweepRow> rows;
  for (int beta : betas) {
    if (beta < 1) throw std::invalid_argument("beta_sweep: beta must be >= 1");
    ExperimentConfig c = config;
    c.beta = beta;

    StrategyConfig strategy;
    strategy.kind = StrategyKind::SURF;
    strategy.beta = beta;
    strategy.occupancy_mode = c.occupancy_mode;

    std::vector<DisseminationTrace> traces;
    if (c.topology_per_run) {
      traces = run_many(c, nullptr, strategy, kSweepDomainBase + static_cast<std::uint64_t>(beta),
                        options.threads);
    } else {
      const Topology topology = campaign_topology(c);
      traces = run_many(c, &topology, strategy,
                        kSweepDomainBase + static_cast<std::uint64_t>(beta), options.threads);
    }
    const ExperimentResult result = aggregate(traces, c.n_cr, ttl);

    BetaSweepRow row;
    row.beta = beta;
    row.pct_nodes_reached = result.pct_nodes_reached;
    row.collision_rate = result.collision_rate;
    row.ci_defined = result.pct_ci.has_value();
    row.ci_half = result.pct_ci.value_or(0.0);
    rows.push_back(row);

    out << beta << ',' << fmt(row.pct_nodes_reached) << ',' << fmt(row.collision_rate) << ','
        << (row.ci_defined ? fmt(row.ci_half) : "") << '\n';
  }
  guard.release();
  return rows;
}

}  // namespace crnsim
