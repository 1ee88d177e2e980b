#include "crnsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace crnsim {

std::pair<double, double> ci95(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw std::invalid_argument("ci95: need at least two samples");
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : samples) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  return {mean, 1.96 * sd / std::sqrt(static_cast<double>(n))};
}

std::vector<int> accumulative_receivers(const DisseminationTrace& trace, int ttl) {
  std::vector<int> acc;
  acc.reserve(static_cast<std::size_t>(ttl));
  int total = 0;
  for (const HopRecord& hop : trace.hops) {
    total += static_cast<int>(hop.new_receivers.size());
    acc.push_back(total);
  }
  while (static_cast<int>(acc.size()) < ttl) acc.push_back(total);
  return acc;
}

DeliveryRatio delivery_ratio(const std::vector<DisseminationTrace>& traces, int n) {
  if (traces.empty()) throw std::invalid_argument("delivery_ratio: no traces");
  std::vector<std::vector<double>> samples(static_cast<std::size_t>(n));
  for (const DisseminationTrace& trace : traces) {
    std::vector<bool> got(static_cast<std::size_t>(n), false);
    for (const HopRecord& hop : trace.hops)
      for (int r : hop.new_receivers) got[static_cast<std::size_t>(r)] = true;
    for (int v = 0; v < n; ++v) {
      if (v == trace.source) continue;
      samples[static_cast<std::size_t>(v)].push_back(got[static_cast<std::size_t>(v)] ? 1.0 : 0.0);
    }
  }
  DeliveryRatio out;
  out.ratio.resize(static_cast<std::size_t>(n));
  out.ci_half.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto& s = samples[static_cast<std::size_t>(v)];
    if (s.empty()) continue;  // node was source in every trace: undefined
    if (s.size() == 1) {
      out.ratio[static_cast<std::size_t>(v)] = s.front();
    } else {
      const auto [mean, half] = ci95(s);
      out.ratio[static_cast<std::size_t>(v)] = mean;
      out.ci_half[static_cast<std::size_t>(v)] = half;
    }
  }
  return out;
}

ExperimentResult aggregate(const std::vector<DisseminationTrace>& traces, int n, int ttl) {
  if (traces.empty()) throw std::invalid_argument("aggregate: no traces");
  ExperimentResult result;
  result.runs = static_cast<int>(traces.size());

  std::vector<std::vector<double>> per_hop(static_cast<std::size_t>(ttl));
  std::vector<double> pct_samples;
  std::vector<double> tx_samples;
  long long collisions = 0;
  long long receptions = 0;

  for (const DisseminationTrace& trace : traces) {
    const auto acc = accumulative_receivers(trace, ttl);
    for (int h = 0; h < ttl; ++h)
      per_hop[static_cast<std::size_t>(h)].push_back(static_cast<double>(acc[static_cast<std::size_t>(h)]));
    if (n > 1)
      pct_samples.push_back(100.0 * acc.back() / static_cast<double>(n - 1));

    int tx_nodes = 0;
    int tx_total = 0;
    for (int c : trace.tx_count) {
      if (c > 0) {
        ++tx_nodes;
        tx_total += c;
      }
    }
    if (tx_nodes > 0) tx_samples.push_back(static_cast<double>(tx_total) / tx_nodes);
    collisions += trace.collision_count;
    receptions += trace.reception_count;
  }

  result.hop_mean.resize(static_cast<std::size_t>(ttl));
  result.hop_ci.resize(static_cast<std::size_t>(ttl));
  for (int h = 0; h < ttl; ++h) {
    const auto& s = per_hop[static_cast<std::size_t>(h)];
    if (s.size() >= 2) {
      const auto [mean, half] = ci95(s);
      result.hop_mean[static_cast<std::size_t>(h)] = mean;
      result.hop_ci[static_cast<std::size_t>(h)] = half;
    } else {
      result.hop_mean[static_cast<std::size_t>(h)] = s.empty() ? 0.0 : s.front();
    }
  }

  result.delivery = delivery_ratio(traces, n);

  if (!tx_samples.empty()) {
    double sum = 0.0;
    for (double x : tx_samples) sum += x;
    result.mean_tx_per_node = sum / static_cast<double>(tx_samples.size());
  }
  if (pct_samples.size() >= 2) {
    const auto [mean, half] = ci95(pct_samples);
    result.pct_nodes_reached = mean;
    result.pct_ci = half;
  } else if (!pct_samples.empty()) {
    result.pct_nodes_reached = pct_samples.front();
  }
  const long long attempts = collisions + receptions;
  result.collision_rate = attempts > 0 ? static_cast<double>(collisions) / attempts : 0.0;
  return result;
}

}  // namespace crnsim
