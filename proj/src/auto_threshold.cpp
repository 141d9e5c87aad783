#include "wfr/auto_threshold.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "wfr/csv.hpp"

namespace wfr {

void SelectionParams::validate() const {
  if (!(f_min > 0.0 && f_min <= 1.0)) {
    throw InvalidArgument("f_min must lie in (0, 1]");
  }
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("alpha must be a finite number >= 1");
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw InvalidArgument("eps must be a positive finite number");
  }
}

double separation_score(const NeighborLists& nbrs, std::span<const int> labels, double eps) {
  if (labels.size() != nbrs.size()) {
    throw InvalidArgument("label count does not match neighbor lists");
  }
  if (!(eps > 0.0)) {
    throw InvalidArgument("eps must be positive");
  }
  double crossing = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const auto idx = nbrs.indices(i);
    const auto dist = nbrs.distances(i);
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const double w = 1.0 / (dist[c] + eps);
      total += w;
      if (labels[i] != labels[idx[c]]) crossing += w;
    }
  }
  if (total == 0.0) return 1.0;
  return 1.0 - crossing / total;
}

double size_score(std::span<const int> labels, double f_min, double alpha) {
  if (!(f_min > 0.0)) {
    throw InvalidArgument("f_min must be positive");
  }
  int max_id = -1;
  for (int l : labels) max_id = std::max(max_id, l);
  if (max_id < 0) {
    throw InvalidArgument("size score needs at least one non-outlier cluster");
  }
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_id) + 1, 0);
  for (int l : labels) {
    if (l >= 0) ++counts[static_cast<std::size_t>(l)];
  }

  const double n = static_cast<double>(labels.size());
  std::vector<double> fractions;
  for (std::size_t c : counts) {
    if (c > 0) fractions.push_back(static_cast<double>(c) / n);
  }
  const double c = static_cast<double>(fractions.size());

  double capped = 0.0;
  double mean = 0.0;
  for (double f : fractions) {
    capped += std::min(f / f_min, 1.0);
    mean += f;
  }
  capped /= c;
  mean /= c;
  double var = 0.0;
  for (double f : fractions) var += (f - mean) * (f - mean);
  var /= c;
  return capped * std::exp(-alpha * var);
}

std::vector<double> threshold_grid(double grid_step) {
  if (!(grid_step > 0.0 && grid_step < 1.0)) {
    throw InvalidArgument("grid step must lie in (0, 1)");
  }
  const auto steps = static_cast<std::size_t>(std::floor(1.0 / grid_step + 1e-9));
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    // Rounding keeps 1 - 31 * 0.01 printing and comparing as 0.69.
    const double tau = std::round((1.0 - static_cast<double>(i) * grid_step) * 1e12) / 1e12;
    grid.push_back(std::max(tau, 0.0));
  }
  return grid;
}

const ThresholdCandidate& best_candidate(std::span<const ThresholdCandidate> candidates,
                                         bool allow_single_cluster) {
  if (candidates.empty()) {
    throw InvalidArgument("no threshold candidates");
  }
  const bool any_split = std::any_of(candidates.begin(), candidates.end(),
                                     [](const ThresholdCandidate& c) { return c.num_clusters >= 2; });
  const std::size_t min_clusters = allow_single_cluster || !any_split ? 0 : 2;

  const ThresholdCandidate* best = nullptr;
  for (const auto& c : candidates) {
    if (c.num_clusters < min_clusters) continue;
    if (!best || c.total > best->total || (c.total == best->total && c.tau > best->tau)) {
      best = &c;
    }
  }
  return *best;
}

ThresholdSelection select_threshold(const SparseResemblance& resemblance, const NeighborLists& nbrs,
                                    double grid_step, const OutlierPolicy& policy,
                                    const SelectionParams& params) {
  params.validate();
  if (nbrs.size() != resemblance.n) {
    throw InvalidArgument("neighbor lists do not match the resemblance matrix");
  }
  ThresholdSelection out;
  for (double tau : threshold_grid(grid_step)) {
    const Labels labels = search_families(resemblance, tau, policy);
    ThresholdCandidate cand;
    cand.tau = tau;
    cand.num_clusters =
        static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end()) + 1);
    cand.s1 = separation_score(nbrs, labels, params.eps);
    cand.s2 = size_score(labels, params.f_min, params.alpha);
    cand.total = cand.s1 + cand.s2;
    out.diagnostics.push_back(cand);
  }
  out.tau = best_candidate(out.diagnostics, params.allow_single_cluster).tau;
  return out;
}

void write_diagnostics_csv(std::ostream& out, const ThresholdDiagnostics& diagnostics) {
  out << "tau,num_clusters,s1,s2,total\n";
  for (const auto& c : diagnostics) {
    out << format_double(c.tau) << ',' << c.num_clusters << ',' << format_double(c.s1) << ','
        << format_double(c.s2) << ',' << format_double(c.total) << '\n';
  }
}

}  // namespace wfr
