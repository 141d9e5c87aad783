#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "wfr/core.hpp"
#include "wfr/family_graph.hpp"
#include "wfr/neighbors.hpp"

namespace wfr {

/// Score of one candidate threshold during the grid search.
struct ThresholdCandidate {
  double tau = 0.0;
  std::size_t num_clusters = 0;  // non-outlier clusters
  double s1 = 0.0;
  double s2 = 0.0;
  double total = 0.0;

  friend bool operator==(const ThresholdCandidate&, const ThresholdCandidate&) = default;
};

using ThresholdDiagnostics = std::vector<ThresholdCandidate>;

struct SelectionParams {
  double f_min = 0.05;
  double alpha = 2.0;
  double eps = 1e-8;
  // A single cluster scores s1 = s2 = 1, the global maximum, whenever the kNN
  // pattern is connected. Unless allowed, single-cluster candidates only win
  // when no candidate has two or more clusters.
  bool allow_single_cluster = false;

  void validate() const;
};

/// Graph-based separation score: one minus the inverse-distance-weighted share of
/// kNN pairs whose endpoints carry different labels. Outliers (-1) count as their
/// own label, so a pair (outlier, cluster) is a crossing pair.
double separation_score(const NeighborLists& nbrs, std::span<const int> labels, double eps);

/// Cluster size score over non-outlier clusters. Fractions use the total point
/// count, outliers included; the variance is the population variance.
double size_score(std::span<const int> labels, double f_min, double alpha);

/// Candidate thresholds 1, 1 - step, 1 - 2 step, ... down to >= 0; floor(1/step) + 1 values.
std::vector<double> threshold_grid(double grid_step);

/// The candidate with the largest total; ties go to the larger tau. Independent of
/// input order. See SelectionParams::allow_single_cluster for the candidate pool.
const ThresholdCandidate& best_candidate(std::span<const ThresholdCandidate> candidates,
                                         bool allow_single_cluster = false);

struct ThresholdSelection {
  double tau = 1.0;
  ThresholdDiagnostics diagnostics;
};

ThresholdSelection select_threshold(const SparseResemblance& resemblance, const NeighborLists& nbrs,
                                    double grid_step, const OutlierPolicy& policy,
                                    const SelectionParams& params);

/// CSV with header tau,num_clusters,s1,s2,total.
void write_diagnostics_csv(std::ostream& out, const ThresholdDiagnostics& diagnostics);

}  // namespace wfr
