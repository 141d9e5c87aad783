#pragma once

#include <cstddef>
#include <optional>

#include "wfr/auto_threshold.hpp"
#include "wfr/core.hpp"
#include "wfr/family_graph.hpp"
#include "wfr/neighbors.hpp"
#include "wfr/out_of_sample.hpp"

namespace wfr {

struct FitOptions {
  ResemblanceConfig resemblance;
  std::size_t k = 10;
  // Fixed threshold; unset selects one by grid search.
  std::optional<double> threshold;
  double grid_step = 0.01;
  OutlierPolicy outliers;
  double f_min = 0.05;
  double alpha = 2.0;
  bool allow_single_cluster = false;
  KnnBackend backend = KnnBackend::kdtree;
};

struct FitResult {
  Labels labels;
  ModelState model;
  SparseResemblance resemblance;
  NeighborLists neighbors;
  // Present only when the threshold was selected automatically.
  std::optional<ThresholdDiagnostics> diagnostics;
};

/// Training phase: kNN graph, normalized resemblances, threshold (fixed or
/// searched), then family search with optional outlier marking.
FitResult fit(const Dataset& data, const FitOptions& options);

}  // namespace wfr
