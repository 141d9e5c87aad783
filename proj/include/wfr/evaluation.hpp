#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wfr/core.hpp"

namespace wfr {

/// Chance-corrected pair-counting agreement. Outliers (-1) are treated as one
/// ordinary group. Returns 1 when both partitions are trivially identical
/// (e.g. both all-singletons).
double adjusted_rand_index(std::span<const int> a, std::span<const int> b);

struct ClusterSummary {
  std::size_t num_clusters = 0;
  std::vector<std::size_t> sizes;  // by ascending cluster id
  std::size_t outliers = 0;

  friend bool operator==(const ClusterSummary&, const ClusterSummary&) = default;
};

ClusterSummary summarize(std::span<const int> labels);

}  // namespace wfr
