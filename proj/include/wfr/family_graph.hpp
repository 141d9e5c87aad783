#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wfr/core.hpp"
#include "wfr/neighbors.hpp"

namespace wfr {

/// Undirected graph in compressed-row form. Every node carries an implicit
/// self-loop; rows list only the other endpoints, sorted and unique.
class Adjacency {
 public:
  Adjacency(std::size_t n, std::vector<std::size_t> offsets, std::vector<std::size_t> targets);

  /// Builds from an undirected edge list; each pair may appear in either or both orientations.
  static Adjacency from_edges(std::size_t n,
                              std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t size() const { return n_; }
  std::span<const std::size_t> neighbors(std::size_t i) const {
    return {targets_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  bool has_edge(std::size_t i, std::size_t j) const;
  /// Number of undirected edges, self-loops excluded.
  std::size_t edge_count() const { return targets_.size() / 2; }

 private:
  std::size_t n_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> targets_;
};

enum class OutlierMode { none, ratio, statistical };

std::string to_string(OutlierMode mode);
OutlierMode parse_outlier_mode(const std::string& name);

struct OutlierPolicy {
  OutlierMode mode = OutlierMode::none;
  // ratio mode: clusters smaller than ratio * (largest cluster size) are outliers.
  double ratio = 0.05;
  // statistical mode: clusters smaller than mean - num_std * stddev of sizes are outliers.
  double num_std = 2.0;

  void validate() const;
};

/// Keeps directed edges with normalized score >= tau, then takes the OR with the
/// transpose. tau must lie in [0, 1].
Adjacency threshold_adjacency(const SparseResemblance& resemblance, double tau);

/// Component labels 0..c-1, numbered by each component's smallest member index.
Labels connected_components(const Adjacency& adj);

/// Sends every member of a too-small cluster to kOutlier and renumbers the
/// survivors 0..c'-1, preserving smallest-member order.
Labels mark_outliers(const Labels& labels, const OutlierPolicy& policy);

/// threshold -> components -> outlier marking.
Labels search_families(const SparseResemblance& resemblance, double tau, const OutlierPolicy& policy);

}  // namespace wfr
