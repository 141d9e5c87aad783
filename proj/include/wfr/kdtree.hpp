#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wfr/core.hpp"

namespace wfr {

struct Neighbor {
  double sq_dist = 0.0;
  std::size_t index = 0;

  friend auto operator<=>(const Neighbor&, const Neighbor&) = default;
};

/// Exact kNN over a fixed point set. Holds a pointer to the dataset, which must
/// outlive the tree.
///
/// Results are ordered by (squared distance, index) and pruning only discards a
/// subtree whose bound is strictly worse than the current k-th candidate, so ties
/// resolve exactly as an exhaustive scan would.
class KdTree {
 public:
  explicit KdTree(const Dataset& data, std::size_t leaf_size = 16);

  /// Up to k nearest points to query, skipping index `exclude` if given.
  std::vector<Neighbor> query(Point query, std::size_t k,
                              std::optional<std::size_t> exclude = std::nullopt) const;

 private:
  struct Node {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t axis = 0;
    double split = 0.0;
    // Children are node indices; 0 means leaf (the root is never a child).
    std::size_t left = 0;
    std::size_t right = 0;
  };

  std::size_t build(std::size_t begin, std::size_t end);
  void search(std::size_t node, Point query, std::size_t k, std::optional<std::size_t> exclude,
              std::vector<Neighbor>& heap) const;

  const Dataset* data_;
  std::size_t leaf_size_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace wfr
