#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <optional>

#include "wfr/core.hpp"
#include "wfr/kdtree.hpp"
#include "wfr/resemblance.hpp"

namespace wfr {

/// Per-point neighbor rows of equal width, ordered by ascending distance with
/// ties broken by ascending neighbor index.
class NeighborLists {
 public:
  NeighborLists() = default;
  NeighborLists(std::size_t rows, std::size_t width);

  std::size_t size() const { return rows_; }
  std::size_t width() const { return width_; }

  std::span<const std::size_t> indices(std::size_t i) const {
    return {indices_.data() + i * width_, width_};
  }
  std::span<const double> distances(std::size_t i) const {
    return {distances_.data() + i * width_, width_};
  }

  std::span<std::size_t> mutable_indices(std::size_t i) { return {indices_.data() + i * width_, width_}; }
  std::span<double> mutable_distances(std::size_t i) { return {distances_.data() + i * width_, width_}; }

  friend bool operator==(const NeighborLists&, const NeighborLists&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t width_ = 0;
  std::vector<std::size_t> indices_;
  std::vector<double> distances_;
};

enum class KnnBackend { brute, kdtree };

std::string to_string(KnnBackend backend);
KnnBackend parse_knn_backend(const std::string& name);

/// Exact kNN lookups against a fixed reference set, by exhaustive scan or KD-tree.
/// Both backends return identical results. The reference must outlive the index.
class NeighborIndex {
 public:
  NeighborIndex(const Dataset& reference, KnnBackend backend);

  std::vector<Neighbor> query(Point query, std::size_t k,
                              std::optional<std::size_t> exclude = std::nullopt) const;

 private:
  const Dataset* reference_;
  std::optional<KdTree> tree_;
};

/// Exact kNN of every training point among the others (self excluded) by exhaustive scan.
NeighborLists knn_brute(const Dataset& data, std::size_t k);

/// Same contract as knn_brute, answered through a KD-tree.
NeighborLists knn_kdtree(const Dataset& data, std::size_t k);

NeighborLists knn_graph(const Dataset& data, std::size_t k, KnnBackend backend);

/// kNN of each query row among the reference rows; nothing is excluded.
/// Returns min(k, reference.size()) neighbors per query.
NeighborLists knn_query(const Dataset& reference, const Dataset& queries, std::size_t k,
                        KnnBackend backend);

/// The kNN-pattern resemblance matrix, min-max normalized. Rows are stored
/// contiguously: edges[i * width .. (i + 1) * width) are the out-edges of point i.
struct SparseResemblance {
  std::size_t n = 0;
  std::size_t width = 0;
  std::vector<EdgeScore> edges;
  NormalizationBounds bounds;
};

/// Raw (unnormalized) resemblance for every (i, j in kNN(i)) pair, in row order.
std::vector<EdgeScore> score_edges(const Dataset& data, const NeighborLists& nbrs,
                                   const ResemblanceConfig& cfg);

SparseResemblance build_resemblance_matrix(const Dataset& data, const NeighborLists& nbrs,
                                           const ResemblanceConfig& cfg);

}  // namespace wfr
