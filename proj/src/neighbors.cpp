#include "wfr/neighbors.hpp"

#include <algorithm>
#include <cmath>

namespace wfr {

NeighborLists::NeighborLists(std::size_t rows, std::size_t width)
    : rows_(rows), width_(width), indices_(rows * width), distances_(rows * width) {}

std::string to_string(KnnBackend backend) {
  return backend == KnnBackend::brute ? "brute" : "kdtree";
}

KnnBackend parse_knn_backend(const std::string& name) {
  if (name == "brute") return KnnBackend::brute;
  if (name == "kdtree") return KnnBackend::kdtree;
  throw InvalidArgument("unknown kNN backend '" + name + "'");
}

NeighborIndex::NeighborIndex(const Dataset& reference, KnnBackend backend) : reference_(&reference) {
  if (backend == KnnBackend::kdtree) tree_.emplace(reference);
}

std::vector<Neighbor> NeighborIndex::query(Point query, std::size_t k,
                                           std::optional<std::size_t> exclude) const {
  if (tree_) return tree_->query(query, k, exclude);

  if (query.size() != reference_->dim()) {
    throw InvalidArgument("query dimension " + std::to_string(query.size()) +
                          " does not match reference dimension " + std::to_string(reference_->dim()));
  }
  std::vector<Neighbor> all;
  all.reserve(reference_->size());
  for (std::size_t j = 0; j < reference_->size(); ++j) {
    if (exclude && *exclude == j) continue;
    all.push_back({squared_distance(query, (*reference_)[j]), j});
  }
  const auto kth = all.begin() + static_cast<std::ptrdiff_t>(std::min(k, all.size()));
  std::partial_sort(all.begin(), kth, all.end());
  all.erase(kth, all.end());
  return all;
}

namespace {

void check_k(const Dataset& data, std::size_t k) {
  if (k < 1) {
    throw InvalidArgument("k must be at least 1");
  }
  if (k >= data.size()) {
    throw InvalidArgument("k = " + std::to_string(k) + " must be smaller than the number of points (" +
                          std::to_string(data.size()) + ")");
  }
}

void store_row(NeighborLists& out, std::size_t row, const std::vector<Neighbor>& found) {
  auto idx = out.mutable_indices(row);
  auto dist = out.mutable_distances(row);
  for (std::size_t c = 0; c < found.size(); ++c) {
    idx[c] = found[c].index;
    dist[c] = std::sqrt(found[c].sq_dist);
  }
}

}  // namespace

NeighborLists knn_graph(const Dataset& data, std::size_t k, KnnBackend backend) {
  check_k(data, k);
  const NeighborIndex index(data, backend);
  NeighborLists out(data.size(), k);
  for (std::size_t i = 0; i < data.size(); ++i) {
    store_row(out, i, index.query(data[i], k, i));
  }
  return out;
}

NeighborLists knn_brute(const Dataset& data, std::size_t k) {
  return knn_graph(data, k, KnnBackend::brute);
}

NeighborLists knn_kdtree(const Dataset& data, std::size_t k) {
  return knn_graph(data, k, KnnBackend::kdtree);
}

NeighborLists knn_query(const Dataset& reference, const Dataset& queries, std::size_t k,
                        KnnBackend backend) {
  if (k < 1) {
    throw InvalidArgument("k must be at least 1");
  }
  if (reference.dim() != queries.dim()) {
    throw InvalidArgument("dimension mismatch: reference has " + std::to_string(reference.dim()) +
                          " columns, queries have " + std::to_string(queries.dim()));
  }
  const std::size_t width = std::min(k, reference.size());
  const NeighborIndex index(reference, backend);
  NeighborLists out(queries.size(), width);
  for (std::size_t i = 0; i < queries.size(); ++i) {
    store_row(out, i, index.query(queries[i], width));
  }
  return out;
}

std::vector<EdgeScore> score_edges(const Dataset& data, const NeighborLists& nbrs,
                                   const ResemblanceConfig& cfg) {
  if (nbrs.size() != data.size()) {
    throw InvalidArgument("neighbor lists cover " + std::to_string(nbrs.size()) +
                          " points but the dataset has " + std::to_string(data.size()));
  }
  const ResemblanceConfig resolved = cfg.resolved(data.dim());
  std::vector<EdgeScore> edges;
  edges.reserve(nbrs.size() * nbrs.width());
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j : nbrs.indices(i)) {
      edges.push_back({i, j, resemblance(resolved, data[i], data[j])});
    }
  }
  return edges;
}

SparseResemblance build_resemblance_matrix(const Dataset& data, const NeighborLists& nbrs,
                                           const ResemblanceConfig& cfg) {
  auto normalized = normalize_edges(score_edges(data, nbrs, cfg));
  return {data.size(), nbrs.width(), std::move(normalized.edges), normalized.bounds};
}

}  // namespace wfr
