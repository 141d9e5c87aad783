#include "wfr/kdtree.hpp"

#include <algorithm>

namespace wfr {

KdTree::KdTree(const Dataset& data, std::size_t leaf_size)
    : data_(&data), leaf_size_(std::max<std::size_t>(leaf_size, 1)), order_(data.size()) {
  for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
  nodes_.reserve(2 * (data.size() / leaf_size_ + 1));
  build(0, order_.size());
}

std::size_t KdTree::build(std::size_t begin, std::size_t end) {
  const std::size_t id = nodes_.size();
  nodes_.push_back(Node{begin, end});
  if (end - begin <= leaf_size_) {
    return id;
  }

  const std::size_t d = data_->dim();
  std::size_t best_axis = 0;
  double best_spread = -1.0;
  for (std::size_t axis = 0; axis < d; ++axis) {
    double lo = (*data_)[order_[begin]][axis];
    double hi = lo;
    for (std::size_t p = begin + 1; p < end; ++p) {
      const double v = (*data_)[order_[p]][axis];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > best_spread) {
      best_spread = hi - lo;
      best_axis = axis;
    }
  }
  if (best_spread <= 0.0) {
    // All points coincide; splitting cannot separate them.
    return id;
  }

  const std::size_t mid = begin + (end - begin) / 2;
  const auto by_axis = [&](std::size_t a, std::size_t b) {
    return (*data_)[a][best_axis] < (*data_)[b][best_axis];
  };
  std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(begin),
                   order_.begin() + static_cast<std::ptrdiff_t>(mid),
                   order_.begin() + static_cast<std::ptrdiff_t>(end), by_axis);

  const double split = (*data_)[order_[mid]][best_axis];
  const std::size_t left = build(begin, mid);
  const std::size_t right = build(mid, end);
  Node& node = nodes_[id];
  node.axis = best_axis;
  node.split = split;
  node.left = left;
  node.right = right;
  return id;
}

std::vector<Neighbor> KdTree::query(Point query, std::size_t k,
                                    std::optional<std::size_t> exclude) const {
  if (query.size() != data_->dim()) {
    throw InvalidArgument("query dimension " + std::to_string(query.size()) +
                          " does not match tree dimension " + std::to_string(data_->dim()));
  }
  std::vector<Neighbor> heap;
  if (k == 0) return heap;
  heap.reserve(k + 1);
  search(0, query, k, exclude, heap);
  std::sort_heap(heap.begin(), heap.end());
  return heap;
}

void KdTree::search(std::size_t node_id, Point query, std::size_t k,
                    std::optional<std::size_t> exclude, std::vector<Neighbor>& heap) const {
  const Node& node = nodes_[node_id];
  if (node.left == 0) {
    for (std::size_t p = node.begin; p < node.end; ++p) {
      const std::size_t idx = order_[p];
      if (exclude && *exclude == idx) continue;
      const Neighbor cand{squared_distance(query, (*data_)[idx]), idx};
      if (heap.size() < k) {
        heap.push_back(cand);
        std::push_heap(heap.begin(), heap.end());
      } else if (cand < heap.front()) {
        std::pop_heap(heap.begin(), heap.end());
        heap.back() = cand;
        std::push_heap(heap.begin(), heap.end());
      }
    }
    return;
  }

  const double diff = query[node.axis] - node.split;
  const std::size_t near = diff < 0.0 ? node.left : node.right;
  const std::size_t far = diff < 0.0 ? node.right : node.left;
  search(near, query, k, exclude, heap);
  // Points beyond the plane are at least |diff| away on this axis alone. Equal
  // bounds are still visited: a tied point with a smaller index may live there.
  if (heap.size() < k || diff * diff <= heap.front().sq_dist) {
    search(far, query, k, exclude, heap);
  }
}

}  // namespace wfr
