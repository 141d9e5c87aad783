#include "wfr/family_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wfr {

Adjacency::Adjacency(std::size_t n, std::vector<std::size_t> offsets, std::vector<std::size_t> targets)
    : n_(n), offsets_(std::move(offsets)), targets_(std::move(targets)) {
  if (offsets_.size() != n_ + 1 || offsets_.back() != targets_.size()) {
    throw InvalidArgument("malformed adjacency offsets");
  }
}

Adjacency Adjacency::from_edges(std::size_t n,
                                std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<std::size_t> degree(n + 1, 0);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (a == b) continue;
    ++degree[a + 1];
    ++degree[b + 1];
  }
  for (std::size_t i = 0; i < n; ++i) degree[i + 1] += degree[i];

  std::vector<std::size_t> targets(degree[n]);
  std::vector<std::size_t> cursor(degree.begin(), degree.end() - 1);
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    targets[cursor[a]++] = b;
    targets[cursor[b]++] = a;
  }

  // Sort and deduplicate each row, compacting in place.
  std::vector<std::size_t> offsets(n + 1, 0);
  std::size_t write = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto first = targets.begin() + static_cast<std::ptrdiff_t>(degree[i]);
    auto last = targets.begin() + static_cast<std::ptrdiff_t>(degree[i + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) targets[write++] = *it;
    offsets[i + 1] = write;
  }
  targets.resize(write);
  return Adjacency(n, std::move(offsets), std::move(targets));
}

bool Adjacency::has_edge(std::size_t i, std::size_t j) const {
  if (i == j) return true;
  const auto row = neighbors(i);
  return std::binary_search(row.begin(), row.end(), j);
}

std::string to_string(OutlierMode mode) {
  switch (mode) {
    case OutlierMode::none: return "none";
    case OutlierMode::ratio: return "ratio";
    case OutlierMode::statistical: return "statistical";
  }
  return "unknown";
}

OutlierMode parse_outlier_mode(const std::string& name) {
  if (name == "none") return OutlierMode::none;
  if (name == "ratio") return OutlierMode::ratio;
  if (name == "statistical") return OutlierMode::statistical;
  throw InvalidArgument("unknown outlier mode '" + name + "'");
}

void OutlierPolicy::validate() const {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw InvalidArgument("outlier ratio must lie in (0, 1)");
  }
  if (!(num_std > 0.0) || !std::isfinite(num_std)) {
    throw InvalidArgument("outlier num_std must be positive");
  }
}

Adjacency threshold_adjacency(const SparseResemblance& resemblance, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw InvalidArgument("threshold must lie in [0, 1]");
  }
  std::vector<std::pair<std::size_t, std::size_t>> kept;
  kept.reserve(resemblance.edges.size());
  for (const auto& e : resemblance.edges) {
    if (e.score >= tau) kept.emplace_back(e.src, e.dst);
  }
  return Adjacency::from_edges(resemblance.n, kept);
}

Labels connected_components(const Adjacency& adj) {
  Labels labels(adj.size(), kOutlier);
  std::vector<std::size_t> stack;
  int next = 0;
  for (std::size_t root = 0; root < adj.size(); ++root) {
    if (labels[root] != kOutlier) continue;
    labels[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj.neighbors(v)) {
        if (labels[w] == kOutlier) {
          labels[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return labels;
}

Labels mark_outliers(const Labels& labels, const OutlierPolicy& policy) {
  if (policy.mode == OutlierMode::none || labels.empty()) {
    return labels;
  }
  policy.validate();

  int max_id = -1;
  for (int l : labels) {
    if (l < 0) throw InvalidArgument("mark_outliers expects labels without outliers");
    max_id = std::max(max_id, l);
  }
  std::vector<std::size_t> sizes(static_cast<std::size_t>(max_id) + 1, 0);
  for (int l : labels) ++sizes[static_cast<std::size_t>(l)];

  std::vector<double> present;
  for (std::size_t s : sizes) {
    if (s > 0) present.push_back(static_cast<double>(s));
  }

  double cutoff = 0.0;
  if (policy.mode == OutlierMode::ratio) {
    cutoff = policy.ratio * *std::max_element(present.begin(), present.end());
  } else {
    double mean = 0.0;
    for (double s : present) mean += s;
    mean /= static_cast<double>(present.size());
    double var = 0.0;
    for (double s : present) var += (s - mean) * (s - mean);
    var /= static_cast<double>(present.size());
    cutoff = mean - policy.num_std * std::sqrt(var);
  }

  std::vector<int> remap(sizes.size(), std::numeric_limits<int>::min());
  int next = 0;
  Labels out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto id = static_cast<std::size_t>(labels[i]);
    if (remap[id] == std::numeric_limits<int>::min()) {
      remap[id] = static_cast<double>(sizes[id]) < cutoff ? kOutlier : next++;
    }
    out[i] = remap[id];
  }
  return out;
}

Labels search_families(const SparseResemblance& resemblance, double tau, const OutlierPolicy& policy) {
  return mark_outliers(connected_components(threshold_adjacency(resemblance, tau)), policy);
}

}  // namespace wfr
