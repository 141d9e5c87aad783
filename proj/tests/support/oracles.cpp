#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace wfr::testing {

Labels union_find_components(std::size_t n, const EdgeList& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [a, b] : edges) {
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::size_t, int> ids;
  Labels out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    auto it = ids.find(root);
    if (it == ids.end()) it = ids.emplace(root, static_cast<int>(ids.size())).first;
    out[i] = it->second;
  }
  return out;
}

namespace {

double plain_distance(Point a, Point b) {
  double s = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
  return std::sqrt(s);
}

}  // namespace

std::vector<std::vector<std::size_t>> sorted_neighbors(const Dataset& data, std::size_t k) {
  std::vector<std::vector<std::size_t>> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::vector<std::pair<double, std::size_t>> all;
    for (std::size_t j = 0; j < data.size(); ++j) {
      if (j != i) all.emplace_back(plain_distance(data[i], data[j]), j);
    }
    std::sort(all.begin(), all.end());
    for (std::size_t c = 0; c < std::min(k, all.size()); ++c) out[i].push_back(all[c].second);
  }
  return out;
}

double brute_separation_score(const Dataset& data, std::size_t k, const Labels& labels, double eps) {
  const auto nbrs = sorted_neighbors(data, k);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j : nbrs[i]) {
      const double d = plain_distance(data[i], data[j]);
      den += 1.0 / (d + eps);
      num += (labels[i] != labels[j] ? 1.0 : 0.0) / (d + eps);
    }
  }
  return 1.0 - num / den;
}

double brute_size_score(const Labels& labels, double f_min, double alpha) {
  std::map<int, double> counts;
  for (int l : labels) {
    if (l >= 0) counts[l] += 1.0;
  }
  const double n = static_cast<double>(labels.size());
  const double c = static_cast<double>(counts.size());
  double capped = 0.0, sum = 0.0, sum_sq = 0.0;
  for (const auto& [id, count] : counts) {
    const double f = count / n;
    capped += std::min(f / f_min, 1.0);
    sum += f;
    sum_sq += f * f;
  }
  const double var = sum_sq / c - (sum / c) * (sum / c);
  return capped / c * std::exp(-alpha * var);
}

double brute_ari(const Labels& a, const Labels& b) {
  double both = 0.0, same_a = 0.0, same_b = 0.0, total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const bool sa = a[i] == a[j];
      const bool sb = b[i] == b[j];
      both += sa && sb;
      same_a += sa;
      same_b += sb;
      total += 1.0;
    }
  }
  const double expected = same_a * same_b / total;
  const double maximum = (same_a + same_b) / 2.0;
  if (maximum == expected) return 1.0;
  return (both - expected) / (maximum - expected);
}

Dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t d, bool grid) {
  std::uniform_real_distribution<double> unit(-5.0, 5.0);
  std::uniform_int_distribution<int> cell(0, 4);
  std::vector<double> values(n * d);
  for (double& v : values) v = grid ? cell(rng) : unit(rng);
  return Dataset(n, d, std::move(values));
}

Labels random_labels(std::mt19937_64& rng, std::size_t n, int max_label, bool with_outliers) {
  std::uniform_int_distribution<int> pick(with_outliers ? -1 : 0, max_label);
  Labels out(n);
  for (int& l : out) l = pick(rng);
  return out;
}

}  // namespace wfr::testing
