#include "wfr/evaluation.hpp"

#include <map>
#include <utility>

namespace wfr {

namespace {

long double pairs(std::size_t count) {
  const auto c = static_cast<long double>(count);
  return c * (c - 1.0L) / 2.0L;
}

}  // namespace

double adjusted_rand_index(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("label sequences differ in length: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
  std::map<std::pair<int, int>, std::size_t> joint;
  std::map<int, std::size_t> rows;
  std::map<int, std::size_t> cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++joint[{a[i], b[i]}];
    ++rows[a[i]];
    ++cols[b[i]];
  }
  long double same_both = 0.0L;
  for (const auto& [key, count] : joint) same_both += pairs(count);
  long double same_a = 0.0L;
  for (const auto& [key, count] : rows) same_a += pairs(count);
  long double same_b = 0.0L;
  for (const auto& [key, count] : cols) same_b += pairs(count);

  const long double total = pairs(a.size());
  if (total == 0.0L) return 1.0;
  const long double expected = same_a * same_b / total;
  const long double maximum = (same_a + same_b) / 2.0L;
  if (maximum == expected) return 1.0;
  return static_cast<double>((same_both - expected) / (maximum - expected));
}

ClusterSummary summarize(std::span<const int> labels) {
  std::map<int, std::size_t> sizes;
  ClusterSummary out;
  for (int l : labels) {
    if (l == kOutlier) {
      ++out.outliers;
    } else {
      ++sizes[l];
    }
  }
  out.num_clusters = sizes.size();
  for (const auto& [id, size] : sizes) out.sizes.push_back(size);
  return out;
}

}  // namespace wfr
