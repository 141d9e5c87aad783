#include "wfr/resemblance.hpp"

#include <algorithm>
#include <cmath>

namespace wfr {

double NormalizationBounds::normalize(double raw) const {
  if (degenerate()) {
    return raw >= r_min ? 1.0 : 0.0;
  }
  return (raw - r_min) / (r_max - r_min);
}

double NormalizationBounds::normalize_clipped(double raw) const {
  return std::clamp(normalize(raw), 0.0, 1.0);
}

double log_resemblance(Point x1, Point x2, double eps) {
  if (!(eps > 0.0)) {
    throw InvalidArgument("eps must be positive");
  }
  return 1.0 / (1.0 + std::log(euclidean_distance(x1, x2) + 1.0 + eps));
}

double cosine_resemblance(Point x1, Point x2) {
  require_same_dim(x1, x2);
  const double n1 = std::sqrt(dot(x1, x1));
  const double n2 = std::sqrt(dot(x2, x2));
  if (n1 == 0.0 || n2 == 0.0) {
    throw InvalidArgument("cosine resemblance is undefined for a zero-norm point");
  }
  return std::clamp(dot(x1, x2) / (n1 * n2), -1.0, 1.0);
}

double rbf_resemblance(Point x1, Point x2, double gamma) {
  if (!(gamma > 0.0)) {
    throw InvalidArgument("gamma must be positive");
  }
  return std::exp(-gamma * squared_distance(x1, x2));
}

double sigmoid_resemblance(Point x1, Point x2, double gamma, double coef0) {
  if (!(gamma > 0.0)) {
    throw InvalidArgument("gamma must be positive");
  }
  return std::tanh(gamma * dot(x1, x2) + coef0);
}

double resemblance(const ResemblanceConfig& cfg, Point x1, Point x2) {
  switch (cfg.kind) {
    case ResemblanceKind::log: return log_resemblance(x1, x2, cfg.eps);
    case ResemblanceKind::cosine: return cosine_resemblance(x1, x2);
    case ResemblanceKind::rbf:
      if (!cfg.gamma) throw InvalidArgument("rbf resemblance needs a resolved gamma");
      return rbf_resemblance(x1, x2, *cfg.gamma);
    case ResemblanceKind::sigmoid:
      if (!cfg.gamma) throw InvalidArgument("sigmoid resemblance needs a resolved gamma");
      return sigmoid_resemblance(x1, x2, *cfg.gamma, cfg.coef0);
  }
  throw InvalidArgument("unknown resemblance kind");
}

NormalizedEdges normalize_edges(std::vector<EdgeScore> edges) {
  if (edges.empty()) {
    throw InvalidArgument("cannot normalize an empty edge list");
  }
  NormalizationBounds bounds{edges.front().score, edges.front().score};
  for (const auto& e : edges) {
    if (!std::isfinite(e.score)) {
      throw InvalidArgument("non-finite resemblance score on edge " + std::to_string(e.src) +
                            " -> " + std::to_string(e.dst));
    }
    bounds.r_min = std::min(bounds.r_min, e.score);
    bounds.r_max = std::max(bounds.r_max, e.score);
  }
  for (auto& e : edges) {
    e.score = bounds.normalize(e.score);
  }
  return {std::move(edges), bounds};
}

}  // namespace wfr
