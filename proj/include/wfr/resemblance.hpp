#pragma once

#include <cstddef>
#include <vector>

#include "wfr/core.hpp"

namespace wfr {

/// One stored entry of the resemblance matrix: dst is among the k nearest neighbors of src.
struct EdgeScore {
  std::size_t src = 0;
  std::size_t dst = 0;
  double score = 0.0;

  friend bool operator==(const EdgeScore&, const EdgeScore&) = default;
};

struct NormalizationBounds {
  double r_min = 0.0;
  double r_max = 1.0;

  bool degenerate() const { return r_max == r_min; }

  /// Min-max rescaling of a raw score. With a degenerate range every score at or
  /// above r_min maps to 1 and anything below maps to 0.
  double normalize(double raw) const;

  /// normalize() clipped into [0, 1].
  double normalize_clipped(double raw) const;

  friend bool operator==(const NormalizationBounds&, const NormalizationBounds&) = default;
};

/// 1 / (1 + ln(||x1 - x2|| + 1 + eps)), in (0, 1].
double log_resemblance(Point x1, Point x2, double eps);

/// Cosine of the angle between x1 and x2. Zero-norm inputs are rejected.
double cosine_resemblance(Point x1, Point x2);

/// exp(-gamma ||x1 - x2||^2)
double rbf_resemblance(Point x1, Point x2, double gamma);

/// tanh(gamma <x1, x2> + coef0)
double sigmoid_resemblance(Point x1, Point x2, double gamma, double coef0);

/// Dispatches on cfg.kind. cfg.gamma must already be resolved for rbf and sigmoid.
double resemblance(const ResemblanceConfig& cfg, Point x1, Point x2);

struct NormalizedEdges {
  std::vector<EdgeScore> edges;
  NormalizationBounds bounds;
};

/// Min-max normalizes the stored scores into [0, 1]. Bounds come from the stored
/// edges only; the implicit zeros of non-neighbor pairs do not participate.
NormalizedEdges normalize_edges(std::vector<EdgeScore> edges);

}  // namespace wfr
