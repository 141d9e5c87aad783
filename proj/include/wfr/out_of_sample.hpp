#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wfr/core.hpp"
#include "wfr/neighbors.hpp"
#include "wfr/resemblance.hpp"

namespace wfr {

/// Everything needed to label unseen points after training.
struct ModelState {
  Dataset training;
  Labels labels;
  ResemblanceConfig resemblance;  // gamma resolved
  std::size_t k = 10;
  double tau = 0.5;
  NormalizationBounds bounds;  // from the training resemblance matrix

  void validate() const;
};

struct Assignment {
  int label = kOutlier;
  std::size_t neighbor = 0;  // training index with the highest normalized resemblance
  double score = 0.0;        // that resemblance, normalized with training bounds and clipped

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Per-point assignment for row-major test values of width model.training.dim().
std::vector<Assignment> predict_detailed(const ModelState& model, std::span<const double> rows,
                                         KnnBackend backend = KnnBackend::kdtree);

Labels predict(const ModelState& model, std::span<const double> rows,
               KnnBackend backend = KnnBackend::kdtree);

Labels predict(const ModelState& model, const Dataset& test, KnnBackend backend = KnnBackend::kdtree);

}  // namespace wfr
