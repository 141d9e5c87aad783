#include "wfr/out_of_sample.hpp"

#include <algorithm>
#include <cmath>

namespace wfr {

void ModelState::validate() const {
  if (labels.size() != training.size()) {
    throw InvalidArgument("model has " + std::to_string(labels.size()) + " labels for " +
                          std::to_string(training.size()) + " training points");
  }
  for (int l : labels) {
    if (l < kOutlier) throw InvalidArgument("invalid training label " + std::to_string(l));
  }
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw InvalidArgument("model threshold must lie in [0, 1]");
  }
  if (k < 1) {
    throw InvalidArgument("model k must be at least 1");
  }
  if (!std::isfinite(bounds.r_min) || !std::isfinite(bounds.r_max) || bounds.r_min > bounds.r_max) {
    throw InvalidArgument("model normalization bounds are invalid");
  }
  resemblance.validate();
  if ((resemblance.kind == ResemblanceKind::rbf || resemblance.kind == ResemblanceKind::sigmoid) &&
      !resemblance.gamma) {
    throw InvalidArgument("model resemblance gamma is not resolved");
  }
}

std::vector<Assignment> predict_detailed(const ModelState& model, std::span<const double> rows,
                                         KnnBackend backend) {
  model.validate();
  const std::size_t d = model.training.dim();
  if (rows.size() % d != 0) {
    throw InvalidArgument("test data width does not match the model dimension " + std::to_string(d));
  }
  for (double v : rows) {
    if (!std::isfinite(v)) throw InvalidArgument("test data contains a non-finite value");
  }
  std::vector<Assignment> out;
  if (rows.empty()) return out;

  const std::size_t n_test = rows.size() / d;
  const std::size_t width = std::min(model.k, model.training.size());
  const NeighborIndex index(model.training, backend);
  out.reserve(n_test);
  for (std::size_t i = 0; i < n_test; ++i) {
    const Point x = rows.subspan(i * d, d);
    Assignment best;
    bool first = true;
    for (const Neighbor& nb : index.query(x, width)) {
      const double score =
          model.bounds.normalize_clipped(resemblance(model.resemblance, x, model.training[nb.index]));
      if (first || score > best.score || (score == best.score && nb.index < best.neighbor)) {
        best.neighbor = nb.index;
        best.score = score;
        first = false;
      }
    }
    best.label = best.score >= model.tau ? model.labels[best.neighbor] : kOutlier;
    out.push_back(best);
  }
  return out;
}

Labels predict(const ModelState& model, std::span<const double> rows, KnnBackend backend) {
  const auto assignments = predict_detailed(model, rows, backend);
  Labels labels;
  labels.reserve(assignments.size());
  for (const auto& a : assignments) labels.push_back(a.label);
  return labels;
}

Labels predict(const ModelState& model, const Dataset& test, KnnBackend backend) {
  if (test.dim() != model.training.dim()) {
    throw InvalidArgument("test data has " + std::to_string(test.dim()) +
                          " columns but the model was trained on " +
                          std::to_string(model.training.dim()));
  }
  return predict(model, test.values(), backend);
}

}  // namespace wfr
