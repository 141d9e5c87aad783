#include "wfr/clusterer.hpp"

namespace wfr {

FitResult fit(const Dataset& data, const FitOptions& options) {
  const ResemblanceConfig cfg = options.resemblance.resolved(data.dim());
  options.outliers.validate();
  if (options.threshold && !(*options.threshold >= 0.0 && *options.threshold <= 1.0)) {
    throw InvalidArgument("threshold must lie in [0, 1]");
  }

  NeighborLists nbrs = knn_graph(data, options.k, options.backend);
  SparseResemblance resemblance = build_resemblance_matrix(data, nbrs, cfg);

  std::optional<ThresholdDiagnostics> diagnostics;
  double tau = 0.0;
  if (options.threshold) {
    tau = *options.threshold;
  } else {
    auto selection = select_threshold(resemblance, nbrs, options.grid_step, options.outliers,
                                      {options.f_min, options.alpha, cfg.eps, options.allow_single_cluster});
    tau = selection.tau;
    diagnostics = std::move(selection.diagnostics);
  }

  Labels labels = search_families(resemblance, tau, options.outliers);
  ModelState model{data, labels, cfg, options.k, tau, resemblance.bounds};
  return {std::move(labels), std::move(model), std::move(resemblance), std::move(nbrs),
          std::move(diagnostics)};
}

}  // namespace wfr
