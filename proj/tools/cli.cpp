#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "wfr/clusterer.hpp"
#include "wfr/csv.hpp"
#include "wfr/datasets.hpp"
#include "wfr/evaluation.hpp"
#include "wfr/model_io.hpp"
#include "wfr/svg.hpp"

namespace wfr::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, ResemblanceKind> kResemblanceNames = {
    {"log", ResemblanceKind::log},
    {"cosine", ResemblanceKind::cosine},
    {"rbf", ResemblanceKind::rbf},
    {"sigmoid", ResemblanceKind::sigmoid},
};
const std::map<std::string, OutlierMode> kOutlierNames = {
    {"none", OutlierMode::none},
    {"ratio", OutlierMode::ratio},
    {"statistical", OutlierMode::statistical},
};
const std::map<std::string, KnnBackend> kBackendNames = {
    {"brute", KnnBackend::brute},
    {"kdtree", KnnBackend::kdtree},
};
const std::map<std::string, Family> kFamilyNames = {
    {"two_spirals", Family::two_spirals},
    {"two_circles", Family::two_circles},
    {"two_moons", Family::two_moons},
    {"gaussian_blobs", Family::gaussian_blobs},
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

void print_summary(std::ostream& out, const Labels& labels) {
  const ClusterSummary summary = summarize(labels);
  out << "clusters: " << summary.num_clusters << '\n';
  out << "sizes:";
  for (std::size_t i = 0; i < summary.sizes.size(); ++i) {
    out << (i ? "," : " ") << summary.sizes[i];
  }
  out << '\n' << "outliers: " << summary.outliers << '\n';
}

struct FitArgs {
  std::string input;
  ResemblanceKind resemblance = ResemblanceKind::log;
  std::optional<double> gamma;
  double coef0 = 0.0;
  double eps = 1e-8;
  std::size_t k = 10;
  std::optional<double> threshold;
  bool auto_threshold = false;
  double grid_step = 0.01;
  OutlierMode outliers = OutlierMode::none;
  double outlier_ratio = 0.05;
  double outlier_std = 2.0;
  double f_min = 0.05;
  double alpha = 2.0;
  bool allow_single_cluster = false;
  std::string labels_out;
  std::string model_out;
  std::string diagnostics_out;
  KnnBackend backend = KnnBackend::kdtree;
};

void add_fit(CLI::App& app, FitArgs& a) {
  auto* cmd = app.add_subcommand("fit", "Cluster a CSV of points and save the model");
  cmd->add_option("--input", a.input, "Training points CSV")->required()->check(CLI::ExistingFile);
  cmd->add_option("--resemblance", a.resemblance, "log, cosine, rbf or sigmoid")
      ->transform(CLI::CheckedTransformer(kResemblanceNames, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--gamma", a.gamma, "Kernel gamma for rbf/sigmoid (default 1/d)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--coef0", a.coef0, "Sigmoid kernel offset")->capture_default_str();
  cmd->add_option("--eps", a.eps, "Stability constant")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--k", a.k, "Number of nearest neighbors")->check(CLI::PositiveNumber)->capture_default_str();
  auto* thr = cmd->add_option("--threshold", a.threshold, "Fixed threshold in [0, 1]")
                  ->check(CLI::Range(0.0, 1.0));
  auto* autoflag = cmd->add_flag("--auto-threshold", a.auto_threshold, "Select the threshold by grid search");
  thr->excludes(autoflag);
  cmd->add_option("--grid-step", a.grid_step, "Grid step for the threshold search")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--outliers", a.outliers, "none, ratio or statistical")
      ->transform(CLI::CheckedTransformer(kOutlierNames, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--outlier-ratio", a.outlier_ratio, "Ratio of the largest cluster size")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--outlier-std", a.outlier_std, "Standard deviations below the mean size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--f-min", a.f_min, "Minimum acceptable cluster fraction")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--alpha", a.alpha, "Cluster-size imbalance penalty (>= 1)")
      ->check(CLI::Range(1.0, 1e300))
      ->capture_default_str();
  cmd->add_flag("--allow-single-cluster", a.allow_single_cluster,
                "Let the threshold search pick a one-cluster solution even when a split exists");
  cmd->add_option("--labels-out", a.labels_out, "Output labels CSV")->required();
  cmd->add_option("--model-out", a.model_out, "Output model file")->required();
  cmd->add_option("--diagnostics-out", a.diagnostics_out, "Threshold search diagnostics CSV");
  cmd->add_option("--knn-backend", a.backend, "brute or kdtree")
      ->transform(CLI::CheckedTransformer(kBackendNames, CLI::ignore_case))
      ->capture_default_str();
}

int run_fit(const FitArgs& a, std::ostream& out) {
  if (!a.threshold && !a.auto_threshold) {
    throw UsageError("fit needs either --threshold or --auto-threshold");
  }
  if (!a.diagnostics_out.empty() && !a.auto_threshold) {
    throw UsageError("--diagnostics-out requires --auto-threshold");
  }
  if (!(a.grid_step > 0.0 && a.grid_step < 1.0)) {
    throw UsageError("--grid-step must lie in (0, 1)");
  }
  if (!(a.outlier_ratio > 0.0 && a.outlier_ratio < 1.0)) {
    throw UsageError("--outlier-ratio must lie in (0, 1)");
  }
  if (!(a.f_min > 0.0)) {
    throw UsageError("--f-min must lie in (0, 1]");
  }

  const PointTable table = read_points_csv(a.input);
  FitOptions opts;
  opts.resemblance = {a.resemblance, a.eps, a.gamma, a.coef0};
  opts.k = a.k;
  opts.threshold = a.threshold;
  opts.grid_step = a.grid_step;
  opts.outliers = {a.outliers, a.outlier_ratio, a.outlier_std};
  opts.f_min = a.f_min;
  opts.alpha = a.alpha;
  opts.allow_single_cluster = a.allow_single_cluster;
  opts.backend = a.backend;

  const FitResult result = fit(table.points, opts);
  write_labels_csv(std::filesystem::path(a.labels_out), result.labels);
  save_model(std::filesystem::path(a.model_out), result.model);
  if (!a.diagnostics_out.empty()) {
    auto diag = open_out(a.diagnostics_out);
    write_diagnostics_csv(diag, *result.diagnostics);
  }
  out << "tau: " << format_double(result.model.tau) << '\n';
  print_summary(out, result.labels);
  return kExitOk;
}

struct PredictArgs {
  std::string model;
  std::string input;
  std::string output;
  KnnBackend backend = KnnBackend::kdtree;
};

void add_predict(CLI::App& app, PredictArgs& a) {
  auto* cmd = app.add_subcommand("predict", "Label new points with a saved model");
  cmd->add_option("--model", a.model, "Model file from fit")->required()->check(CLI::ExistingFile);
  cmd->add_option("--input", a.input, "Points CSV")->required()->check(CLI::ExistingFile);
  cmd->add_option("--output", a.output, "Output labels CSV")->required();
  cmd->add_option("--knn-backend", a.backend, "brute or kdtree")
      ->transform(CLI::CheckedTransformer(kBackendNames, CLI::ignore_case))
      ->capture_default_str();
}

int run_predict(const PredictArgs& a, std::ostream& out) {
  const ModelState model = load_model(std::filesystem::path(a.model));
  const PointTable table = read_points_csv(a.input);
  const Labels labels = predict(model, table.points, a.backend);
  write_labels_csv(std::filesystem::path(a.output), labels);
  print_summary(out, labels);
  return kExitOk;
}

struct GenArgs {
  Family family = Family::two_moons;
  std::size_t n = 500;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

void add_gen(CLI::App& app, GenArgs& a) {
  auto* cmd = app.add_subcommand("gen", "Generate a synthetic benchmark with ground truth");
  cmd->add_option("--family", a.family, "two_spirals, two_circles, two_moons or gaussian_blobs")
      ->required()
      ->transform(CLI::CheckedTransformer(kFamilyNames, CLI::ignore_case));
  cmd->add_option("--n", a.n, "Number of points (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  cmd->add_option("--noise", a.noise, "Gaussian noise standard deviation")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--seed", a.seed, "Random seed")->capture_default_str();
  cmd->add_option("--out", a.out, "Output CSV (points plus label column)")->required();
}

int run_gen(const GenArgs& a, std::ostream& out) {
  GeneratorSpec spec;
  spec.family = a.family;
  spec.n = a.n;
  spec.noise = a.noise;
  spec.seed = a.seed;
  const GeneratedData data = generate(spec);
  write_points_csv(std::filesystem::path(a.out), data.points, std::span<const int>(data.truth));
  out << "wrote " << data.points.size() << " points\n";
  return kExitOk;
}

struct EvalArgs {
  std::string pred;
  std::string truth;
};

void add_eval(CLI::App& app, EvalArgs& a) {
  auto* cmd = app.add_subcommand("eval", "Compare predicted labels with ground truth");
  cmd->add_option("--pred", a.pred, "Predicted labels CSV")->required()->check(CLI::ExistingFile);
  cmd->add_option("--truth", a.truth, "Ground-truth labels CSV")->required()->check(CLI::ExistingFile);
}

int run_eval(const EvalArgs& a, std::ostream& out) {
  const Labels pred = read_labels_csv(a.pred);
  const Labels truth = read_labels_csv(a.truth);
  const double ari = adjusted_rand_index(pred, truth);
  out << "ari: " << format_double(ari) << '\n';
  print_summary(out, pred);
  return kExitOk;
}

struct PlotArgs {
  std::string input;
  std::string labels;
  std::string out;
};

void add_plot(CLI::App& app, PlotArgs& a) {
  auto* cmd = app.add_subcommand("plot", "Render points colored by label as SVG");
  cmd->add_option("--input", a.input, "Points CSV")->required()->check(CLI::ExistingFile);
  cmd->add_option("--labels", a.labels, "Labels CSV")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", a.out, "Output SVG")->required();
}

int run_plot(const PlotArgs& a, std::ostream& out) {
  const PointTable table = read_points_csv(a.input);
  const Labels labels = read_labels_csv(a.labels);
  auto svg = open_out(a.out);
  write_svg_scatter(svg, table.points, labels);
  out << "wrote " << table.points.size() << " markers\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Family resemblance clustering"};
  app.require_subcommand(1);
  FitArgs fit_args;
  PredictArgs predict_args;
  GenArgs gen_args;
  EvalArgs eval_args;
  PlotArgs plot_args;
  add_fit(app, fit_args);
  add_predict(app, predict_args);
  add_gen(app, gen_args);
  add_eval(app, eval_args);
  add_plot(app, plot_args);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("fit")) return run_fit(fit_args, out);
    if (app.got_subcommand("predict")) return run_predict(predict_args, out);
    if (app.got_subcommand("gen")) return run_gen(gen_args, out);
    if (app.got_subcommand("eval")) return run_eval(eval_args, out);
    if (app.got_subcommand("plot")) return run_plot(plot_args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace wfr::cli
