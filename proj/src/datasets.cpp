#include "wfr/datasets.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace wfr {

double Rng::normal() {
  // 1 - uniform() lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::string to_string(Family family) {
  switch (family) {
    case Family::two_spirals: return "two_spirals";
    case Family::two_circles: return "two_circles";
    case Family::two_moons: return "two_moons";
    case Family::gaussian_blobs: return "gaussian_blobs";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  if (name == "two_spirals") return Family::two_spirals;
  if (name == "two_circles") return Family::two_circles;
  if (name == "two_moons") return Family::two_moons;
  if (name == "gaussian_blobs") return Family::gaussian_blobs;
  throw InvalidArgument("unknown dataset family '" + name + "'");
}

std::vector<GaussianBlob> default_blobs() {
  // Shapes: isotropic, axis-aligned anisotropic, and anisotropic rotated by 45
  // degrees (variances 1.2 and 0.15). All are scaled by 0.25 so neighboring
  // blobs are separable.
  constexpr double scale = 0.25;
  const double c = std::cos(std::numbers::pi / 4.0);
  const double s = std::sin(std::numbers::pi / 4.0);
  const double a = 1.2;
  const double b = 0.15;
  const double xx = scale * (a * c * c + b * s * s);
  const double xy = scale * (a - b) * c * s;
  const double yy = scale * (a * s * s + b * c * c);
  return {
      {{0.0, 0.0}, {scale * 1.0, 0.0, 0.0, scale * 1.0}},
      {{5.0, 0.0}, {scale * 2.0, 0.0, 0.0, scale * 0.3}},
      {{2.5, 4.0}, {xx, xy, xy, yy}},
  };
}

namespace {

std::size_t branch_size(std::size_t n, std::size_t branches, std::size_t b) {
  return n / branches + (b < n % branches ? 1 : 0);
}

// i-th of `count` evenly spaced values on [lo, hi], or on [lo, hi) when the
// interval wraps around (full circle).
double grid_value(double lo, double hi, std::size_t i, std::size_t count, bool wraps) {
  const std::size_t intervals = wraps ? count : count - 1;
  if (intervals == 0) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(intervals);
}

// Factor such that factor * factor^T equals the covariance; rejects asymmetric
// or indefinite matrices.
Eigen::MatrixXd covariance_factor(const GaussianBlob& blob, std::size_t blob_index) {
  const auto d = static_cast<Eigen::Index>(blob.mean.size());
  if (blob.covariance.size() != blob.mean.size() * blob.mean.size()) {
    throw InvalidArgument("blob " + std::to_string(blob_index) + ": covariance must be " +
                          std::to_string(d) + " x " + std::to_string(d));
  }
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> cov(
      blob.covariance.data(), d, d);
  if (!cov.allFinite()) {
    throw InvalidArgument("blob " + std::to_string(blob_index) + ": covariance is not finite");
  }
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("blob " + std::to_string(blob_index) + ": covariance is not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  if (eig.eigenvalues().minCoeff() < -1e-12 * scale) {
    throw InvalidArgument("blob " + std::to_string(blob_index) +
                          ": covariance is not positive semi-definite");
  }
  const Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.asDiagonal();
}

}  // namespace

GeneratedData generate(const GeneratorSpec& spec) {
  if (spec.n < 2) {
    throw InvalidArgument("generator needs n >= 2");
  }
  if (!(spec.noise >= 0.0) || !std::isfinite(spec.noise)) {
    throw InvalidArgument("noise must be a finite non-negative number");
  }

  Rng rng(spec.seed);
  std::vector<double> values;
  Labels truth;
  truth.reserve(spec.n);
  constexpr double pi = std::numbers::pi;

  const auto emit2 = [&](double x, double y, int label) {
    values.push_back(x + spec.noise * rng.normal());
    values.push_back(y + spec.noise * rng.normal());
    truth.push_back(label);
  };

  switch (spec.family) {
    case Family::two_moons:
      for (std::size_t b = 0; b < 2; ++b) {
        const std::size_t count = branch_size(spec.n, 2, b);
        for (std::size_t i = 0; i < count; ++i) {
          const double t = grid_value(0.0, pi, i, count, false);
          if (b == 0) {
            emit2(std::cos(t), std::sin(t), 0);
          } else {
            emit2(1.0 - std::cos(t), 0.5 - std::sin(t), 1);
          }
        }
      }
      return {Dataset(spec.n, 2, std::move(values)), std::move(truth)};

    case Family::two_circles:
      for (std::size_t b = 0; b < 2; ++b) {
        const double radius = b == 0 ? 1.0 : 0.5;
        const std::size_t count = branch_size(spec.n, 2, b);
        for (std::size_t i = 0; i < count; ++i) {
          const double angle = grid_value(0.0, 2.0 * pi, i, count, true);
          emit2(radius * std::cos(angle), radius * std::sin(angle), static_cast<int>(b));
        }
      }
      return {Dataset(spec.n, 2, std::move(values)), std::move(truth)};

    case Family::two_spirals:
      for (std::size_t b = 0; b < 2; ++b) {
        const double sign = b == 0 ? 1.0 : -1.0;
        const std::size_t count = branch_size(spec.n, 2, b);
        for (std::size_t i = 0; i < count; ++i) {
          const double t = grid_value(pi, 4.0 * pi, i, count, false);
          const double r = t / (4.0 * pi);
          emit2(sign * r * std::cos(t), sign * r * std::sin(t), static_cast<int>(b));
        }
      }
      return {Dataset(spec.n, 2, std::move(values)), std::move(truth)};

    case Family::gaussian_blobs: {
      if (spec.blobs.empty()) {
        throw InvalidArgument("gaussian_blobs needs at least one blob");
      }
      const std::size_t d = spec.blobs.front().mean.size();
      if (d == 0) throw InvalidArgument("blob means must be non-empty");
      std::vector<Eigen::MatrixXd> factors;
      for (std::size_t b = 0; b < spec.blobs.size(); ++b) {
        if (spec.blobs[b].mean.size() != d) {
          throw InvalidArgument("blob " + std::to_string(b) + " has a different dimension");
        }
        factors.push_back(covariance_factor(spec.blobs[b], b));
      }
      Eigen::VectorXd z(static_cast<Eigen::Index>(d));
      for (std::size_t b = 0; b < spec.blobs.size(); ++b) {
        const Eigen::Map<const Eigen::VectorXd> mean(spec.blobs[b].mean.data(),
                                                     static_cast<Eigen::Index>(d));
        for (std::size_t i = 0; i < branch_size(spec.n, spec.blobs.size(), b); ++i) {
          for (Eigen::Index c = 0; c < z.size(); ++c) z[c] = rng.normal();
          const Eigen::VectorXd x = mean + factors[b] * z;
          for (Eigen::Index c = 0; c < x.size(); ++c) {
            values.push_back(x[c] + spec.noise * rng.normal());
          }
          truth.push_back(static_cast<int>(b));
        }
      }
      return {Dataset(spec.n, d, std::move(values)), std::move(truth)};
    }
  }
  throw InvalidArgument("unknown dataset family");
}

}  // namespace wfr
