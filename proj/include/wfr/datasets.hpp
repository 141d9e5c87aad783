#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wfr/core.hpp"

namespace wfr {

/// Portable seeded stream: std::mt19937_64 (its output sequence is fixed by the
/// standard) with in-house uniform and Box-Muller normal transforms, since the
/// standard library's distributions differ between implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal.
  double normal();

 private:
  std::mt19937_64 engine_;
};

enum class Family { two_spirals, two_circles, two_moons, gaussian_blobs };

std::string to_string(Family family);
Family parse_family(const std::string& name);

struct GaussianBlob {
  std::vector<double> mean;
  std::vector<double> covariance;  // d x d, row-major
};

/// Means (0,0), (5,0), (2.5,4) with covariances 0.25 * {identity, diag(2, 0.3), rotated anisotropic}.
std::vector<GaussianBlob> default_blobs();

struct GeneratorSpec {
  Family family = Family::two_moons;
  std::size_t n = 200;
  double noise = 0.0;  // standard deviation added to every coordinate
  std::uint64_t seed = 0;
  std::vector<GaussianBlob> blobs = default_blobs();  // gaussian_blobs only
};

struct GeneratedData {
  Dataset points;
  Labels truth;
};

/// Deterministic for a given spec. Branch b receives n / branches points, the first
/// n % branches branches one more, emitted in branch order. Curve families place
/// points at evenly spaced parameter values; only the added noise is random.
///   two_moons:    (cos t, sin t) and (1 - cos t, 0.5 - sin t), t in [0, pi]
///   two_circles:  radius 1.0 and radius 0.5, angle in [0, 2 pi)
///   two_spirals:  radius t / (4 pi) at angle t, t in [pi, 4 pi]; second arm negated
GeneratedData generate(const GeneratorSpec& spec);

}  // namespace wfr
