#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wfr {

/// Raised for malformed inputs: bad shapes, non-finite values, out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Point = std::span<const double>;

/// Cluster id per point. Ids are 0-based; kOutlier marks points outside every family.
using Labels = std::vector<int>;
inline constexpr int kOutlier = -1;

/// Dense row-major n x d matrix of finite reals.
class Dataset {
 public:
  Dataset(std::size_t n, std::size_t d, std::vector<double> values);

  static Dataset from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return d_; }

  Point row(std::size_t i) const { return {values_.data() + i * d_, d_}; }
  Point operator[](std::size_t i) const { return row(i); }

  std::span<const double> values() const { return values_; }

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<double> values_;
};

enum class ResemblanceKind { log, cosine, rbf, sigmoid };

std::string to_string(ResemblanceKind kind);
ResemblanceKind parse_resemblance_kind(const std::string& name);

struct ResemblanceConfig {
  ResemblanceKind kind = ResemblanceKind::log;
  double eps = 1e-8;
  // Unset means 1/d, resolved once the data dimension is known.
  std::optional<double> gamma;
  double coef0 = 0.0;

  /// Throws InvalidArgument when eps or gamma are out of range.
  void validate() const;

  /// Copy with gamma filled in for dimension d.
  ResemblanceConfig resolved(std::size_t d) const;

  friend bool operator==(const ResemblanceConfig&, const ResemblanceConfig&) = default;
};

double euclidean_distance(Point a, Point b);
double squared_distance(Point a, Point b);
double dot(Point a, Point b);

void require_same_dim(Point a, Point b);

}  // namespace wfr
