#include "wfr/core.hpp"

#include <cmath>

namespace wfr {

Dataset::Dataset(std::size_t n, std::size_t d, std::vector<double> values)
    : n_(n), d_(d), values_(std::move(values)) {
  if (n_ < 1 || d_ < 1) {
    throw InvalidArgument("dataset needs at least one point and one dimension");
  }
  if (values_.size() != n_ * d_) {
    throw InvalidArgument("dataset value count " + std::to_string(values_.size()) +
                          " does not match " + std::to_string(n_) + " x " + std::to_string(d_));
  }
  for (std::size_t idx = 0; idx < values_.size(); ++idx) {
    if (!std::isfinite(values_[idx])) {
      throw InvalidArgument("non-finite value at row " + std::to_string(idx / d_) + ", column " +
                            std::to_string(idx % d_));
    }
  }
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw InvalidArgument("dataset needs at least one point and one dimension");
  }
  const std::size_t d = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d) {
      throw InvalidArgument("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " values, expected " + std::to_string(d));
    }
    values.insert(values.end(), rows[i].begin(), rows[i].end());
  }
  return Dataset(rows.size(), d, std::move(values));
}

std::string to_string(ResemblanceKind kind) {
  switch (kind) {
    case ResemblanceKind::log: return "log";
    case ResemblanceKind::cosine: return "cosine";
    case ResemblanceKind::rbf: return "rbf";
    case ResemblanceKind::sigmoid: return "sigmoid";
  }
  return "unknown";
}

ResemblanceKind parse_resemblance_kind(const std::string& name) {
  if (name == "log") return ResemblanceKind::log;
  if (name == "cosine") return ResemblanceKind::cosine;
  if (name == "rbf") return ResemblanceKind::rbf;
  if (name == "sigmoid") return ResemblanceKind::sigmoid;
  throw InvalidArgument("unknown resemblance kind '" + name + "'");
}

void ResemblanceConfig::validate() const {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw InvalidArgument("eps must be a positive finite number");
  }
  if (gamma && (!(*gamma > 0.0) || !std::isfinite(*gamma))) {
    throw InvalidArgument("gamma must be a positive finite number");
  }
  if (!std::isfinite(coef0)) {
    throw InvalidArgument("coef0 must be finite");
  }
}

ResemblanceConfig ResemblanceConfig::resolved(std::size_t d) const {
  validate();
  ResemblanceConfig out = *this;
  if (!out.gamma) {
    out.gamma = 1.0 / static_cast<double>(d);
  }
  return out;
}

void require_same_dim(Point a, Point b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
}

double squared_distance(Point a, Point b) {
  require_same_dim(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

double euclidean_distance(Point a, Point b) { return std::sqrt(squared_distance(a, b)); }

double dot(Point a, Point b) {
  require_same_dim(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

}  // namespace wfr
