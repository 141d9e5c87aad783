#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "wfr/out_of_sample.hpp"

namespace wfr {

/// Raised when a model file cannot be parsed; the message names the location.
class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kModelFormatVersion = 1;

/// JSON document: format tag and version, resemblance config, k, tau, r_min,
/// r_max, training points and labels. Doubles are written in shortest
/// round-trip form so a reload predicts identically.
void save_model(std::ostream& out, const ModelState& model);
void save_model(const std::filesystem::path& path, const ModelState& model);

ModelState load_model(std::istream& in);
ModelState load_model(const std::filesystem::path& path);

}  // namespace wfr
