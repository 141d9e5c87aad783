#include "wfr/model_io.hpp"

#include <fstream>
#include <json.hpp>

namespace wfr {

using nlohmann::json;

namespace {

constexpr const char* kFormatTag = "wfr-model";

const json& field(const json& obj, const char* name, const char* where) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw ModelFormatError(std::string("model file: missing field '") + where + name + "'");
  }
  return obj.at(name);
}

template <typename T>
T get_field(const json& obj, const char* name, const char* where = "") {
  const json& value = field(obj, name, where);
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ModelFormatError(std::string("model file: field '") + where + name + "' has the wrong type");
  }
}

}  // namespace

void save_model(std::ostream& out, const ModelState& model) {
  model.validate();
  json doc;
  doc["format"] = kFormatTag;
  doc["version"] = kModelFormatVersion;
  json res;
  res["kind"] = to_string(model.resemblance.kind);
  res["eps"] = model.resemblance.eps;
  res["gamma"] = model.resemblance.gamma ? json(*model.resemblance.gamma) : json(nullptr);
  res["coef0"] = model.resemblance.coef0;
  doc["resemblance"] = res;
  doc["k"] = model.k;
  doc["tau"] = model.tau;
  doc["r_min"] = model.bounds.r_min;
  doc["r_max"] = model.bounds.r_max;
  doc["dimension"] = model.training.dim();
  json points = json::array();
  for (std::size_t i = 0; i < model.training.size(); ++i) {
    const Point row = model.training[i];
    points.push_back(std::vector<double>(row.begin(), row.end()));
  }
  doc["points"] = std::move(points);
  doc["labels"] = model.labels;
  out << doc.dump(1) << '\n';
}

void save_model(const std::filesystem::path& path, const ModelState& model) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  save_model(out, model);
}

ModelState load_model(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ModelFormatError(std::string("model file: ") + e.what());
  }
  if (get_field<std::string>(doc, "format") != kFormatTag) {
    throw ModelFormatError("model file: not a wfr model");
  }
  const int version = get_field<int>(doc, "version");
  if (version != kModelFormatVersion) {
    throw ModelFormatError("model file: unsupported version " + std::to_string(version));
  }

  const json& res = field(doc, "resemblance", "");
  ResemblanceConfig cfg;
  try {
    cfg.kind = parse_resemblance_kind(get_field<std::string>(res, "kind", "resemblance."));
  } catch (const InvalidArgument& e) {
    throw ModelFormatError(std::string("model file: ") + e.what());
  }
  cfg.eps = get_field<double>(res, "eps", "resemblance.");
  const json& gamma = field(res, "gamma", "resemblance.");
  if (!gamma.is_null()) cfg.gamma = get_field<double>(res, "gamma", "resemblance.");
  cfg.coef0 = get_field<double>(res, "coef0", "resemblance.");

  const auto d = get_field<std::size_t>(doc, "dimension");
  const auto rows = get_field<std::vector<std::vector<double>>>(doc, "points");
  std::vector<double> values;
  values.reserve(rows.size() * d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d) {
      throw ModelFormatError("model file: points[" + std::to_string(i) + "] has " +
                             std::to_string(rows[i].size()) + " values, expected " + std::to_string(d));
    }
    values.insert(values.end(), rows[i].begin(), rows[i].end());
  }

  try {
    ModelState model{Dataset(rows.size(), d, std::move(values)),
                     get_field<Labels>(doc, "labels"),
                     cfg,
                     get_field<std::size_t>(doc, "k"),
                     get_field<double>(doc, "tau"),
                     {get_field<double>(doc, "r_min"), get_field<double>(doc, "r_max")}};
    model.validate();
    return model;
  } catch (const InvalidArgument& e) {
    throw ModelFormatError(std::string("model file: ") + e.what());
  }
}

ModelState load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  return load_model(in);
}

}  // namespace wfr
