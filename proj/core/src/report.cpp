#include "tempcal/report.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "tempcal/errors.hpp"

namespace tempcal {
namespace {

using Json = nlohmann::ordered_json;

Json temperature_json(const Temperature& t) {
  Json j;
  j["value"] = t.value;
  j["method"] = std::string(to_string(t.method));
  j["loss_at_optimum"] = t.loss_at_optimum;
  j["evaluations"] = t.evaluations;
  return j;
}

Temperature parse_temperature(const Json& j) {
  Temperature t;
  t.value = j.at("value").get<double>();
  t.method = method_from_string(j.at("method").get<std::string>());
  t.loss_at_optimum = j.value("loss_at_optimum", 0.0);
  t.evaluations = j.value("evaluations", std::size_t{0});
  t.validate();
  return t;
}

Json audit_json(const std::vector<UtsAuditEntry>& audit) {
  Json arr = Json::array();
  for (const auto& e : audit) {
    Json j;
    j["class"] = e.class_id;
    j["threshold"] = e.threshold;
    j["subset_size"] = e.subset_size;
    j["complement_size"] = e.complement_size;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<UtsAuditEntry> parse_audit(const Json& arr) {
  std::vector<UtsAuditEntry> audit;
  for (const auto& e : arr) {
    audit.push_back({e.at("class").get<ClassId>(), e.at("threshold").get<double>(),
                     e.at("subset_size").get<std::size_t>(),
                     e.at("complement_size").get<std::size_t>()});
  }
  return audit;
}

Json parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DataError(std::string("invalid JSON: ") + e.what());
  }
  const int schema = doc.value("schema", 0);
  if (schema != kReportSchemaVersion) {
    throw DataError("unsupported report schema " + std::to_string(schema));
  }
  return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::vector<UtsAuditEntry> make_uts_audit(const ClassSubsets& subsets) {
  std::vector<UtsAuditEntry> audit;
  for (std::size_t k = 0; k < subsets.n_classes(); ++k) {
    audit.push_back({k, subsets.thresholds[k], subsets.subsets[k].size(),
                     subsets.complement_sizes[k]});
  }
  return audit;
}

CalibrationReport evaluate(const LogitDataset& data, const Temperature& temperature,
                           std::size_t n_bins) {
  temperature.validate();
  const auto labels = data.require_labels();
  const ConfidenceMatrix probs = tempered_softmax(data, temperature);

  CalibrationReport r;
  r.n_samples = data.n_samples();
  r.n_classes = data.n_classes();
  r.accuracy = accuracy(probs, labels);
  const NllResult n = nll(probs, labels);
  r.nll_mean = n.mean;
  r.nll_sum = n.sum;
  r.nll_clamped = n.clamped;
  if (n.clamped > 0) {
    r.warnings.push_back(std::to_string(n.clamped) +
                         " true-label probabilities underflowed and were clamped "
                         "to 1e-300 before the log");
  }
  EceResult e = ece(probs, labels, n_bins);
  r.ece_fraction = e.fraction;
  r.ece_percent = 100.0 * e.fraction;
  r.n_bins = n_bins;
  r.bins = std::move(e.bins);
  r.temperature = temperature;
  return r;
}

std::string report_to_json(const CalibrationReport& r) {
  Json j;
  j["schema"] = kReportSchemaVersion;
  j["kind"] = "evaluation";
  j["n_samples"] = r.n_samples;
  j["n_classes"] = r.n_classes;
  j["accuracy"] = r.accuracy;
  j["nll_mean"] = r.nll_mean;
  j["nll_sum"] = r.nll_sum;
  j["nll_clamped"] = r.nll_clamped;
  j["ece_fraction"] = r.ece_fraction;
  j["ece_percent"] = r.ece_percent;
  j["n_bins"] = r.n_bins;
  j["temperature"] = temperature_json(r.temperature);
  Json bins = Json::array();
  for (const auto& b : r.bins) {
    Json jb;
    jb["index"] = b.index;
    jb["lower"] = b.lower;
    jb["upper"] = b.upper;
    jb["count"] = b.count;
    jb["mean_confidence"] = b.mean_confidence;
    jb["accuracy"] = b.accuracy;
    bins.push_back(std::move(jb));
  }
  j["bins"] = std::move(bins);
  j["warnings"] = r.warnings;
  j["uts_audit"] = r.uts_audit ? audit_json(*r.uts_audit) : Json(nullptr);
  return dump(j);
}

CalibrationReport report_from_json(const std::string& text) {
  const Json j = parse_document(text);
  try {
    CalibrationReport r;
    r.n_samples = j.at("n_samples").get<std::size_t>();
    r.n_classes = j.at("n_classes").get<std::size_t>();
    r.accuracy = j.at("accuracy").get<double>();
    r.nll_mean = j.at("nll_mean").get<double>();
    r.nll_sum = j.at("nll_sum").get<double>();
    r.nll_clamped = j.value("nll_clamped", std::size_t{0});
    r.ece_fraction = j.at("ece_fraction").get<double>();
    r.ece_percent = j.at("ece_percent").get<double>();
    r.n_bins = j.at("n_bins").get<std::size_t>();
    r.temperature = parse_temperature(j.at("temperature"));
    for (const auto& jb : j.at("bins")) {
      r.bins.push_back({jb.at("index").get<std::size_t>(), jb.at("lower").get<double>(),
                        jb.at("upper").get<double>(), jb.at("count").get<std::size_t>(),
                        jb.at("mean_confidence").get<double>(),
                        jb.at("accuracy").get<double>()});
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("uts_audit") && !j.at("uts_audit").is_null()) {
      r.uts_audit = parse_audit(j.at("uts_audit"));
    }
    return r;
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

std::string fit_to_json(const CalibrationFit& fit, std::size_t n_samples,
                        std::size_t n_classes, const ClassSubsets* subsets) {
  Json j;
  j["schema"] = kReportSchemaVersion;
  j["kind"] = "fit";
  j["n_samples"] = n_samples;
  j["n_classes"] = n_classes;
  j["temperature"] = temperature_json(fit.temperature);
  Json opt;
  opt["t_min"] = fit.config.t_min;
  opt["t_max"] = fit.config.t_max;
  opt["grid_points"] = fit.config.grid_points;
  opt["refine_tol"] = fit.config.refine_tol;
  opt["max_refine_iters"] = fit.config.max_refine_iters;
  j["optimizer"] = std::move(opt);
  Json trace = Json::array();
  for (const auto& p : fit.trace) {
    // Non-finite objective values serialize as null.
    trace.push_back(Json::array({p.t, std::isfinite(p.f) ? Json(p.f) : Json(nullptr)}));
  }
  j["trace"] = std::move(trace);
  j["warnings"] = fit.warnings;
  j["uts_audit"] = subsets ? audit_json(make_uts_audit(*subsets)) : Json(nullptr);
  return dump(j);
}

Temperature temperature_from_json(const std::string& text) {
  const Json j = parse_document(text);
  try {
    return parse_temperature(j.at("temperature"));
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed temperature block: ") + e.what());
  }
}

std::optional<std::vector<UtsAuditEntry>> uts_audit_from_json(const std::string& text) {
  const Json j = parse_document(text);
  try {
    if (!j.contains("uts_audit") || j.at("uts_audit").is_null()) return std::nullopt;
    return parse_audit(j.at("uts_audit"));
  } catch (const Json::exception& e) {
    throw DataError(std::string("malformed UTS audit: ") + e.what());
  }
}

}  // namespace tempcal
