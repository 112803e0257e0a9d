#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tempcal/tempcal.hpp"

namespace tempcal::cli {
namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return kUsage;
    case ErrorKind::kData:
    case ErrorKind::kDomain:
      return kData;
    case ErrorKind::kOptimization:
      return kOptimization;
  }
  return kData;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_optimizer_flags(CLI::App* cmd, OptimizerConfig& cfg) {
  cmd->add_option("--t-min", cfg.t_min, "Lower end of the temperature bracket")
      ->capture_default_str();
  cmd->add_option("--t-max", cfg.t_max, "Upper end of the temperature bracket")
      ->capture_default_str();
  cmd->add_option("--grid-points", cfg.grid_points, "Log-spaced grid size")
      ->capture_default_str();
  cmd->add_option("--refine-tol", cfg.refine_tol,
                  "Golden-section stopping width on T")
      ->capture_default_str();
  cmd->add_option("--max-iters", cfg.max_refine_iters,
                  "Golden-section iteration cap")
      ->capture_default_str();
}

// --t VALUE or --fit FILE, exactly one.
struct TemperatureSource {
  std::optional<double> value;
  std::string fit_path;

  void attach(CLI::App* cmd) {
    auto* t = cmd->add_option("--t", value, "Temperature to apply");
    auto* f = cmd->add_option("--fit", fit_path,
                              "Read the temperature from a fit-ts/fit-uts JSON file");
    t->excludes(f);
    f->excludes(t);
  }

  Temperature resolve() const {
    if (value) return Temperature::fixed(*value);
    if (!fit_path.empty()) return temperature_from_json(read_text(fit_path));
    throw UsageError("one of --t or --fit is required");
  }
};

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

void print_fit(const CalibrationFit& fit, std::ostream& out) {
  const Temperature& t = fit.temperature;
  out << "T = " << t.value << " (" << to_string(t.method) << "), loss "
      << t.loss_at_optimum << ", " << t.evaluations << " evaluations\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Post-hoc temperature calibration of classifier logits", "tempcal"};
  app.require_subcommand(1);

  // synth
  SynthConfig synth_cfg;
  std::string synth_out;
  auto* synth = app.add_subcommand("synth", "Generate a labelled synthetic logits CSV");
  synth->add_option("--n", synth_cfg.n_samples, "Number of samples")->required();
  synth->add_option("--k", synth_cfg.n_classes, "Number of classes")->required();
  synth->add_option("--t0", synth_cfg.true_temperature, "Ground-truth temperature")
      ->required();
  synth->add_option("--sigma", synth_cfg.logit_scale, "Std dev of base logits")
      ->capture_default_str();
  synth->add_option("--seed", synth_cfg.seed, "Generator seed")->capture_default_str();
  synth->add_option("--out", synth_out, "Output CSV")->required();

  // split
  std::string split_in, split_calib, split_test;
  double split_frac = kDefaultCalibrationFraction;
  std::uint64_t split_seed = 0;
  CsvOptions split_csv;
  auto* split_cmd = app.add_subcommand("split", "Random calibration/test split");
  split_cmd->add_option("--in", split_in, "Input CSV")->required();
  split_cmd->add_option("--frac", split_frac, "Calibration fraction")
      ->capture_default_str();
  split_cmd->add_option("--seed", split_seed, "Shuffle seed")->capture_default_str();
  split_cmd->add_option("--out-calib", split_calib, "Calibration CSV")->required();
  split_cmd->add_option("--out-test", split_test, "Test CSV")->required();
  split_cmd->add_flag("--labels", split_csv.has_labels,
                      "Input has a trailing label column");
  split_cmd->add_flag("--header", split_csv.header, "Skip the first line");

  // fit-ts
  std::string ts_in, ts_out;
  OptimizerConfig ts_cfg;
  bool ts_header = false;
  auto* fit_ts_cmd = app.add_subcommand("fit-ts", "Fit T on labelled logits");
  fit_ts_cmd->add_option("--in", ts_in, "Labelled input CSV")->required();
  fit_ts_cmd->add_option("--out-json", ts_out, "Fit JSON")->required();
  fit_ts_cmd->add_flag("--header", ts_header, "Skip the first line");
  add_optimizer_flags(fit_ts_cmd, ts_cfg);

  // fit-uts
  std::string uts_in, uts_out;
  OptimizerConfig uts_cfg;
  CsvOptions uts_csv;
  auto* fit_uts_cmd = app.add_subcommand("fit-uts", "Fit T without labels");
  fit_uts_cmd->add_option("--in", uts_in, "Input CSV")->required();
  fit_uts_cmd->add_option("--out-json", uts_out, "Fit JSON")->required();
  fit_uts_cmd->add_flag("--labels", uts_csv.has_labels,
                        "Input has a trailing label column (ignored)");
  fit_uts_cmd->add_flag("--header", uts_csv.header, "Skip the first line");
  add_optimizer_flags(fit_uts_cmd, uts_cfg);

  // apply
  std::string apply_in, apply_out;
  TemperatureSource apply_t;
  CsvOptions apply_csv;
  auto* apply = app.add_subcommand("apply", "Write calibrated probabilities");
  apply->add_option("--in", apply_in, "Input CSV")->required();
  apply_t.attach(apply);
  apply->add_option("--out", apply_out, "Probabilities CSV")->required();
  apply->add_flag("--labels", apply_csv.has_labels,
                  "Input has a trailing label column (ignored)");
  apply->add_flag("--header", apply_csv.header, "Skip the first line");

  // evaluate
  std::string eval_in, eval_out;
  TemperatureSource eval_t;
  std::size_t eval_bins = kDefaultBins;
  bool eval_header = false;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Calibration report at a temperature");
  evaluate_cmd->add_option("--in", eval_in, "Labelled input CSV")->required();
  eval_t.attach(evaluate_cmd);
  evaluate_cmd->add_option("--bins", eval_bins, "Number of ECE bins")
      ->capture_default_str();
  evaluate_cmd->add_option("--out-json", eval_out, "Report JSON")->required();
  evaluate_cmd->add_flag("--header", eval_header, "Skip the first line");

  std::vector<std::string> argv_store = args;
  if (argv_store.empty()) argv_store.emplace_back("tempcal");
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*synth) {
      const LogitDataset data = generate(synth_cfg);
      write_logits_csv(synth_out, data);
      out << "wrote " << data.n_samples() << " x " << data.n_classes() << " logits to "
          << synth_out << '\n';
    } else if (*split_cmd) {
      const LogitDataset data = read_logits_csv(split_in, split_csv);
      const SplitResult parts = split(data, split_frac, split_seed);
      write_logits_csv(split_calib, parts.calibration);
      write_logits_csv(split_test, parts.test);
      out << "calibration " << parts.calibration.n_samples() << ", test "
          << parts.test.n_samples() << '\n';
    } else if (*fit_ts_cmd) {
      const LogitDataset data = read_logits_csv(ts_in, {true, ts_header});
      const CalibrationFit fit = fit_ts(data, ts_cfg);
      write_file_atomic(ts_out, fit_to_json(fit, data.n_samples(), data.n_classes()));
      print_fit(fit, out);
      print_warnings(fit.warnings, err);
    } else if (*fit_uts_cmd) {
      // Labels are parsed only to validate the file shape, then dropped.
      const LogitDataset data = read_logits_csv(uts_in, uts_csv).without_labels();
      const UtsFit result = fit_uts(data, uts_cfg);
      write_file_atomic(uts_out, fit_to_json(result.fit, data.n_samples(),
                                             data.n_classes(), &result.subsets));
      print_fit(result.fit, out);
      print_warnings(result.fit.warnings, err);
    } else if (*apply) {
      const Temperature t = apply_t.resolve();
      const LogitDataset data = read_logits_csv(apply_in, apply_csv);
      write_probabilities_csv(apply_out, tempered_softmax(data, t));
      out << "applied T = " << t.value << " to " << data.n_samples() << " samples\n";
    } else if (*evaluate_cmd) {
      const Temperature t = eval_t.resolve();
      const LogitDataset data = read_logits_csv(eval_in, {true, eval_header});
      CalibrationReport report = evaluate(data, t, eval_bins);
      if (!eval_t.fit_path.empty()) {
        report.uts_audit = uts_audit_from_json(read_text(eval_t.fit_path));
      }
      write_file_atomic(eval_out, report_to_json(report));
      out << "accuracy " << report.accuracy << ", NLL " << report.nll_mean << ", ECE "
          << report.ece_percent << "% at T = " << t.value << " ("
          << to_string(t.method) << ")\n";
      print_warnings(report.warnings, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kOk;
}

}  // namespace tempcal::cli
