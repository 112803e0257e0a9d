#include "tempcal/report.hpp"

#include <gtest/gtest.h>

#include "tempcal/errors.hpp"
#include "tempcal/io.hpp"
#include "tempcal/synth.hpp"
#include "tempcal/ts.hpp"

namespace tempcal {
namespace {

TEST(EvaluateTest, UnitTemperatureMatchesPlainMetrics) {
  const LogitDataset d = generate({2000, 5, 2.0, 2.0, 61});
  const CalibrationReport r = evaluate(d, Temperature::fixed(1.0), 15);
  const auto p = tempered_softmax(d, 1.0);
  const auto y = d.require_labels();
  EXPECT_EQ(r.accuracy, accuracy(p, y));
  EXPECT_EQ(r.nll_sum, nll(p, y).sum);
  EXPECT_EQ(r.nll_mean, nll(p, y).mean);
  EXPECT_EQ(r.ece_fraction, ece(p, y, 15).fraction);
  EXPECT_EQ(r.ece_percent, 100.0 * r.ece_fraction);
  EXPECT_EQ(r.bins.size(), 15u);
  EXPECT_EQ(r.temperature.method, Method::kFixed);
  EXPECT_EQ(r.temperature.value, 1.0);
}

TEST(EvaluateTest, FittedTemperatureBeatsUncalibrated) {
  const LogitDataset d = generate({50'000, 10, 2.5, 2.0, 62});
  const SplitResult parts = split(d, 0.2, 62);
  const CalibrationFit fit = fit_ts(parts.calibration);
  const CalibrationReport before = evaluate(parts.test, Temperature::fixed(1.0));
  const CalibrationReport after = evaluate(parts.test, fit.temperature);
  EXPECT_LT(after.nll_mean, before.nll_mean);
  EXPECT_LT(after.ece_fraction, before.ece_fraction);
  EXPECT_EQ(after.accuracy, before.accuracy);
  EXPECT_EQ(after.temperature.method, Method::kTs);
}

TEST(EvaluateTest, NeedsLabels) {
  const LogitDataset d = generate({20, 3, 1.0, 2.0, 1}).without_labels();
  EXPECT_THROW(evaluate(d, Temperature::fixed(1.0)), UsageError);
}

TEST(EvaluateTest, UnderflowIsFlagged) {
  const LogitDataset d(Matrix(1, 2, std::vector<double>{0.0, 2000.0}),
                       std::vector<ClassId>{0});
  const CalibrationReport r = evaluate(d, Temperature::fixed(1.0));
  EXPECT_EQ(r.nll_clamped, 1u);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(ReportJsonTest, RoundTripsAndIsStable) {
  const LogitDataset d = generate({500, 4, 1.7, 2.0, 63});
  CalibrationReport r = evaluate(d, Temperature::fixed(1.3), 10);
  r.warnings.push_back("note");
  r.uts_audit = std::vector<UtsAuditEntry>{{0, 0.25, 10, 90}, {1, 0.5, 3, 97}};
  const std::string text = report_to_json(r);
  const CalibrationReport back = report_from_json(text);
  EXPECT_EQ(back.accuracy, r.accuracy);
  EXPECT_EQ(back.nll_mean, r.nll_mean);
  EXPECT_EQ(back.nll_sum, r.nll_sum);
  EXPECT_EQ(back.ece_fraction, r.ece_fraction);
  EXPECT_EQ(back.ece_percent, r.ece_percent);
  EXPECT_EQ(back.bins, r.bins);
  EXPECT_EQ(back.warnings, r.warnings);
  EXPECT_EQ(back.uts_audit, r.uts_audit);
  EXPECT_EQ(back.temperature.value, 1.3);
  EXPECT_EQ(report_to_json(back), text);
}

TEST(ReportJsonTest, SameInputsSameBytes) {
  const LogitDataset d = generate({300, 3, 2.0, 2.0, 64});
  EXPECT_EQ(report_to_json(evaluate(d, Temperature::fixed(2.0))),
            report_to_json(evaluate(d, Temperature::fixed(2.0))));
}

TEST(ReportJsonTest, KeysInFixedOrder) {
  const LogitDataset d = generate({50, 3, 2.0, 2.0, 65});
  const std::string text = report_to_json(evaluate(d, Temperature::fixed(1.0)));
  const std::vector<std::string> keys = {"\"schema\"",      "\"accuracy\"",
                                         "\"nll_mean\"",    "\"nll_sum\"",
                                         "\"ece_fraction\"", "\"ece_percent\"",
                                         "\"n_bins\"",      "\"temperature\"",
                                         "\"bins\"",        "\"warnings\"",
                                         "\"uts_audit\""};
  std::size_t last = 0;
  for (const auto& k : keys) {
    const std::size_t pos = text.find(k);
    ASSERT_NE(pos, std::string::npos) << k;
    EXPECT_GT(pos, last) << k;
    last = pos;
  }
  EXPECT_NE(text.find("\"schema\": 1"), std::string::npos);
}

TEST(ReportJsonTest, TableRowLiteralsSurvive) {
  // Accuracy 99.03%, NLL 0.105, ECE 0.727 (percent), uncalibrated.
  CalibrationReport r;
  r.accuracy = 0.9903;
  r.nll_mean = 0.105;
  r.ece_fraction = 0.00727;
  r.ece_percent = 0.727;
  r.temperature = Temperature::fixed(1.0);
  const CalibrationReport back = report_from_json(report_to_json(r));
  EXPECT_EQ(back.accuracy, 0.9903);
  EXPECT_EQ(back.nll_mean, 0.105);
  EXPECT_EQ(back.ece_percent, 0.727);
  EXPECT_EQ(back.temperature.value, 1.0);
  EXPECT_EQ(back.temperature.method, Method::kFixed);
}

TEST(ReportJsonTest, RejectsMalformedDocuments) {
  EXPECT_THROW(report_from_json("{"), DataError);
  EXPECT_THROW(report_from_json("{\"schema\": 2}"), DataError);
  EXPECT_THROW(report_from_json("{\"schema\": 1}"), DataError);
  EXPECT_THROW(temperature_from_json(
                   "{\"schema\": 1, \"temperature\": {\"value\": -1, \"method\": \"TS\"}}"),
               DomainError);
}

TEST(FitJsonTest, CarriesTemperatureAndAudit) {
  const LogitDataset d = generate({800, 4, 2.0, 2.0, 66});
  const UtsFit r = fit_uts(d);
  const std::string text = fit_to_json(r.fit, d.n_samples(), d.n_classes(), &r.subsets);
  const Temperature t = temperature_from_json(text);
  EXPECT_EQ(t.value, r.fit.temperature.value);
  EXPECT_EQ(t.method, Method::kUts);
  EXPECT_EQ(t.evaluations, r.fit.temperature.evaluations);
  const auto audit = uts_audit_from_json(text);
  ASSERT_TRUE(audit.has_value());
  EXPECT_EQ(*audit, make_uts_audit(r.subsets));
  EXPECT_EQ((*audit)[2].subset_size, r.subsets.subsets[2].size());

  const CalibrationFit ts = fit_ts(d);
  EXPECT_FALSE(uts_audit_from_json(fit_to_json(ts, d.n_samples(), d.n_classes())));
}

}  // namespace
}  // namespace tempcal
