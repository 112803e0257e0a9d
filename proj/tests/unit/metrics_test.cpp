#include "tempcal/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tempcal/errors.hpp"

namespace tempcal {
namespace {

using testing_helpers::probs;
using testing_helpers::to_matrix;

TEST(NllTest, CertainTrueLabelCostsNothing) {
  auto p = probs({{1.0, 0.0}});
  std::vector<ClassId> y = {0};
  EXPECT_EQ(nll(p, y).sum, 0.0);
}

TEST(NllTest, InverseEProbabilityCostsOne) {
  const double q = std::exp(-1.0);
  auto p = probs({{q, 1.0 - q}});
  std::vector<ClassId> y = {0};
  EXPECT_NEAR(nll(p, y).sum, 1.0, 1e-15);
}

TEST(NllTest, SumAndMeanOfTwoSamples) {
  // -ln 0.5 - ln 0.25 = 3 ln 2.
  auto p = probs({{0.5, 0.5}, {0.75, 0.25}});
  std::vector<ClassId> y = {0, 1};
  const NllResult r = nll(p, y);
  EXPECT_NEAR(r.sum, 2.0794415416798359283, 1e-14);
  EXPECT_NEAR(r.mean, 1.0397207708399179641, 1e-14);
  EXPECT_EQ(r.clamped, 0u);
}

TEST(NllTest, ZeroProbabilityIsClampedAndCounted) {
  auto p = probs({{1.0, 0.0}, {0.5, 0.5}});
  std::vector<ClassId> y = {1, 0};
  const NllResult r = nll(p, y);
  EXPECT_TRUE(std::isfinite(r.sum));
  EXPECT_NEAR(r.sum, -std::log(1e-300) + std::log(2.0), 1e-9);
  EXPECT_EQ(r.clamped, 1u);
}

TEST(NllTest, RejectsBadLabels) {
  auto p = probs({{0.5, 0.5}});
  std::vector<ClassId> wrong_len = {0, 1};
  std::vector<ClassId> out_of_range = {2};
  EXPECT_THROW(nll(p, wrong_len), DataError);
  EXPECT_THROW(nll(p, out_of_range), DataError);
}

TEST(EceTest, PerfectlyConfidentAndCorrectIsZero) {
  auto p = probs({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}});
  std::vector<ClassId> y = {0, 1, 2};
  const EceResult r = ece(p, y, 15);
  EXPECT_EQ(r.fraction, 0.0);
  EXPECT_EQ(r.bins.back().count, 3u);
}

TEST(EceTest, SingleBinHandExample) {
  // Confidences 0.8 (right) and 0.6 (wrong): |0.5 - 0.7| = 0.2.
  auto p = probs({{0.8, 0.2}, {0.6, 0.4}});
  std::vector<ClassId> y = {0, 1};
  const EceResult r = ece(p, y, 1);
  EXPECT_NEAR(r.fraction, 0.2, 1e-12);
  ASSERT_EQ(r.bins.size(), 1u);
  EXPECT_EQ(r.bins[0].count, 2u);
  EXPECT_NEAR(r.bins[0].accuracy, 0.5, 1e-15);
  EXPECT_NEAR(r.bins[0].mean_confidence, 0.7, 1e-15);
}

TEST(EceTest, ZeroBinsIsDomainError) {
  auto p = probs({{0.8, 0.2}});
  std::vector<ClassId> y = {0};
  EXPECT_THROW(ece(p, y, 0), DomainError);
}

TEST(EceTest, BinEdgesPartitionUnitInterval) {
  auto p = probs({{0.55, 0.45}});
  std::vector<ClassId> y = {0};
  const EceResult r = ece(p, y, 7);
  ASSERT_EQ(r.bins.size(), 7u);
  EXPECT_EQ(r.bins.front().lower, 0.0);
  EXPECT_EQ(r.bins.back().upper, 1.0);
  for (std::size_t l = 0; l < 7; ++l) {
    EXPECT_EQ(r.bins[l].index, l);
    EXPECT_NEAR(r.bins[l].upper - r.bins[l].lower, 1.0 / 7.0, 1e-15);
    if (l > 0) EXPECT_EQ(r.bins[l].lower, r.bins[l - 1].upper);
  }
}

TEST(EceProperty, MatchesBruteForceAndKeepsInvariants) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 100 + 20 * trial;
    const std::size_t k = 2 + trial % 6;
    const std::size_t bins = 1 + trial % 20;
    auto logits = oracle::random_logits(gen, n, k);
    auto y = oracle::random_labels(gen, n, k);
    const ConfidenceMatrix p = tempered_softmax(to_matrix(logits), 1.0);
    const auto rows = testing_helpers::to_rows(p.probs);
    const EceResult r = ece(p, y, bins);
    EXPECT_NEAR(r.fraction, oracle::ece(rows, y, bins), 1e-12);
    EXPECT_GE(r.fraction, 0.0);
    EXPECT_LE(r.fraction, 1.0);
    std::size_t total = 0;
    for (const auto& b : r.bins) {
      total += b.count;
      EXPECT_GE(b.accuracy, 0.0);
      EXPECT_LE(b.accuracy, 1.0);
      if (b.count > 0) {
        EXPECT_GE(b.mean_confidence, b.lower);
        EXPECT_LE(b.mean_confidence, b.upper);
      }
    }
    EXPECT_EQ(total, n);
    EXPECT_NEAR(nll(p, y).sum, oracle::nll_sum(rows, y), 1e-10);
    EXPECT_DOUBLE_EQ(accuracy(p, y), oracle::accuracy(rows, y));
  }
}

TEST(EceTest, ReferenceInstanceWithFifteenBins) {
  std::mt19937_64 gen(22);
  auto logits = oracle::random_logits(gen, 100, 5);
  auto y = oracle::random_labels(gen, 100, 5);
  const ConfidenceMatrix p = tempered_softmax(to_matrix(logits), 1.0);
  EXPECT_NEAR(ece(p, y, 15).fraction,
              oracle::ece(testing_helpers::to_rows(p.probs), y, 15), 1e-12);
}

TEST(AccuracyTest, Counting) {
  auto p = probs({{0.9, 0.1}, {0.2, 0.8}, {0.6, 0.4}, {0.3, 0.7}});
  std::vector<ClassId> all_right = {0, 1, 0, 1};
  std::vector<ClassId> all_wrong = {1, 0, 1, 0};
  std::vector<ClassId> three = {0, 1, 0, 0};
  EXPECT_EQ(accuracy(p, all_right), 1.0);
  EXPECT_EQ(accuracy(p, all_wrong), 0.0);
  EXPECT_EQ(accuracy(p, three), 0.75);
}

TEST(AccuracyProperty, UnchangedByTemperature) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto logits = oracle::random_logits(gen, 200, 4);
    auto y = oracle::random_labels(gen, 200, 4);
    const double base = accuracy(tempered_softmax(to_matrix(logits), 1.0), y);
    for (double t : {0.1, 0.7, 2.0, 9.0}) {
      EXPECT_EQ(accuracy(tempered_softmax(to_matrix(logits), t), y), base);
    }
  }
}

TEST(MetricReportRowTest, PercentIsHundredTimesFraction) {
  const auto row = MetricReportRow::make(0.105, 0.00727, 0.9903);
  EXPECT_EQ(row.ece_percent, 100.0 * row.ece_fraction);
  EXPECT_NEAR(row.ece_percent, 0.727, 1e-12);
}

}  // namespace
}  // namespace tempcal
