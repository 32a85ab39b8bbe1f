#include "pptdata/efficiency.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

namespace pptdata {
namespace {

LossCurve linear_curve(std::uint64_t last_step, double start, double end, std::uint64_t ppt_steps = 0) {
  LossCurve c;
  const std::uint64_t stride = last_step / 100;
  for (std::uint64_t s = 0; s <= last_step; s += stride)
    c.points.push_back({s, start + (end - start) * double(s) / double(last_step)});
  c.ppt_steps = ppt_steps;
  return c;
}

TEST(Mrs, WorkedExample) {
  const RunPoint base{0, 10000, std::nullopt};
  const RunPoint run{500, 6000, std::nullopt};
  EXPECT_DOUBLE_EQ(mrs(base, run), 8.0);
  EXPECT_DOUBLE_EQ(token_efficiency(10000, 500 + 6000), 0.35);
}

TEST(Mrs, Symmetric) {
  const RunPoint a{100, 9000, 2.0};
  const RunPoint b{700, 4000, 2.0};
  EXPECT_DOUBLE_EQ(mrs(a, b), mrs(b, a));
}

TEST(Mrs, ScalingBothAxesTogetherLeavesItUnchanged) {
  const RunPoint a{0, 10000, std::nullopt};
  const RunPoint b{500, 6000, std::nullopt};
  EXPECT_DOUBLE_EQ(mrs(to_tokens(a, 65536, 65536), to_tokens(b, 65536, 65536)), mrs(a, b));
  // Cheaper pre-pretraining tokens raise the rate.
  EXPECT_DOUBLE_EQ(mrs(to_tokens(a, 1024, 65536), to_tokens(b, 1024, 65536)), 8.0 * 64);
}

TEST(Mrs, Errors) {
  EXPECT_THROW(mrs({5, 1, std::nullopt}, {5, 2, std::nullopt}), InvalidArgument);
  EXPECT_THROW(mrs({0, 1, 2.0}, {5, 2, 2.5}), InvalidArgument);
  EXPECT_THROW(mrs({-1, 1, std::nullopt}, {5, 2, std::nullopt}), InvalidArgument);
  EXPECT_NO_THROW(mrs({0, 1, 2.0}, {5, 2, 2.0 + 1e-9}));
}

TEST(TokenEfficiency, SignAndBounds) {
  EXPECT_GT(token_efficiency(10000, 6500), 0.0);
  EXPECT_LT(token_efficiency(10000, 12000), 0.0);
  EXPECT_DOUBLE_EQ(token_efficiency(10000, 10000), 0.0);
  EXPECT_LT(token_efficiency(10000, 1), 1.0);
  EXPECT_THROW(token_efficiency(0, 1), InvalidArgument);
}

TEST(IndifferencePoint, InterpolatesAndReportsNotReached) {
  LossCurve c;
  c.points = {{0, 5.0}, {100, 3.0}, {200, 2.0}};
  EXPECT_DOUBLE_EQ(indifference_point(c, 4.0).step, 50.0);
  EXPECT_DOUBLE_EQ(indifference_point(c, 2.0).step, 200.0);
  EXPECT_DOUBLE_EQ(indifference_point(c, 9.0).step, 0.0);
  EXPECT_FALSE(indifference_point(c, 2.5).non_monotone);
  EXPECT_THROW(indifference_point(c, 1.5), NotReached);
}

TEST(IndifferencePoint, FirstCrossingOnNoisyCurve) {
  LossCurve c;
  c.points = {{0, 5.0}, {10, 3.0}, {20, 3.4}, {30, 2.0}};
  const auto x = indifference_point(c, 3.0);
  EXPECT_DOUBLE_EQ(x.step, 10.0);
  EXPECT_FALSE(x.non_monotone);
  const auto y = indifference_point(c, 2.5);
  EXPECT_TRUE(y.non_monotone);
  EXPECT_NEAR(y.step, 20 + 10 * 0.9 / 1.4, 1e-12);
}

TEST(IndifferencePoint, MonotoneInTarget) {
  const auto c = linear_curve(10000, 5.0, 2.0);
  double prev = -1;
  for (double target = 4.9; target > 2.0; target -= 0.1) {
    const double s = indifference_point(c, target).step;
    EXPECT_GE(s, prev);
    prev = s;
  }
}

TEST(CompareRuns, WorkedExampleFromCurves) {
  const auto base = linear_curve(10000, 5.0, 2.0);
  // The run starts lower and reaches loss 2.0 at step 6000.
  const auto run = linear_curve(10000, 3.5, 3.5 - 1.5 * 10000.0 / 6000.0, 500);
  const auto r = compare_runs(base, run, 10000);
  EXPECT_NEAR(r.run_point.pt, 6000.0, 1e-6);
  EXPECT_NEAR(r.mrs_steps, 8.0, 1e-9);
  EXPECT_NEAR(r.efficiency, 0.35, 1e-9);
  EXPECT_DOUBLE_EQ(r.raw_crossing, r.run_point.pt);
  EXPECT_FALSE(r.smoothing_window.has_value());
}

TEST(CompareRuns, TokenUnitsUseEachStageRate) {
  auto base = linear_curve(10000, 5.0, 2.0);
  auto run = linear_curve(10000, 3.5, 3.5 - 1.5 * 10000.0 / 6000.0, 500);
  base.tokens_per_step = run.tokens_per_step = 65536;
  base.ppt_tokens_per_step = run.ppt_tokens_per_step = 65536;
  const auto same = compare_runs(base, run, 10000);
  EXPECT_NEAR(same.mrs_tokens, same.mrs_steps, 1e-9);
  EXPECT_NEAR(same.efficiency, 0.35, 1e-9);

  run.ppt_tokens_per_step = 65536.0 / 2;
  const auto half = compare_runs(base, run, 10000);
  EXPECT_NEAR(half.mrs_tokens, 16.0, 1e-9);
  EXPECT_NEAR(half.efficiency, 1.0 - 6250.0 / 10000.0, 1e-9);
}

TEST(CompareRuns, SmoothingIsOptInAndRawKept) {
  auto base = linear_curve(1000, 5.0, 2.0);
  auto run = linear_curve(1000, 4.0, 1.5, 50);
  run.points[40].loss = 1.0;  // spike
  const auto raw = compare_runs(base, run, 1000);
  EXPECT_DOUBLE_EQ(raw.run_point.pt, raw.raw_crossing);
  EXPECT_LT(raw.run_point.pt, 400.0 + 1e-9);
  const auto smooth = compare_runs(base, run, 1000, 5);
  EXPECT_GT(smooth.run_point.pt, raw.run_point.pt);
  EXPECT_DOUBLE_EQ(smooth.raw_crossing, raw.raw_crossing);
  ASSERT_TRUE(smooth.smoothing_window.has_value());
}

TEST(CompareRuns, Errors) {
  const auto base = linear_curve(1000, 5.0, 2.0);
  EXPECT_THROW(compare_runs(base, linear_curve(1000, 4.0, 1.5, 0), 1000), InvalidArgument);
  EXPECT_THROW(compare_runs(base, linear_curve(1000, 4.0, 3.0, 50), 1000), NotReached);
  EXPECT_THROW(compare_runs(base, linear_curve(1000, 4.0, 1.5, 50), 2000), InvalidArgument);
}

TEST(SmoothMedian, TrailingWindow) {
  LossCurve c;
  c.points = {{0, 5}, {1, 1}, {2, 4}, {3, 3}, {4, 9}};
  const auto s = smooth_median(c, 3);
  std::vector<double> got;
  for (const auto& p : s.points) got.push_back(p.loss);
  EXPECT_EQ(got, (std::vector<double>{5, 3, 4, 3, 4}));
  EXPECT_EQ(smooth_median(c, 1).points, c.points);
  EXPECT_THROW(smooth_median(c, 0), InvalidArgument);
}

TEST(LossCurveText, ParseAndFormat) {
  const std::string text =
      "# tokens_per_step=65536\n# ppt_steps=500\n# label=shuffle\nstep,loss\n0,5.0\n100,4.5\n\n200,4.25\n";
  const auto c = parse_loss_curve(text);
  EXPECT_EQ(c.points.size(), 3u);
  EXPECT_DOUBLE_EQ(c.tokens_per_step, 65536);
  EXPECT_DOUBLE_EQ(c.ppt_tokens_per_step, 65536);
  EXPECT_EQ(c.ppt_steps, 500u);
  EXPECT_EQ(c.label, "shuffle");
  const auto again = parse_loss_curve(format_loss_curve(c));
  EXPECT_EQ(again.points, c.points);
  EXPECT_EQ(again.ppt_steps, c.ppt_steps);
  EXPECT_EQ(again.label, c.label);
}

TEST(LossCurveText, Rejects) {
  EXPECT_THROW(parse_loss_curve("step,loss\n0,5\n"), InvalidArgument);
  EXPECT_THROW(parse_loss_curve("step,loss\n0,5\n0,4\n"), InvalidArgument);
  EXPECT_THROW(parse_loss_curve("step,loss\n0,5\n1,-4\n"), InvalidArgument);
  EXPECT_THROW(parse_loss_curve("epoch,loss\n0,5\n1,4\n"), FormatError);
  EXPECT_THROW(parse_loss_curve("step,loss\n0,5\n1,abc\n"), FormatError);
  EXPECT_THROW(parse_loss_curve("step,loss\n0.5,5\n1,4\n"), FormatError);
  EXPECT_THROW(read_loss_curve("/nonexistent/curve.csv"), IoError);
}

TEST(LossCurveText, LabelDefaultsToFileStem) {
  const auto path = std::filesystem::temp_directory_path() / "pptdata_baseline.csv";
  {
    std::ofstream out(path);
    out << "step,loss\n0,5\n10,4\n";
  }
  EXPECT_EQ(read_loss_curve(path).label, "pptdata_baseline");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace pptdata
