#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pptdata/types.hpp"

namespace pptdata {

struct LossPoint {
  std::uint64_t step = 0;
  double loss = 0.0;
  friend bool operator==(const LossPoint&, const LossPoint&) = default;
};

/// (step, loss) series with strictly increasing steps.
///
/// `ppt_steps` is the number of pre-pretraining steps that preceded step 0
/// of this curve (0 for a baseline); the two token rates convert steps of
/// each stage into tokens.
struct LossCurve {
  std::vector<LossPoint> points;
  double tokens_per_step = 1.0;
  std::uint64_t ppt_steps = 0;
  double ppt_tokens_per_step = 1.0;
  std::string label;

  /// Throws InvalidArgument on fewer than 2 points, non-increasing steps or
  /// non-positive losses / rates.
  void validate() const;
};

/// Delimited text:
///   # tokens_per_step=65536
///   # ppt_steps=500
///   # ppt_tokens_per_step=65536
///   # label=shuffle-k64
///   step,loss
///   0,5.0
/// Comment keys are optional; tokens rates default to 1.
LossCurve parse_loss_curve(const std::string& text);
LossCurve read_loss_curve(const std::filesystem::path& path);
std::string format_loss_curve(const LossCurve& curve);

/// Trailing-window median of the losses (window 1 is the identity).
LossCurve smooth_median(const LossCurve& curve, std::size_t window = 5);

struct Crossing {
  double step = 0.0;
  bool non_monotone = false;  // the curve rose somewhere before the crossing
};

/// Smallest step at which the curve reaches `target_loss`, interpolating
/// linearly between the bracketing points. Throws NotReached when the curve
/// never gets that low.
Crossing indifference_point(const LossCurve& baseline, double target_loss);

/// Loss at `step` by linear interpolation; throws outside the curve's range.
double loss_at(const LossCurve& curve, double step);

/// A pre-pretraining / pretraining budget pair.
struct RunPoint {
  double ppt = 0.0;  // x
  double pt = 0.0;   // y
  std::optional<double> loss;
};

/// |y1 - y2| / |x1 - x2|. When both points carry losses they must agree
/// within `loss_tolerance`.
double mrs(const RunPoint& a, const RunPoint& b, double loss_tolerance = 1e-6);

/// Converts step counts to tokens at the given per-stage rates.
RunPoint to_tokens(const RunPoint& p, double ppt_tokens_per_step, double pt_tokens_per_step);

/// 1 - ppt_total / baseline_total.
double token_efficiency(double baseline_total, double ppt_total);

struct EfficiencyReport {
  double eval_step = 0.0;
  double target_loss = 0.0;
  RunPoint baseline_point;  // (0, eval_step)
  RunPoint run_point;       // (ppt_steps, crossing)
  double mrs_steps = 0.0;
  double mrs_tokens = 0.0;
  double efficiency = 0.0;
  double raw_crossing = 0.0;
  std::optional<std::size_t> smoothing_window;
  bool non_monotone = false;
};

/// Compares a pre-pretrained run against a baseline at `eval_step` of
/// baseline pretraining: finds where the run reaches the baseline's loss
/// there, and reports the MRS and token efficiency. Efficiency is computed
/// in tokens, which equals steps when both curves have unit rates. With a
/// smoothing window both curves are median-smoothed before the crossing is
/// located; the unsmoothed crossing is always kept in `raw_crossing`.
EfficiencyReport compare_runs(const LossCurve& baseline, const LossCurve& run, double eval_step,
                              std::optional<std::size_t> smoothing_window = std::nullopt);

}  // namespace pptdata
