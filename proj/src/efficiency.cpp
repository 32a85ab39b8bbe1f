#include "pptdata/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pptdata {

void LossCurve::validate() const {
  if (points.size() < 2) throw InvalidArgument("loss curve needs at least 2 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].loss > 0.0) || !std::isfinite(points[i].loss))
      throw InvalidArgument("loss curve losses must be positive and finite");
    if (i && points[i].step <= points[i - 1].step)
      throw InvalidArgument("loss curve steps must be strictly increasing");
  }
  if (!(tokens_per_step > 0.0) || !(ppt_tokens_per_step > 0.0))
    throw InvalidArgument("tokens_per_step must be positive");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (trim(s.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw FormatError("loss curve: bad " + what + " '" + s + "'");
}

}  // namespace

LossCurve parse_loss_curve(const std::string& text) {
  LossCurve curve;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = trim(body.substr(0, eq));
      const std::string value = trim(body.substr(eq + 1));
      if (key == "tokens_per_step") {
        curve.tokens_per_step = parse_double(value, key);
      } else if (key == "ppt_steps") {
        curve.ppt_steps = static_cast<std::uint64_t>(parse_double(value, key));
      } else if (key == "ppt_tokens_per_step") {
        curve.ppt_tokens_per_step = parse_double(value, key);
      } else if (key == "label") {
        curve.label = value;
      }
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      if (line == "step,loss") continue;
      // Headerless files are accepted if the first row is numeric.
      if (!std::isdigit(static_cast<unsigned char>(line[0])))
        throw FormatError("loss curve: expected header 'step,loss', got '" + line + "'");
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw FormatError("loss curve: line " + std::to_string(line_no) + " is not 'step,loss'");
    const double step = parse_double(line.substr(0, comma), "step");
    if (step < 0 || step != std::floor(step)) throw FormatError("loss curve: step must be a non-negative integer");
    curve.points.push_back({static_cast<std::uint64_t>(step), parse_double(line.substr(comma + 1), "loss")});
  }
  // Curves that do not declare a pre-pretraining rate share the main rate.
  if (text.find("ppt_tokens_per_step") == std::string::npos) curve.ppt_tokens_per_step = curve.tokens_per_step;
  curve.validate();
  return curve;
}

LossCurve read_loss_curve(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  LossCurve c = parse_loss_curve(buf.str());
  if (c.label.empty()) c.label = path.stem().string();
  return c;
}

std::string format_loss_curve(const LossCurve& curve) {
  std::ostringstream out;
  out.precision(17);
  out << "# tokens_per_step=" << curve.tokens_per_step << "\n";
  if (curve.ppt_steps) {
    out << "# ppt_steps=" << curve.ppt_steps << "\n";
    out << "# ppt_tokens_per_step=" << curve.ppt_tokens_per_step << "\n";
  }
  if (!curve.label.empty()) out << "# label=" << curve.label << "\n";
  out << "step,loss\n";
  for (const auto& p : curve.points) out << p.step << ',' << p.loss << "\n";
  return out.str();
}

LossCurve smooth_median(const LossCurve& curve, std::size_t window) {
  if (window < 1) throw InvalidArgument("smoothing window must be >= 1");
  LossCurve out = curve;
  std::vector<double> buf;
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const std::size_t begin = i + 1 >= window ? i + 1 - window : 0;
    buf.clear();
    for (std::size_t j = begin; j <= i; ++j) buf.push_back(curve.points[j].loss);
    std::sort(buf.begin(), buf.end());
    const std::size_t n = buf.size();
    out.points[i].loss = n % 2 ? buf[n / 2] : 0.5 * (buf[n / 2 - 1] + buf[n / 2]);
  }
  return out;
}

Crossing indifference_point(const LossCurve& baseline, double target_loss) {
  baseline.validate();
  if (!(target_loss > 0.0)) throw InvalidArgument("target loss must be positive");
  const auto& pts = baseline.points;
  bool rose = false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i && pts[i].loss > pts[i - 1].loss) rose = true;
    if (pts[i].loss > target_loss) continue;
    if (i == 0) return {double(pts[0].step), false};
    const auto& a = pts[i - 1];
    const auto& b = pts[i];
    const double frac = (a.loss - target_loss) / (a.loss - b.loss);
    return {double(a.step) + frac * double(b.step - a.step), rose};
  }
  std::ostringstream msg;
  msg << "target loss " << target_loss << " not reached";
  if (!baseline.label.empty()) msg << " by curve '" << baseline.label << "'";
  throw NotReached(msg.str());
}

double loss_at(const LossCurve& curve, double step) {
  curve.validate();
  const auto& pts = curve.points;
  if (step < double(pts.front().step) || step > double(pts.back().step))
    throw InvalidArgument("step outside the curve's range");
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (step <= double(pts[i].step)) {
      const auto& a = pts[i - 1];
      const auto& b = pts[i];
      const double frac = (step - double(a.step)) / double(b.step - a.step);
      return a.loss + frac * (b.loss - a.loss);
    }
  }
  return pts.back().loss;
}

double mrs(const RunPoint& a, const RunPoint& b, double loss_tolerance) {
  if (a.ppt < 0 || a.pt < 0 || b.ppt < 0 || b.pt < 0) throw InvalidArgument("run points must be non-negative");
  if (a.ppt == b.ppt) throw InvalidArgument("MRS undefined: both points have the same pre-pretraining budget");
  if (a.loss && b.loss && std::abs(*a.loss - *b.loss) > loss_tolerance)
    throw InvalidArgument("MRS points are not on the same indifference level");
  return std::abs(a.pt - b.pt) / std::abs(a.ppt - b.ppt);
}

RunPoint to_tokens(const RunPoint& p, double ppt_tokens_per_step, double pt_tokens_per_step) {
  return {p.ppt * ppt_tokens_per_step, p.pt * pt_tokens_per_step, p.loss};
}

double token_efficiency(double baseline_total, double ppt_total) {
  if (!(baseline_total > 0.0) || !(ppt_total > 0.0)) throw InvalidArgument("token totals must be positive");
  return 1.0 - ppt_total / baseline_total;
}

EfficiencyReport compare_runs(const LossCurve& baseline, const LossCurve& run, double eval_step,
                              std::optional<std::size_t> smoothing_window) {
  baseline.validate();
  run.validate();
  if (run.ppt_steps == 0) throw InvalidArgument("run curve declares no pre-pretraining steps (ppt_steps)");

  EfficiencyReport r;
  r.eval_step = eval_step;
  r.smoothing_window = smoothing_window;

  const double raw_target = loss_at(baseline, eval_step);
  r.raw_crossing = indifference_point(run, raw_target).step;

  const LossCurve base_used = smoothing_window ? smooth_median(baseline, *smoothing_window) : baseline;
  const LossCurve run_used = smoothing_window ? smooth_median(run, *smoothing_window) : run;
  r.target_loss = loss_at(base_used, eval_step);
  const Crossing crossing = indifference_point(run_used, r.target_loss);
  r.non_monotone = crossing.non_monotone;

  r.baseline_point = {0.0, eval_step, r.target_loss};
  r.run_point = {double(run.ppt_steps), crossing.step, r.target_loss};
  r.mrs_steps = mrs(r.baseline_point, r.run_point);

  const RunPoint base_tokens = to_tokens(r.baseline_point, baseline.ppt_tokens_per_step, baseline.tokens_per_step);
  const RunPoint run_tokens = to_tokens(r.run_point, run.ppt_tokens_per_step, run.tokens_per_step);
  r.mrs_tokens = mrs(base_tokens, run_tokens);
  r.efficiency = token_efficiency(base_tokens.pt, run_tokens.ppt + run_tokens.pt);
  return r;
}

}  // namespace pptdata
