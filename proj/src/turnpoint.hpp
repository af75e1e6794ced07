#pragma once
// Two-segment change-point detection on degree curves.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "curve.hpp"

namespace osn {

enum class BreakTransform { LogX, LogLog };

struct BreakOptions {
  double k_lo = 50.0;
  double k_hi = 1000.0;
  double threshold = 1.2;  // single-line SSE / two-segment SSE required for significance
  BreakTransform transform = BreakTransform::LogX;
};

struct BreakReport {
  double k_T = 0.0;
  double improvement_ratio = 1.0;
  double left_slope = 0.0;
  double right_slope = 0.0;
  double left_intercept = 0.0;
  double right_intercept = 0.0;
  bool significant = false;
  double sse_single = 0.0;
  double sse_split = 0.0;
  std::size_t points_used = 0;
  std::size_t points_dropped = 0;  // nonpositive y under log-log, or k < 1
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double sse = 0.0;
};

// Weighted least squares of y on x; weights must be positive.
LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 std::span<const double> w);

// Grid search over candidate breakpoints at observed k values inside
// [k_lo, k_hi]; count-weighted line fit on each side.  Throws
// invalid_argument when fewer than 8 usable points fall in the range.
BreakReport detect_break(const DegreeCurve& curve, const BreakOptions& opt = {});

struct BreakConsensus {
  double k_T_median = 0.0;
  double k_T_min = 0.0;
  double k_T_max = 0.0;
  std::size_t significant_count = 0;
};

// Median and range of significant estimates; nullopt when none are significant.
std::optional<BreakConsensus> break_consensus(const std::vector<BreakReport>& reports);

}  // namespace osn
