#include "turnpoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace osn {

namespace {

constexpr double kSseFloor = 1e-18;

struct Pt {
  double k;  // untransformed degree (bin centre)
  double x;  // transformed abscissa
  double y;
  double w;
};

LineFit fit_range(const std::vector<Pt>& pts, std::size_t lo, std::size_t hi) {
  double sw = 0, sx = 0, sy = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    sw += pts[i].w;
    sx += pts[i].w * pts[i].x;
    sy += pts[i].w * pts[i].y;
  }
  const double mx = sx / sw, my = sy / sw;
  double sxx = 0, sxy = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    const double dx = pts[i].x - mx;
    sxx += pts[i].w * dx * dx;
    sxy += pts[i].w * dx * (pts[i].y - my);
  }
  LineFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = lo; i < hi; ++i) {
    const double r = pts[i].y - (f.intercept + f.slope * pts[i].x);
    f.sse += pts[i].w * r * r;
  }
  return f;
}

}  // namespace

LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 std::span<const double> w) {
  if (x.size() != y.size() || x.size() != w.size())
    throw std::invalid_argument("fit_line: mismatched lengths");
  if (x.size() < 2) throw std::invalid_argument("fit_line: need at least two points");
  std::vector<Pt> pts(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(w[i] > 0)) throw std::invalid_argument("fit_line: weights must be positive");
    pts[i] = {x[i], x[i], y[i], w[i]};
  }
  return fit_range(pts, 0, pts.size());
}

BreakReport detect_break(const DegreeCurve& curve, const BreakOptions& opt) {
  if (!(opt.k_lo < opt.k_hi)) throw std::invalid_argument("detect_break: empty search range");
  if (opt.threshold < 1.0) throw std::invalid_argument("detect_break: threshold below 1");

  BreakReport rep;
  std::vector<Pt> pts;
  pts.reserve(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double k = curve.x(i);
    if (k < opt.k_lo || k > opt.k_hi) continue;
    if (k < 1.0) {  // log of the isolate bin is undefined
      ++rep.points_dropped;
      continue;
    }
    const double y = curve.points[i].mean;
    if (opt.transform == BreakTransform::LogLog && !(y > 0)) {
      ++rep.points_dropped;
      continue;
    }
    Pt p;
    p.k = k;
    p.x = std::log10(k);
    p.y = opt.transform == BreakTransform::LogLog ? std::log10(y) : y;
    p.w = static_cast<double>(curve.points[i].count);
    pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.k < b.k; });
  rep.points_used = pts.size();
  if (pts.size() < 8)
    throw std::invalid_argument("detect_break: fewer than 8 curve points in search range");

  const LineFit single = fit_range(pts, 0, pts.size());
  rep.sse_single = single.sse;

  double best_sse = std::numeric_limits<double>::infinity();
  std::size_t best_split = 0;  // left = [0, split), right = [split, n)
  LineFit best_l, best_r;
  for (std::size_t split = 2; split + 2 <= pts.size(); ++split) {
    const LineFit l = fit_range(pts, 0, split);
    const LineFit r = fit_range(pts, split, pts.size());
    const double sse = l.sse + r.sse;
    if (sse < best_sse) {
      best_sse = sse;
      best_split = split;
      best_l = l;
      best_r = r;
    }
  }

  rep.sse_split = best_sse;
  rep.k_T = pts[best_split - 1].k;  // last point of the left segment
  rep.left_slope = best_l.slope;
  rep.left_intercept = best_l.intercept;
  rep.right_slope = best_r.slope;
  rep.right_intercept = best_r.intercept;

  if (rep.sse_single <= kSseFloor) {
    // Degenerate: the curve is already a perfect line; nothing to detect.
    rep.improvement_ratio = 1.0;
    rep.significant = false;
  } else if (rep.sse_split <= kSseFloor) {
    rep.improvement_ratio = std::numeric_limits<double>::infinity();
    rep.significant = true;
  } else {
    rep.improvement_ratio = rep.sse_single / rep.sse_split;
    rep.significant = rep.improvement_ratio >= opt.threshold;
  }
  return rep;
}

std::optional<BreakConsensus> break_consensus(const std::vector<BreakReport>& reports) {
  std::vector<double> ks;
  for (const auto& r : reports)
    if (r.significant) ks.push_back(r.k_T);
  if (ks.empty()) return std::nullopt;
  std::sort(ks.begin(), ks.end());
  BreakConsensus c;
  c.significant_count = ks.size();
  c.k_T_min = ks.front();
  c.k_T_max = ks.back();
  const std::size_t n = ks.size();
  c.k_T_median = (n % 2 == 1) ? ks[n / 2] : 0.5 * (ks[n / 2 - 1] + ks[n / 2]);
  return c;
}

}  // namespace osn
