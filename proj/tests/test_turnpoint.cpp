#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "turnpoint.hpp"

using osn::BreakOptions;
using osn::BreakTransform;
using osn::CurvePoint;
using osn::DegreeCurve;

namespace {

DegreeCurve make_curve(const std::vector<double>& ks, const std::vector<double>& ys,
                       std::uint64_t count = 1) {
  DegreeCurve c;
  for (std::size_t i = 0; i < ks.size(); ++i)
    c.points.push_back({ks[i], ks[i] + 1, ys[i], count});
  return c;
}

// Piecewise power law: y = A k^a below kb, continuous slope change to b above.
DegreeCurve broken_power_law(double kb, double a, double b, double noise_sd,
                             std::uint32_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, noise_sd);
  DegreeCurve c;
  for (double k = 2; k <= 2000; k = std::max(k + 1, std::floor(k * 1.08))) {
    double y = (k <= kb) ? std::pow(k / kb, a) : std::pow(k / kb, b);
    y *= std::exp(noise(rng));
    c.points.push_back({k, k + 1, y, 50});
  }
  return c;
}

}  // namespace

TEST_CASE("fit_line recovers exact lines and honours weights") {
  std::vector<double> x = {1, 2, 3, 4};
  std::vector<double> y = {3, 5, 7, 9};  // y = 2x + 1
  std::vector<double> w = {1, 1, 1, 1};
  auto f = osn::fit_line(x, y, w);
  CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f.intercept == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.sse == doctest::Approx(0.0).epsilon(1e-12));

  // An outlier with vanishing weight should barely move the fit.
  std::vector<double> x2 = {1, 2, 3, 4, 5};
  std::vector<double> y2 = {3, 5, 7, 9, 100};
  std::vector<double> w2 = {1e6, 1e6, 1e6, 1e6, 1e-9};
  auto g = osn::fit_line(x2, y2, w2);
  CHECK(g.slope == doctest::Approx(2.0).epsilon(1e-4));

  CHECK_THROWS_AS(osn::fit_line(std::vector<double>{1.0}, std::vector<double>{1.0},
                                std::vector<double>{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(osn::fit_line(x, y, std::vector<double>{1, 1, 1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(osn::fit_line(x, std::vector<double>{1, 2}, std::vector<double>{1, 1}),
                  std::invalid_argument);
}

TEST_CASE("exact two-segment data is recovered with a huge ratio") {
  // Flat at 0.5 until k=60, then dropping linearly in log k. The drop is
  // anchored between grid points so the best split is unique: with the
  // anchor at 60 both k_T=55 and k_T=60 would fit perfectly.
  std::vector<double> ks, ys;
  for (double k = 10; k <= 200; k += 5) {
    ks.push_back(k);
    ys.push_back(k <= 60 ? 0.5 : 0.5 - 0.4 * (std::log(k) - std::log(62.0)));
  }
  BreakOptions opt;
  opt.k_lo = 10;
  opt.k_hi = 200;
  auto rep = osn::detect_break(make_curve(ks, ys), opt);
  CHECK(rep.k_T == 60.0);
  CHECK(rep.significant);
  CHECK(rep.improvement_ratio > 50.0);
  CHECK(std::abs(rep.left_slope) < 1e-9);
  CHECK(rep.right_slope < -0.1);
  CHECK(rep.points_used == ks.size());
  CHECK(rep.sse_split <= rep.sse_single);
}

TEST_CASE("noisy broken power law localizes the knee") {
  for (std::uint32_t seed : {1u, 2u, 3u, 4u, 5u}) {
    auto curve = broken_power_law(200.0, -0.3, -1.2, 0.02, seed);
    BreakOptions opt;
    opt.transform = BreakTransform::LogLog;
    auto rep = osn::detect_break(curve, opt);
    CHECK(rep.significant);
    CHECK(rep.k_T >= 150.0);
    CHECK(rep.k_T <= 260.0);
    CHECK(rep.left_slope > rep.right_slope);
  }
}

TEST_CASE("pure power law is not split") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> noise(0.0, 0.01);
  DegreeCurve c;
  for (double k = 2; k <= 2000; k = std::max(k + 1, std::floor(k * 1.08)))
    c.points.push_back({k, k + 1, 3.0 * std::pow(k, -0.8) * std::exp(noise(rng)), 40});
  BreakOptions opt;
  opt.transform = BreakTransform::LogLog;
  auto rep = osn::detect_break(c, opt);
  CHECK_FALSE(rep.significant);
  CHECK(rep.improvement_ratio < opt.threshold);
}

TEST_CASE("flat curve yields a degenerate split") {
  std::vector<double> ks, ys;
  for (double k = 50; k < 58; ++k) {
    ks.push_back(k);
    ys.push_back(1.0);
  }
  auto rep = osn::detect_break(make_curve(ks, ys));
  CHECK_FALSE(rep.significant);
  CHECK(rep.improvement_ratio == doctest::Approx(1.0));
}

TEST_CASE("input validation") {
  std::vector<double> ks = {50, 60, 70, 80, 90, 100, 110};
  std::vector<double> ys(7, 1.0);
  CHECK_THROWS_AS(osn::detect_break(make_curve(ks, ys)), std::invalid_argument);

  ks.push_back(120);
  ys.push_back(1.0);
  CHECK_NOTHROW(osn::detect_break(make_curve(ks, ys)));

  BreakOptions bad_range;
  bad_range.k_lo = 500;
  bad_range.k_hi = 100;
  CHECK_THROWS_AS(osn::detect_break(make_curve(ks, ys), bad_range),
                  std::invalid_argument);
  BreakOptions bad_threshold;
  bad_threshold.threshold = 0.5;
  CHECK_THROWS_AS(osn::detect_break(make_curve(ks, ys), bad_threshold),
                  std::invalid_argument);
}

TEST_CASE("log-log drops nonpositive means and reports it") {
  std::vector<double> ks, ys;
  for (double k = 50; k <= 50 + 11; ++k) {
    ks.push_back(k);
    ys.push_back(k < 53 ? 0.0 : 2.0);  // three zero points
  }
  BreakOptions opt;
  opt.transform = BreakTransform::LogLog;
  auto rep = osn::detect_break(make_curve(ks, ys), opt);
  CHECK(rep.points_dropped == 3);
  CHECK(rep.points_used == ks.size() - 3);
}

TEST_CASE("range filter restricts the candidate set") {
  // Knee at 60 is outside [100, 200]: the detector must not report it.
  std::vector<double> ks, ys;
  for (double k = 10; k <= 300; k += 5) {
    ks.push_back(k);
    ys.push_back(k <= 60 ? 0.5 : 0.5 - 0.4 * (std::log(k) - std::log(60.0)));
  }
  BreakOptions opt;
  opt.k_lo = 100;
  opt.k_hi = 200;
  auto rep = osn::detect_break(make_curve(ks, ys), opt);
  CHECK(rep.k_T >= 100.0);
  CHECK(rep.k_T <= 200.0);
}

TEST_CASE("scaling y leaves the log-log report unchanged") {
  auto c1 = broken_power_law(150.0, -0.2, -1.0, 0.015, 11);
  auto c2 = c1;
  for (auto& p : c2.points) p.mean *= 1e4;
  BreakOptions opt;
  opt.transform = BreakTransform::LogLog;
  auto r1 = osn::detect_break(c1, opt);
  auto r2 = osn::detect_break(c2, opt);
  CHECK(r1.k_T == r2.k_T);
  CHECK(r1.improvement_ratio == doctest::Approx(r2.improvement_ratio).epsilon(1e-9));
  CHECK(r1.left_slope == doctest::Approx(r2.left_slope).epsilon(1e-9));
}

TEST_CASE("count weighting matters") {
  // Identical means, but the right tail carries all the weight; the heavy side
  // must dominate the fit, which shifts the residual balance.
  std::vector<double> ks, ys;
  for (double k = 10; k <= 400; k *= 1.15) {
    ks.push_back(std::floor(k));
    ys.push_back(k <= 100 ? 1.0 : 1.0 - 0.5 * (std::log(k) - std::log(100.0)));
  }
  auto flat = make_curve(ks, ys, 1);
  DegreeCurve heavy = flat;
  for (auto& p : heavy.points) p.count = (p.k_lo <= 100 ? 1000 : 1);
  BreakOptions opt;
  opt.k_lo = 10;
  opt.k_hi = 400;
  auto r_flat = osn::detect_break(flat, opt);
  auto r_heavy = osn::detect_break(heavy, opt);
  // Both find the same knee here, but the SSE accounting must differ.
  CHECK(r_flat.sse_single != doctest::Approx(r_heavy.sse_single).epsilon(1e-9));
}

TEST_CASE("consensus summarises significant reports only") {
  osn::BreakReport a, b, c, d;
  a.k_T = 180;
  a.significant = true;
  b.k_T = 220;
  b.significant = true;
  c.k_T = 210;
  c.significant = true;
  d.k_T = 900;
  d.significant = false;
  auto con = osn::break_consensus({a, b, c, d});
  REQUIRE(con.has_value());
  CHECK(con->k_T_median == 210.0);
  CHECK(con->k_T_min == 180.0);
  CHECK(con->k_T_max == 220.0);
  CHECK(con->significant_count == 3);

  auto even = osn::break_consensus({a, b});
  REQUIRE(even.has_value());
  CHECK(even->k_T_median == 200.0);

  CHECK_FALSE(osn::break_consensus({d}).has_value());
  CHECK_FALSE(osn::break_consensus({}).has_value());
}
