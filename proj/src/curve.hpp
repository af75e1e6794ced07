#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace osn {

// One aggregated point: nodes with degree in [k_lo, k_hi). Exact-degree
// curves have k_hi == k_lo + 1.
struct CurvePoint {
  double k_lo = 0;
  double k_hi = 0;
  double mean = 0;
  std::uint64_t count = 0;
};

struct BinSpec {
  enum class Mode { Exact, Log } mode = Mode::Exact;
  double ratio = 1.25;  // log-bin growth factor, > 1
};

// Ordered per-degree statistic; the exchange type between the metric passes,
// the break detector and the CSV files.
struct DegreeCurve {
  std::vector<CurvePoint> points;  // ascending, disjoint bins
  bool binned = false;             // true -> 4-column CSV with k_lo,k_hi

  std::size_t size() const { return points.size(); }
  // Representative abscissa: the degree itself for exact bins, the geometric
  // centre for wide bins.
  double x(std::size_t idx) const;
};

// CSV contract: header "k,mean,count" (exact) or "k_lo,k_hi,mean,count"
// (binned), rows ascending in k. Numbers use shortest round-trip formatting,
// so write -> read -> write is byte-identical.
void write_curve_csv(const DegreeCurve& curve, const std::string& path);
DegreeCurve read_curve_csv(const std::string& path);

std::string format_double(double v);
double parse_double(const std::string& token);

// Integer lower bin edges 1, ... growing by ~ratio, covering [1, k_max].
std::vector<std::uint64_t> log_bin_edges(std::uint64_t k_max, double ratio);

}  // namespace osn
