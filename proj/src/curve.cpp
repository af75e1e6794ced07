#include "curve.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "edgelist.hpp"  // ParseError

namespace osn {

double DegreeCurve::x(std::size_t idx) const {
  const CurvePoint& p = points[idx];
  if (p.k_hi <= p.k_lo + 1) return p.k_lo;
  double hi = p.k_hi - 1;  // highest integer degree inside the bin
  return p.k_lo > 0 ? std::sqrt(p.k_lo * hi) : (p.k_lo + hi) / 2.0;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

double parse_double(const std::string& token) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("not a number: '" + token + "'");
  return v;
}

void write_curve_csv(const DegreeCurve& curve, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write curve: " + path);
  out << (curve.binned ? "k_lo,k_hi,mean,count\n" : "k,mean,count\n");
  for (const CurvePoint& p : curve.points) {
    if (curve.binned)
      out << format_double(p.k_lo) << ',' << format_double(p.k_hi) << ','
          << format_double(p.mean) << ',' << p.count << '\n';
    else
      out << format_double(p.k_lo) << ',' << format_double(p.mean) << ',' << p.count << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) {
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    out.push_back(cur);
  }
  return out;
}

}  // namespace

DegreeCurve read_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty curve file: " + path, 1);
  auto header = split_csv(line);
  DegreeCurve curve;
  if (header.size() == 4 && header[0] == "k_lo")
    curve.binned = true;
  else if (header.size() != 3 || header[0] != "k")
    throw ParseError("unrecognized curve header in " + path, 1);
  std::uint64_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto cells = split_csv(line);
    std::size_t want = curve.binned ? 4 : 3;
    if (cells.size() != want) throw ParseError(path + ": bad column count", lineno);
    CurvePoint p;
    try {
      std::size_t c = 0;
      p.k_lo = parse_double(cells[c++]);
      p.k_hi = curve.binned ? parse_double(cells[c++]) : p.k_lo + 1;
      p.mean = parse_double(cells[c++]);
      p.count = static_cast<std::uint64_t>(std::stoull(cells[c]));
    } catch (const std::exception& e) {
      throw ParseError(path + ": " + e.what(), lineno);
    }
    curve.points.push_back(p);
  }
  return curve;
}

std::vector<std::uint64_t> log_bin_edges(std::uint64_t k_max, double ratio) {
  if (ratio <= 1.0) throw std::invalid_argument("log bin ratio must exceed 1");
  std::vector<std::uint64_t> edges{1};
  while (edges.back() <= k_max) {
    std::uint64_t last = edges.back();
    auto next = static_cast<std::uint64_t>(std::ceil(static_cast<double>(last) * ratio));
    edges.push_back(next > last ? next : last + 1);
  }
  return edges;  // final edge is exclusive and exceeds k_max
}

}  // namespace osn
