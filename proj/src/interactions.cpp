#include "interactions.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "edgelist.hpp"
#include "metrics.hpp"

namespace osn {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool header_line(const std::string& line) {
  return std::none_of(line.begin(), line.end(),
                      [](unsigned char c) { return std::isdigit(c); });
}

std::uint64_t parse_count(const std::string& tok, std::uint64_t lineno, const char* what) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " is not a nonnegative integer: '" + tok + "'", lineno);
  }
}

}  // namespace

WallLedger load_wall(const std::string& path,
                     const std::unordered_map<std::string, NodeId>& id_index) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open wall ledger: " + path);
  WallLedger ledger;
  std::string line;
  std::uint64_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' || line[0] == '%') continue;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (first) {
      first = false;
      if (header_line(line)) continue;
    }
    if (toks.size() != 3) throw ParseError("expected 'poster owner timestamp'", lineno);
    auto p = id_index.find(toks[0]);
    auto o = id_index.find(toks[1]);
    if (p == id_index.end() || o == id_index.end()) {
      ++ledger.unresolved;
      continue;
    }
    std::int64_t ts;
    try {
      ts = std::stoll(toks[2]);
    } catch (const std::exception&) {
      throw ParseError("timestamp is not an integer: '" + toks[2] + "'", lineno);
    }
    if (ts < 0) throw ParseError("timestamp must be nonnegative", lineno);
    ledger.records.push_back({p->second, o->second, ts});
  }
  return ledger;
}

ExchangeLedger load_exchange(const std::string& path,
                             const std::unordered_map<std::string, NodeId>& id_index, NodeId n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open exchange ledger: " + path);
  ExchangeLedger ledger;
  ledger.sent.assign(n, 0);
  ledger.received.assign(n, 0);
  std::string line;
  std::uint64_t lineno = 0;
  bool first = true;
  int columns = 0;  // fixed by the first data line
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' || line[0] == '%') continue;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (first) {
      first = false;
      if (header_line(line)) continue;
    }
    if (columns == 0) {
      if (toks.size() != 2 && toks.size() != 3)
        throw ParseError("expected 'node,sent,received' or 'sender,receiver'", lineno);
      columns = static_cast<int>(toks.size());
    }
    if (static_cast<int>(toks.size()) != columns)
      throw ParseError("inconsistent column count in exchange ledger", lineno);
    if (columns == 3) {
      auto it = id_index.find(toks[0]);
      if (it == id_index.end()) {
        ++ledger.unresolved;
        continue;
      }
      ledger.sent[it->second] += parse_count(toks[1], lineno, "sent count");
      ledger.received[it->second] += parse_count(toks[2], lineno, "received count");
    } else {
      auto s = id_index.find(toks[0]);
      auto r = id_index.find(toks[1]);
      if (s == id_index.end() || r == id_index.end()) {
        ++ledger.unresolved;
        continue;
      }
      ++ledger.sent[s->second];
      ++ledger.received[r->second];
    }
  }
  return ledger;
}

std::vector<std::uint64_t> activity_counts(const WallLedger& w, NodeId n,
                                           const ActivityOptions& opt) {
  std::vector<std::uint64_t> counts(n, 0);
  for (const auto& rec : w.records) {
    if (!opt.include_self && rec.poster == rec.owner) continue;
    NodeId who = opt.poster_side ? rec.poster : rec.owner;
    if (who < n) ++counts[who];
  }
  return counts;
}

DegreeCurve activity_curve(const Graph& g, const WallLedger& w, const BinSpec& bins,
                           const ActivityOptions& opt) {
  auto counts = activity_counts(w, g.node_count(), opt);
  std::vector<double> values(counts.begin(), counts.end());
  return per_degree_curve(g, values, bins);
}

std::optional<double> reciprocation(const ExchangeLedger& e, NodeId i) {
  if (i >= e.sent.size()) throw std::invalid_argument("reciprocation: node out of range");
  if (e.sent[i] == 0) return std::nullopt;
  return static_cast<double>(e.received[i]) / static_cast<double>(e.sent[i]);
}

DegreeCurve reciprocation_curve(const Graph& g, const ExchangeLedger& e, const BinSpec& bins) {
  const NodeId n = g.node_count();
  std::vector<double> values(n, 0.0);
  std::vector<std::uint8_t> defined(n, 0);
  for (NodeId i = 0; i < n; ++i) {
    auto r = reciprocation(e, i);
    if (r) {
      values[i] = *r;
      defined[i] = 1;
    }
  }
  return per_degree_curve(g, values, bins, &defined);
}

}  // namespace osn
