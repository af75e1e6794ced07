// Command-line front end over the shared-library API: ingestion, per-degree
// curves, break detection and evolution runs. Every run leaves a
// manifest.json whose argv re-runs it; outputs are deterministic, so a rerun
// reproduces every CSV byte for byte.

#include <charconv>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "osnkit.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNoConverge = 3;

using GraphPtr = std::unique_ptr<osn_graph, decltype(&osn_graph_free)>;
using CurvePtr = std::unique_ptr<osn_curve, decltype(&osn_curve_free)>;
using MetricsPtr = std::unique_ptr<osn_metrics, decltype(&osn_metrics_free)>;
using AttrsPtr = std::unique_ptr<osn_attrs, decltype(&osn_attrs_free)>;
using WallPtr = std::unique_ptr<osn_wall, decltype(&osn_wall_free)>;
using ExchangePtr = std::unique_ptr<osn_exchange, decltype(&osn_exchange_free)>;
using EvolutionPtr = std::unique_ptr<osn_evolution, decltype(&osn_evolution_free)>;

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "osnkit: " << msg << "\n";
  std::exit(code);
}

void check(int status, int exit_code, const std::string& context) {
  if (status != OSN_OK) die(exit_code, context + ": " + osn_last_error());
}

std::string fmt(double v) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

struct BinChoice {
  int mode = OSN_BINS_EXACT;
  double ratio = 1.25;
  std::string text = "exact";
};

BinChoice parse_bins(const std::string& s) {
  BinChoice b;
  b.text = s;
  if (s == "exact") return b;
  if (s == "log") {
    b.mode = OSN_BINS_LOG;
    return b;
  }
  if (s.rfind("log:", 0) == 0) {
    b.mode = OSN_BINS_LOG;
    try {
      b.ratio = std::stod(s.substr(4));
    } catch (const std::exception&) {
      die(kExitUsage, "--bins: bad ratio in '" + s + "'");
    }
    if (!(b.ratio > 1.0)) die(kExitUsage, "--bins: log ratio must be > 1");
    return b;
  }
  die(kExitUsage, "--bins must be 'exact', 'log' or 'log:RATIO'");
}

std::pair<double, double> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) die(kExitUsage, "--range must be K_LO:K_HI");
  try {
    double lo = std::stod(s.substr(0, colon));
    double hi = std::stod(s.substr(colon + 1));
    if (!(lo < hi)) die(kExitUsage, "--range: K_LO must be below K_HI");
    return {lo, hi};
  } catch (const std::exception&) {
    die(kExitUsage, "--range must be K_LO:K_HI");
  }
}

std::string out_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void prepare_outdir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) die(kExitInput, "cannot create output directory '" + dir + "': " + ec.message());
}

void write_manifest(const std::string& outdir, const std::string& subcommand,
                    const std::vector<std::string>& argv, const ordered_json& inputs,
                    const ordered_json& params, const std::vector<std::string>& outputs,
                    const ordered_json& notes) {
  ordered_json m;
  m["tool"] = "osnkit";
  m["version"] = osn_version();
  m["subcommand"] = subcommand;
  m["argv"] = argv;
  m["inputs"] = inputs;
  m["params"] = params;
  m["outputs"] = outputs;
  if (!notes.empty()) m["notes"] = notes;
  const std::string path = out_path(outdir, "manifest.json");
  std::ofstream out(path);
  if (!out) die(kExitInput, "cannot write " + path);
  out << m.dump(2) << "\n";
}

GraphPtr load_graph(const std::string& path, bool streaming) {
  osn_graph* g = nullptr;
  check(osn_graph_load(path.c_str(), streaming ? 1 : 0, &g), kExitInput,
        "loading '" + path + "'");
  uint64_t loops = 0, dups = 0;
  osn_graph_dropped(g, &loops, &dups);
  if (loops || dups)
    std::cerr << "osnkit: dropped " << loops << " self-loops, " << dups
              << " duplicate edges from '" << path << "'\n";
  return GraphPtr(g, &osn_graph_free);
}

void write_summary_csv(const std::string& path, const osn_summary& s) {
  std::ofstream out(path);
  if (!out) die(kExitInput, "cannot write " + path);
  out << "nodes,edges,avg_degree,avg_clustering,k_max,k_min\n";
  out << s.nodes << ',' << s.edges << ',' << fmt(s.avg_degree) << ','
      << fmt(s.avg_clustering) << ',' << s.k_max << ',' << s.k_min << '\n';
}

void write_curve(const osn_curve* c, const std::string& path) {
  check(osn_curve_write_csv(c, path.c_str()), kExitInput, "writing " + path);
}

// The standard per-degree product set: ccdf, C(k), k_nn(k) raw+normalized,
// k_s(k), w(k), plus summary.csv. Returns the file names written.
std::vector<std::string> write_metric_suite(osn_graph* g, const std::string& outdir,
                                            const BinChoice& bins, int threads) {
  osn_summary s{};
  check(osn_graph_summary(g, threads, &s), kExitInput, "summarizing graph");
  write_summary_csv(out_path(outdir, "summary.csv"), s);

  osn_curve* raw = nullptr;
  check(osn_curve_ccdf(g, &raw), kExitInput, "building ccdf");
  CurvePtr ccdf(raw, &osn_curve_free);
  write_curve(ccdf.get(), out_path(outdir, "ccdf.csv"));

  osn_metrics* mr = nullptr;
  check(osn_metrics_compute(g, threads, &mr), kExitInput, "computing node measures");
  MetricsPtr metrics(mr, &osn_metrics_free);

  const struct {
    int which;
    const char* file;
  } curves[] = {
      {OSN_METRIC_CLUSTERING, "ck.csv"},
      {OSN_METRIC_KNN, "knn.csv"},
      {OSN_METRIC_KSHELL, "ks.csv"},
      {OSN_METRIC_STRENGTH, "wk.csv"},
  };
  for (const auto& spec : curves) {
    osn_curve* c = nullptr;
    check(osn_metrics_curve(g, metrics.get(), spec.which, bins.mode, bins.ratio, &c),
          kExitInput, std::string("building ") + spec.file);
    CurvePtr curve(c, &osn_curve_free);
    write_curve(curve.get(), out_path(outdir, spec.file));
    if (spec.which == OSN_METRIC_KNN) {
      osn_curve* n = nullptr;
      check(osn_curve_normalized(curve.get(), s.k_max, &n), kExitInput,
            "normalizing knn");
      CurvePtr norm(n, &osn_curve_free);
      write_curve(norm.get(), out_path(outdir, "knn_norm.csv"));
    }
  }
  return {"summary.csv", "ccdf.csv", "ck.csv",     "knn.csv",
          "knn_norm.csv", "ks.csv",  "wk.csv"};
}

ordered_json bins_json(const BinChoice& b) {
  ordered_json j;
  j["mode"] = b.mode == OSN_BINS_LOG ? "log" : "exact";
  if (b.mode == OSN_BINS_LOG) j["ratio"] = b.ratio;
  return j;
}

extern "C" void progress_to_stderr(uint64_t unit, double avg, void*) {
  std::fprintf(stderr, "osnkit: unit %" PRIu64 " avg_degree %.4f\n", unit, avg);
}

// ---- subcommands ----------------------------------------------------------

struct CommonOpts {
  std::string edges;
  std::string out = ".";
  std::string bins_text = "exact";
  int threads = 0;  // 0 = all cores
  bool streaming = false;
};

int cmd_metrics(const CommonOpts& o, const std::vector<std::string>& argv) {
  prepare_outdir(o.out);
  const BinChoice bins = parse_bins(o.bins_text);
  GraphPtr g = load_graph(o.edges, o.streaming);
  auto files = write_metric_suite(g.get(), o.out, bins, o.threads);
  ordered_json inputs{{"edges", o.edges}};
  ordered_json params{{"bins", bins_json(bins)},
                      {"threads", o.threads},
                      {"streaming", o.streaming}};
  write_manifest(o.out, "metrics", argv, inputs, params, files, {});
  return 0;
}

int cmd_homophily(const CommonOpts& o, const std::string& attrs_path, bool skip_missing,
                  const std::vector<std::string>& argv) {
  prepare_outdir(o.out);
  const BinChoice bins = parse_bins(o.bins_text);
  GraphPtr g = load_graph(o.edges, o.streaming);
  osn_attrs* ar = nullptr;
  check(osn_attrs_load(attrs_path.c_str(), g.get(), &ar), kExitInput,
        "loading '" + attrs_path + "'");
  AttrsPtr attrs(ar, &osn_attrs_free);
  if (uint64_t unk = osn_attrs_unknown_rows(attrs.get()))
    std::cerr << "osnkit: " << unk << " attribute rows for ids absent from the graph\n";
  osn_curve* c = nullptr;
  check(osn_curve_homophily(g.get(), attrs.get(), bins.mode, bins.ratio,
                            skip_missing ? 1 : 0, o.threads, &c),
        kExitInput, "building hk.csv");
  CurvePtr curve(c, &osn_curve_free);
  write_curve(curve.get(), out_path(o.out, "hk.csv"));
  ordered_json inputs{{"edges", o.edges}, {"attrs", attrs_path}};
  ordered_json params{{"bins", bins_json(bins)},
                      {"skip_missing", skip_missing},
                      {"threads", o.threads}};
  ordered_json notes;
  if (uint64_t unk = osn_attrs_unknown_rows(attrs.get())) notes["unknown_attr_rows"] = unk;
  write_manifest(o.out, "homophily", argv, inputs, params, {"hk.csv"}, notes);
  return 0;
}

int cmd_interactions(const CommonOpts& o, const std::string& wall_path,
                     const std::string& exchange_path, bool poster_side, bool exclude_self,
                     const std::vector<std::string>& argv) {
  if (wall_path.empty() && exchange_path.empty())
    die(kExitUsage, "interactions: need --wall and/or --exchange");
  prepare_outdir(o.out);
  const BinChoice bins = parse_bins(o.bins_text);
  GraphPtr g = load_graph(o.edges, o.streaming);
  std::vector<std::string> files;
  ordered_json inputs{{"edges", o.edges}};
  ordered_json notes;
  if (!wall_path.empty()) {
    osn_wall* wr = nullptr;
    check(osn_wall_load(wall_path.c_str(), g.get(), &wr), kExitInput,
          "loading '" + wall_path + "'");
    WallPtr wall(wr, &osn_wall_free);
    if (uint64_t u = osn_wall_unresolved(wall.get())) {
      std::cerr << "osnkit: " << u << " wall records with unresolvable ids skipped\n";
      notes["unresolved_wall_records"] = u;
    }
    osn_curve* c = nullptr;
    check(osn_curve_activity(g.get(), wall.get(), bins.mode, bins.ratio,
                             poster_side ? 1 : 0, exclude_self ? 0 : 1, &c),
          kExitInput, "building lk.csv");
    CurvePtr curve(c, &osn_curve_free);
    write_curve(curve.get(), out_path(o.out, "lk.csv"));
    files.push_back("lk.csv");
    inputs["wall"] = wall_path;
  }
  if (!exchange_path.empty()) {
    osn_exchange* er = nullptr;
    check(osn_exchange_load(exchange_path.c_str(), g.get(), &er), kExitInput,
          "loading '" + exchange_path + "'");
    ExchangePtr ex(er, &osn_exchange_free);
    if (uint64_t u = osn_exchange_unresolved(ex.get())) {
      std::cerr << "osnkit: " << u << " exchange rows with unresolvable ids skipped\n";
      notes["unresolved_exchange_rows"] = u;
    }
    osn_curve* c = nullptr;
    check(osn_curve_reciprocation(g.get(), ex.get(), bins.mode, bins.ratio, &c), kExitInput,
          "building rk.csv");
    CurvePtr curve(c, &osn_curve_free);
    write_curve(curve.get(), out_path(o.out, "rk.csv"));
    files.push_back("rk.csv");
    inputs["exchange"] = exchange_path;
  }
  ordered_json params{{"bins", bins_json(bins)},
                      {"poster_side", poster_side},
                      {"include_self", !exclude_self}};
  write_manifest(o.out, "interactions", argv, inputs, params, files, notes);
  return 0;
}

std::string file_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// Measures that fall off as rough power laws (tail distribution, activity,
// clustering, neighbor degree, strength) are read on log-log axes, where a
// slope change is a straight-line kink instead of a curvature artifact.
// Homophily, reciprocation and shell index stay linear over log k: they are
// bounded quantities that can sit at or below zero.
int transform_for(const std::string& stem) {
  if (stem == "hk" || stem == "rk" || stem == "ks") return OSN_TRANSFORM_LOGX;
  return OSN_TRANSFORM_LOGLOG;
}

int cmd_detect(const std::vector<std::string>& curve_paths, const std::string& out,
               const std::string& range_text, double threshold,
               const std::string& transform_text, const std::vector<std::string>& argv) {
  prepare_outdir(out);
  auto [k_lo, k_hi] = parse_range(range_text);
  if (threshold < 1.0) die(kExitUsage, "--threshold must be >= 1");
  int forced = -1;
  if (transform_text == "log-x") forced = OSN_TRANSFORM_LOGX;
  else if (transform_text == "log-log") forced = OSN_TRANSFORM_LOGLOG;
  else if (transform_text != "auto") die(kExitUsage, "--transform must be auto, log-x or log-log");

  const std::string breaks_path = out_path(out, "breaks.csv");
  std::ofstream breaks(breaks_path);
  if (!breaks) die(kExitInput, "cannot write " + breaks_path);
  breaks << "curve_name,k_T,improvement_ratio,left_slope,right_slope,significant\n";

  std::vector<osn_break_report> reports(curve_paths.size());
  ordered_json notes;
  for (size_t i = 0; i < curve_paths.size(); ++i) {
    const std::string& path = curve_paths[i];
    osn_curve* cr = nullptr;
    check(osn_curve_read_csv(path.c_str(), &cr), kExitInput, "reading '" + path + "'");
    CurvePtr curve(cr, &osn_curve_free);
    const std::string name = file_stem(path);
    const int transform = forced >= 0 ? forced : transform_for(name);
    check(osn_detect_break(curve.get(), transform, k_lo, k_hi, threshold, &reports[i]),
          kExitInput, "detecting break in '" + path + "'");
    const auto& r = reports[i];
    breaks << name << ',' << fmt(r.k_T) << ',' << fmt(r.improvement_ratio) << ','
           << fmt(r.left_slope) << ',' << fmt(r.right_slope) << ',' << r.significant << '\n';
    std::cout << name << ": k_T=" << fmt(r.k_T) << " ratio=" << fmt(r.improvement_ratio)
              << (r.significant ? " significant" : " not significant")
              << (transform == OSN_TRANSFORM_LOGLOG ? " (log-log)" : " (log-x)") << "\n";
    if (r.points_dropped)
      std::cerr << "osnkit: " << name << ": " << r.points_dropped
                << " nonpositive points dropped before the log transform\n";
    notes[name] = {{"transform", transform == OSN_TRANSFORM_LOGLOG ? "log-log" : "log-x"},
                   {"points_used", r.points_used},
                   {"points_dropped", r.points_dropped}};
  }

  double median = 0, lo = 0, hi = 0;
  size_t nsig = 0;
  check(osn_break_consensus(reports.data(), reports.size(), &median, &lo, &hi, &nsig),
        kExitInput, "computing consensus");
  if (nsig > 0) {
    breaks << "consensus," << fmt(median) << ",,,," << 1 << '\n';
    std::cout << "consensus: k_T=" << fmt(median) << " over " << nsig
              << " significant curve(s), range [" << fmt(lo) << "," << fmt(hi) << "]\n";
    notes["consensus"] = {{"median", median}, {"min", lo}, {"max", hi}, {"curves", nsig}};
  } else {
    breaks << "consensus,,,,,0\n";
    std::cout << "consensus: none (no significant break)\n";
    notes["consensus"] = nullptr;
  }
  breaks.close();
  if (!breaks) die(kExitInput, "write failed: " + breaks_path);

  ordered_json inputs{{"curves", curve_paths}};
  ordered_json params{{"range", {k_lo, k_hi}},
                      {"threshold", threshold},
                      {"transform", transform_text}};
  write_manifest(out, "detect", argv, inputs, params, {"breaks.csv"}, notes);
  return 0;
}

ordered_json params_json(const osn_model_params& p) {
  ordered_json j;
  j["n"] = p.n;
  j["k_avg_max"] = p.k_avg_max;
  j["c"] = p.c;
  j["d"] = p.d;
  j["r"] = p.r;
  j["beta"] = p.beta;
  j["k_T"] = p.k_T;
  j["seed"] = p.seed;
  j["max_units"] = p.max_units;
  j["m"] = p.m;
  j["live_weights"] = p.live_weights != 0;
  return j;
}

void parse_params_list(const std::string& text, osn_model_params& p) {
  std::vector<double> vals;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    try {
      vals.push_back(std::stod(tok));
    } catch (const std::exception&) {
      die(kExitUsage, "--params: bad number '" + tok + "'");
    }
  }
  if (vals.size() != 7) die(kExitUsage, "--params needs n,kavg,c,d,r,beta,kT");
  if (vals[0] < 3 || vals[0] > 4294967295.0 || vals[0] != std::floor(vals[0]))
    die(kExitUsage, "--params: n must be an integer >= 3");
  p.n = static_cast<uint32_t>(vals[0]);
  p.k_avg_max = vals[1];
  p.c = vals[2];
  p.d = vals[3];
  p.r = vals[4];
  p.beta = vals[5];
  p.k_T = vals[6];
}

int cmd_simulate(const osn_model_params& p, const CommonOpts& o, bool quiet,
                 const std::vector<std::string>& argv) {
  prepare_outdir(o.out);
  const BinChoice bins = parse_bins(o.bins_text);
  osn_graph* gr = nullptr;
  osn_evolution* er = nullptr;
  int rc = osn_evolve(&p, quiet ? nullptr : &progress_to_stderr, nullptr, &gr, &er);
  if (rc == OSN_EINVAL) die(kExitUsage, std::string("simulate: ") + osn_last_error());
  check(rc, kExitInput, "simulate");
  GraphPtr g(gr, &osn_graph_free);
  EvolutionPtr log(er, &osn_evolution_free);

  check(osn_graph_write_edges(g.get(), out_path(o.out, "edges.tsv").c_str()), kExitInput,
        "writing edges.tsv");
  check(osn_evolution_write_csv(log.get(), out_path(o.out, "evolution.csv").c_str()),
        kExitInput, "writing evolution.csv");
  auto files = write_metric_suite(g.get(), o.out, bins, o.threads);
  files.insert(files.begin(), {"edges.tsv", "evolution.csv"});

  const bool reached = osn_evolution_reached_target(log.get()) != 0;
  ordered_json notes{{"stop_reason", osn_evolution_stop_reason(log.get())},
                     {"units", osn_evolution_units(log.get())},
                     {"reached_target", reached}};
  write_manifest(o.out, "simulate", argv, {}, params_json(p), files, notes);
  std::cout << "simulate: " << osn_evolution_stop_reason(log.get()) << " after "
            << osn_evolution_units(log.get()) << " unit(s), avg_degree="
            << fmt(2.0 * osn_graph_edges(g.get()) / osn_graph_nodes(g.get())) << "\n";
  if (!reached) {
    std::cerr << "osnkit: target average degree not reached before max_units\n";
    return kExitNoConverge;
  }
  return 0;
}

int cmd_ba(uint32_t n, int m, uint64_t seed, const std::string& out,
           const std::vector<std::string>& argv) {
  prepare_outdir(out);
  osn_graph* gr = nullptr;
  int rc = osn_ba_generate(n, m, seed, &gr);
  if (rc == OSN_EINVAL) die(kExitUsage, std::string("ba: ") + osn_last_error());
  check(rc, kExitInput, "ba");
  GraphPtr g(gr, &osn_graph_free);
  check(osn_graph_write_edges(g.get(), out_path(out, "edges.tsv").c_str()), kExitInput,
        "writing edges.tsv");
  ordered_json params{{"n", n}, {"m", m}, {"seed", seed}};
  write_manifest(out, "ba", argv, {}, params, {"edges.tsv"}, {});
  std::cout << "ba: " << osn_graph_nodes(g.get()) << " nodes, " << osn_graph_edges(g.get())
            << " edges\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> argv_copy(argv, argv + argc);

  CLI::App app{"Social-graph degree curves, turning-point detection and evolution model"};
  app.require_subcommand(1);

  CommonOpts mo;
  auto* metrics = app.add_subcommand("metrics", "Degree curves and summary for an edge list");
  metrics->add_option("--edges", mo.edges, "edge list path")->required();
  metrics->add_option("--bins", mo.bins_text, "exact | log | log:RATIO");
  metrics->add_option("--out", mo.out, "output directory");
  metrics->add_option("--threads", mo.threads, "worker threads (0 = all cores)");
  metrics->add_flag("--streaming", mo.streaming, "two-pass ingest, no edge buffering");

  CommonOpts ho;
  std::string attrs_path;
  bool skip_missing = false;
  auto* homophily = app.add_subcommand("homophily", "Profile-distance curve H(k)");
  homophily->add_option("--edges", ho.edges, "edge list path")->required();
  homophily->add_option("--attrs", attrs_path, "attribute CSV path")->required();
  homophily->add_flag("--skip-missing", skip_missing,
                      "compare only attributes present on both sides");
  homophily->add_option("--bins", ho.bins_text, "exact | log | log:RATIO");
  homophily->add_option("--out", ho.out, "output directory");
  homophily->add_option("--threads", ho.threads, "worker threads (0 = all cores)");
  homophily->add_flag("--streaming", ho.streaming, "two-pass ingest, no edge buffering");

  CommonOpts io;
  std::string wall_path, exchange_path;
  bool poster_side = false, exclude_self = false;
  auto* inter = app.add_subcommand("interactions", "Wall activity L(k) and reciprocation r(k)");
  inter->add_option("--edges", io.edges, "edge list path")->required();
  inter->add_option("--wall", wall_path, "wall trace: poster owner timestamp");
  inter->add_option("--exchange", exchange_path,
                    "exchange ledger: node,sent,received or sender,receiver events");
  inter->add_flag("--poster-side", poster_side, "count posts written, not received");
  inter->add_flag("--exclude-self", exclude_self, "ignore poster == owner records");
  inter->add_option("--bins", io.bins_text, "exact | log | log:RATIO");
  inter->add_option("--out", io.out, "output directory");
  inter->add_flag("--streaming", io.streaming, "two-pass ingest, no edge buffering");

  std::vector<std::string> curve_paths;
  std::string det_out = ".", range_text = "50:1000", transform_text = "auto";
  double threshold = 1.2;
  auto* detect = app.add_subcommand("detect", "Two-segment break detection on curve CSVs");
  detect->add_option("curves", curve_paths, "curve CSV files")->required();
  detect->add_option("--range", range_text, "breakpoint search range K_LO:K_HI");
  detect->add_option("--threshold", threshold, "SSE improvement ratio for significance");
  detect->add_option("--transform", transform_text,
                     "auto | log-x | log-log (auto: log-x for hk/rk/ks stems, else log-log)");
  detect->add_option("--out", det_out, "output directory");

  osn_model_params mp;
  osn_model_params_init(&mp);
  CommonOpts so;
  std::string params_text, weights_mode = "snapshot";
  bool quiet = false;
  auto* simulate = app.add_subcommand("simulate", "Evolve the constrained model from a fresh seed graph");
  simulate->add_option("--params", params_text, "n,kavg,c,d,r,beta,kT");
  simulate->add_option("--seed", mp.seed, "RNG seed");
  simulate->add_option("--max-units", mp.max_units, "evolution unit cap");
  simulate->add_option("-m,--attach", mp.m, "seed-graph attachment count");
  simulate->add_option("--weights", weights_mode,
                       "live | snapshot (selection-weight refresh granularity)");
  simulate->add_option("--bins", so.bins_text, "exact | log | log:RATIO");
  simulate->add_option("--out", so.out, "output directory");
  simulate->add_option("--threads", so.threads, "worker threads for the metric suite");
  simulate->add_flag("--quiet", quiet, "suppress progress lines");

  uint32_t ba_n = 20000;
  int ba_m = 2;
  uint64_t ba_seed = 1;
  std::string ba_out = ".";
  auto* ba = app.add_subcommand("ba", "Generate a preferential-attachment graph");
  ba->add_option("--nodes", ba_n, "node count");
  ba->add_option("-m,--attach", ba_m, "edges per new node");
  ba->add_option("--seed", ba_seed, "RNG seed");
  ba->add_option("--out", ba_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (*metrics) return cmd_metrics(mo, argv_copy);
  if (*homophily) return cmd_homophily(ho, attrs_path, skip_missing, argv_copy);
  if (*inter)
    return cmd_interactions(io, wall_path, exchange_path, poster_side, exclude_self, argv_copy);
  if (*detect) return cmd_detect(curve_paths, det_out, range_text, threshold, transform_text,
                                 argv_copy);
  if (*simulate) {
    if (!params_text.empty()) parse_params_list(params_text, mp);
    if (weights_mode == "snapshot") mp.live_weights = 0;
    else if (weights_mode == "live") mp.live_weights = 1;
    else die(kExitUsage, "--weights must be live or snapshot");
    return cmd_simulate(mp, so, quiet, argv_copy);
  }
  if (*ba) return cmd_ba(ba_n, ba_m, ba_seed, ba_out, argv_copy);
  return kExitUsage;
}
