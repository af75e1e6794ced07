#pragma once
// Degree-constrained network evolution: triadic closure damped by a Fermi
// factor above a threshold degree, preferential tie decay, random linkage.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace osn {

struct ModelParams {
  NodeId n = 20000;
  double k_avg_max = 20.0;
  double c = 0.0005;  // tie-adding speed
  double d = 0.0005;  // tie-removing speed
  double r = 0.0001;  // random-linkage speed
  double beta = 8.0;  // constraint sharpness
  double k_T = 200.0;  // threshold degree
  std::uint64_t seed = 1;
  std::uint64_t max_units = 1000000;
  int m = 2;  // seed-graph attachment count
  // Selection weights are frozen per action phase by default. Live mode
  // re-resolves them per trial (Fenwick tree); with beta ~ 8 the Fermi gate
  // is about one degree wide, so frozen weights let nodes blow through the
  // threshold mid-phase — measured break placement is insensitive to this,
  // so the cheaper snapshot stays the default.
  bool live_weights = false;

  void validate() const;  // throws invalid_argument
};

struct UnitRecord {
  std::uint64_t unit = 0;  // 1-based
  std::uint64_t trials1 = 0, added1 = 0;
  std::uint64_t trials2 = 0, removed2 = 0;
  std::uint64_t trials3 = 0, added3 = 0;
  double avg_degree = 0.0;
};

struct EvolutionLog {
  std::vector<UnitRecord> units;
  bool reached_target = false;
  std::string stop_reason;  // "target" | "max_units" | "no-op parameters"
};

// Preferential attachment seed: complete graph on m+1 nodes, then each new
// node attaches to m distinct existing nodes with probability ∝ degree.
Graph generate_ba(NodeId n, int m, std::uint64_t seed);
Graph generate_ba(NodeId n, int m, Rng& rng);

// Fermi factor 1/(e^{beta(k-k_T)}+1), guarded against exp overflow.
double constraint_factor(double k, double beta, double k_T);

// floor(x) plus a Bernoulli draw on the fractional part; preserves E[N]=x.
std::uint64_t stochastic_round(double x, Rng& rng);

struct ActionResult {
  std::uint64_t trials = 0;
  std::uint64_t changed = 0;
};

// Selection weights, exposed for distribution tests.
std::vector<double> action1_weights(const Graph& g, double beta, double k_T);
std::vector<double> action2_weights(const Graph& g);

// One phase each; weights are snapshotted at phase start.
ActionResult action1_close_triads(Graph& g, const ModelParams& p, Rng& rng);
ActionResult action2_decay_ties(Graph& g, const ModelParams& p, Rng& rng);
ActionResult action3_random_link(Graph& g, const ModelParams& p, Rng& rng);

using ProgressFn = std::function<void(std::uint64_t unit, double avg_degree)>;

// Runs units of Action 1 -> 2 -> 3 until <k> reaches k_avg_max or max_units.
std::pair<Graph, EvolutionLog> evolve(const ModelParams& p,
                                      const ProgressFn& progress = nullptr);

void write_evolution_log_csv(const std::string& path, const EvolutionLog& log);

}  // namespace osn
