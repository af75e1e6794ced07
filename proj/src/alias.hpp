#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rng.hpp"

namespace osn {

// Vose alias table for O(1) draws from a fixed discrete distribution.
// Zero-weight entries are excluded up front so they can never be drawn;
// construction walks indices in order, keeping sampling deterministic for a
// given weight vector and RNG stream.
class AliasTable {
 public:
  explicit AliasTable(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw std::invalid_argument("alias: negative weight");
      total += w;
    }
    if (weights.empty() || total <= 0.0) throw std::invalid_argument("alias: no positive weight");
    for (std::uint32_t i = 0; i < weights.size(); ++i)
      if (weights[i] > 0.0) index_.push_back(i);

    const std::size_t n = index_.size();
    prob_.assign(n, 1.0);
    alias_.assign(n, 0);
    std::vector<double> scaled(n);
    std::vector<std::uint32_t> small, large;
    for (std::uint32_t i = 0; i < n; ++i) {
      scaled[i] = weights[index_[i]] * static_cast<double>(n) / total;
      (scaled[i] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
      std::uint32_t s = small.back();
      small.pop_back();
      std::uint32_t l = large.back();
      large.pop_back();
      prob_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] = (scaled[l] + scaled[s]) - 1.0;
      (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    // Leftovers on either stack sit at scaled ~ 1 up to rounding; prob_ stays 1.
  }

  std::uint32_t sample(Rng& rng) const {
    std::uint32_t col = static_cast<std::uint32_t>(rng.below(prob_.size()));
    std::uint32_t row = rng.real() < prob_[col] ? col : alias_[col];
    return index_[row];
  }

  std::size_t size() const { return prob_.size(); }

 private:
  std::vector<std::uint32_t> index_;  // positions with positive weight
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace osn
