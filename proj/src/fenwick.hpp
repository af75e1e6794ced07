#pragma once
// Updatable weighted sampler: Fenwick tree over nonnegative weights with
// O(log n) draws and point updates. Used by the live-weight evolution mode,
// where selection probabilities must track every edge change.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rng.hpp"

namespace osn {

class FenwickSampler {
 public:
  explicit FenwickSampler(const std::vector<double>& weights)
      : n_(weights.size()), tree_(weights.size() + 1, 0.0), leaf_(weights) {
    for (double w : weights)
      if (w < 0) throw std::invalid_argument("fenwick: negative weight");
    for (std::size_t i = 1; i <= n_; ++i) {
      tree_[i] += leaf_[i - 1];
      std::size_t parent = i + (i & (~i + 1));
      if (parent <= n_) tree_[parent] += tree_[i];
    }
    log_ = 0;
    while ((std::size_t{1} << (log_ + 1)) <= n_) ++log_;
  }

  void set(std::size_t i, double w) {
    if (w < 0) throw std::invalid_argument("fenwick: negative weight");
    double delta = w - leaf_[i];
    leaf_[i] = w;
    for (std::size_t j = i + 1; j <= n_; j += j & (~j + 1)) tree_[j] += delta;
  }

  double weight(std::size_t i) const { return leaf_[i]; }

  double total() const {
    double t = 0;
    for (std::size_t j = n_; j > 0; j -= j & (~j + 1)) t += tree_[j];
    return t;
  }

  // Inverse-CDF draw by bit descent; zero-weight entries are never returned.
  std::size_t sample(Rng& rng) const {
    const double t = total();
    if (!(t > 0)) throw std::invalid_argument("fenwick: no positive weight");
    double u = rng.real() * t;
    std::size_t pos = 0;
    for (std::size_t step = std::size_t{1} << log_; step > 0; step >>= 1) {
      std::size_t next = pos + step;
      if (next <= n_ && tree_[next] < u) {
        u -= tree_[next];
        pos = next;
      }
    }
    // pos is now the count of leaves strictly before the sampled one.
    std::size_t idx = pos < n_ ? pos : n_ - 1;
    // Accumulated rounding can land on a zero leaf; walk to a positive one.
    while (idx > 0 && leaf_[idx] <= 0) --idx;
    while (idx < n_ - 1 && leaf_[idx] <= 0) ++idx;
    return idx;
  }

  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<double> tree_;  // 1-based
  std::vector<double> leaf_;
  unsigned log_ = 0;
};

}  // namespace osn
