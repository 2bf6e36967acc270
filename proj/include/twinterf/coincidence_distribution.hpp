#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twinterf/errors.hpp"

namespace twinterf {

/// Probabilities of the physically distinct two-particle detection events:
/// n "bunched" events (both particles at detector j) plus one entry per
/// unordered detector pair {j,k}, j < k. Sums to 1 for any valid state.
class CoincidenceDistribution {
 public:
  CoincidenceDistribution(std::vector<double> bunched, std::vector<double> pairs)
      : dim_(static_cast<int>(bunched.size())),
        bunched_(std::move(bunched)),
        pairs_(std::move(pairs)) {
    const std::size_t expected = static_cast<std::size_t>(dim_) * (dim_ - 1) / 2;
    if (dim_ < 2 || pairs_.size() != expected) {
      throw InvalidInput("CoincidenceDistribution: inconsistent sizes (dim " +
                         std::to_string(dim_) + ", pairs " + std::to_string(pairs_.size()) + ")");
    }
  }

  int dim() const { return dim_; }

  /// P(j,j): both particles at detector j.
  double bunched(int j) const {
    check_index(j);
    return bunched_[static_cast<std::size_t>(j)];
  }

  /// P{j,k}: one particle at each of two distinct detectors (order-free).
  double pair(int j, int k) const {
    check_index(j);
    check_index(k);
    if (j == k) throw InvalidInput("CoincidenceDistribution::pair requires j != k");
    return pairs_[pair_index(j, k, dim_)];
  }

  double total() const {
    return std::accumulate(bunched_.begin(), bunched_.end(), 0.0) +
           std::accumulate(pairs_.begin(), pairs_.end(), 0.0);
  }

  std::span<const double> bunched_all() const { return bunched_; }
  std::span<const double> pairs_all() const { return pairs_; }

  // Packing of the strict upper triangle, row major: {0,1},{0,2},...,{1,2},...
  static std::size_t pair_index(int j, int k, int n) {
    if (j > k) std::swap(j, k);
    return static_cast<std::size_t>(j) * (2 * n - j - 1) / 2 + static_cast<std::size_t>(k - j - 1);
  }

 private:
  void check_index(int j) const {
    if (j < 0 || j >= dim_) {
      throw InvalidInput("detector index " + std::to_string(j) + " out of range [0," +
                         std::to_string(dim_) + ")");
    }
  }

  int dim_;
  std::vector<double> bunched_;
  std::vector<double> pairs_;
};

/// Relabels detectors: detector j of `dist` becomes detector new_index_of[j].
/// `new_index_of` must be a permutation of 0..n-1.
inline CoincidenceDistribution relabel(const CoincidenceDistribution& dist,
                                       std::span<const int> new_index_of) {
  const int n = dist.dim();
  if (static_cast<int>(new_index_of.size()) != n) {
    throw InvalidInput("relabel: permutation length does not match distribution dim");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int j : new_index_of) {
    if (j < 0 || j >= n || seen[static_cast<std::size_t>(j)]) {
      throw InvalidInput("relabel: new_index_of is not a permutation of 0.." +
                         std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(j)] = true;
  }
  std::vector<double> bunched(static_cast<std::size_t>(n));
  std::vector<double> pairs(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 0; j < n; ++j) {
    bunched[static_cast<std::size_t>(new_index_of[j])] = dist.bunched(j);
    for (int k = j + 1; k < n; ++k) {
      pairs[CoincidenceDistribution::pair_index(new_index_of[j], new_index_of[k], n)] =
          dist.pair(j, k);
    }
  }
  return CoincidenceDistribution(std::move(bunched), std::move(pairs));
}

}  // namespace twinterf
