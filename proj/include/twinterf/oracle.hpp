#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "twinterf/errors.hpp"

// Brute-force cross-check for the coincidence engine. Deliberately
// self-contained: plain std::complex arithmetic, no shared state machinery,
// no n x n amplitude matrix. Each event probability is evaluated from its
// closed form so that agreement with the engine is meaningful evidence.

namespace twinterf {

/// Same event layout as CoincidenceDistribution, but kept as a separate type
/// produced by an independent code path.
struct OracleResult {
  int dim = 0;
  std::vector<double> bunched;  // P(j,j), n entries
  std::vector<double> pairs;    // P{j,k}, j<k, row-major upper triangle

  double pair(int j, int k) const {
    if (j > k) {
      const int t = j;
      j = k;
      k = t;
    }
    return pairs[static_cast<std::size_t>(j) * (2 * dim - j - 1) / 2 +
                 static_cast<std::size_t>(k - j - 1)];
  }
};

/// Closed-form coincidence probabilities for one particle in channel state u
/// and one in v:
///
///   P(j,j) = 2 |u_j v_j|^2 / N,   P{j,k} = |u_j v_k + u_k v_j|^2 / N,
///   N      = 1 + |<u|v>|^2.
///
/// For any normalized columns the probabilities sum to exactly 1 (the raw
/// event weights sum to N).
inline OracleResult oracle_coincidences(const std::vector<std::complex<double>>& col_a,
                                        const std::vector<std::complex<double>>& col_b) {
  if (col_a.size() != col_b.size()) {
    throw InvalidInput("oracle_coincidences: column dimensions differ (" +
                       std::to_string(col_a.size()) + " vs " + std::to_string(col_b.size()) + ")");
  }
  const std::size_t n = col_a.size();
  if (n < 2) throw InvalidInput("oracle_coincidences: need at least 2 channels");

  double norm_a = 0.0, norm_b = 0.0;
  std::complex<double> overlap{0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    norm_a += std::norm(col_a[j]);
    norm_b += std::norm(col_b[j]);
    overlap += std::conj(col_a[j]) * col_b[j];
  }
  if (std::abs(norm_a - 1.0) > 1e-9 || std::abs(norm_b - 1.0) > 1e-9) {
    throw InvalidInput("oracle_coincidences: input columns must be normalized");
  }

  const double weight = 1.0 + std::norm(overlap);
  OracleResult result;
  result.dim = static_cast<int>(n);
  result.bunched.resize(n);
  result.pairs.reserve(n * (n - 1) / 2);
  for (std::size_t j = 0; j < n; ++j) {
    result.bunched[j] = 2.0 * std::norm(col_a[j] * col_b[j]) / weight;
    for (std::size_t k = j + 1; k < n; ++k) {
      result.pairs.push_back(std::norm(col_a[j] * col_b[k] + col_a[k] * col_b[j]) / weight);
    }
  }
  return result;
}

}  // namespace twinterf
