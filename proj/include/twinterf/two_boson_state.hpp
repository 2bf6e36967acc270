#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twinterf/coincidence_distribution.hpp"
#include "twinterf/errors.hpp"
#include "twinterf/mode_vector.hpp"

namespace twinterf {

/// Symmetrized two-boson amplitude over n detector channels. Entry (j,k) is
/// the amplitude for particle label 1 at detector j and label 2 at detector k;
/// the matrix is exchange-symmetric by construction and has unit total weight.
class TwoBosonState {
 public:
  int dim() const { return static_cast<int>(a_.rows()); }

  /// A[j][k], bounds checked.
  Complex ordered_amplitude(int j, int k) const {
    if (j < 0 || k < 0 || j >= dim() || k >= dim()) {
      throw std::out_of_range("ordered_amplitude: index (" + std::to_string(j) + "," +
                              std::to_string(k) + ") out of range for dim " +
                              std::to_string(dim()));
    }
    return a_(j, k);
  }

  const Eigen::MatrixXcd& pair_amplitudes() const { return a_; }

 private:
  explicit TwoBosonState(Eigen::MatrixXcd a) : a_(std::move(a)) {}
  friend TwoBosonState symmetrize(const ModeVector&, const ModeVector&);

  Eigen::MatrixXcd a_;
};

/// Builds the two-boson state that results from sending one particle through
/// each of the two given single-particle channel states:
///
///   A[j][k] = (u_j v_k + u_k v_j) / sqrt(2 (|u|^2 |v|^2 + |<u|v>|^2))
///
/// The scale factor keeps the state exactly normalized even when the two
/// columns overlap; it reduces to the familiar 1/sqrt(2) symmetrization weight
/// for orthonormal columns. The upper triangle is computed once and mirrored,
/// so exchange symmetry holds bit-for-bit.
inline TwoBosonState symmetrize(const ModeVector& col_a, const ModeVector& col_b) {
  if (col_a.dim() != col_b.dim()) {
    throw InvalidInput("symmetrize: column dimensions differ (" + std::to_string(col_a.dim()) +
                       " vs " + std::to_string(col_b.dim()) + ")");
  }
  const Eigen::VectorXcd& u = col_a.amplitudes();
  const Eigen::VectorXcd& v = col_b.amplitudes();
  const Complex overlap = u.dot(v);  // <u|v>, conjugate-linear in u
  const double gram = u.squaredNorm() * v.squaredNorm() + std::norm(overlap);
  const double scale = 1.0 / std::sqrt(2.0 * gram);

  const int n = col_a.dim();
  Eigen::MatrixXcd a(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      a(j, k) = (u[j] * v[k] + u[k] * v[j]) * scale;
      a(k, j) = a(j, k);
    }
  }
  return TwoBosonState(std::move(a));
}

/// Collapses a two-boson state onto the physical detection events:
/// P(j,j) = |A[j][j]|^2 and P{j,k} = |A[j][k]|^2 + |A[k][j]|^2 = 2|A[j][k]|^2,
/// since both particle labelings feed the same coincidence count.
inline CoincidenceDistribution coincidences(const TwoBosonState& state) {
  const int n = state.dim();
  const Eigen::MatrixXcd& a = state.pair_amplitudes();
  std::vector<double> bunched(static_cast<std::size_t>(n));
  std::vector<double> pairs(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 0; j < n; ++j) {
    bunched[static_cast<std::size_t>(j)] = std::norm(a(j, j));
    for (int k = j + 1; k < n; ++k) {
      pairs[CoincidenceDistribution::pair_index(j, k, n)] = 2.0 * std::norm(a(j, k));
    }
  }
  return CoincidenceDistribution(std::move(bunched), std::move(pairs));
}

}  // namespace twinterf
