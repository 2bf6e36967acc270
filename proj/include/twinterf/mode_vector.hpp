#pragma once

#include <Eigen/Core>
#include <complex>
#include <initializer_list>
#include <string>
#include <utility>

#include "twinterf/errors.hpp"

namespace twinterf {

using Complex = std::complex<double>;

/// Largest allowed deviation of an input column's squared norm from 1.
inline constexpr double kNormTolerance = 1e-9;

/// A single-particle state over n output channels: one complex probability
/// amplitude per detector. Immutable once constructed; construction rejects
/// fewer than two channels and vectors that are not normalized.
class ModeVector {
 public:
  explicit ModeVector(Eigen::VectorXcd amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) {
      throw InvalidInput("ModeVector requires at least 2 channels, got " +
                         std::to_string(amps_.size()));
    }
    const double deviation = std::abs(amps_.squaredNorm() - 1.0);
    if (deviation > kNormTolerance) {
      throw InvalidInput("ModeVector amplitudes are not normalized: |sum(|a|^2) - 1| = " +
                         std::to_string(deviation));
    }
  }

  ModeVector(std::initializer_list<Complex> amplitudes)
      : ModeVector(Eigen::VectorXcd(
            Eigen::Map<const Eigen::VectorXcd>(amplitudes.begin(),
                                               static_cast<Eigen::Index>(amplitudes.size())))) {}

  int dim() const { return static_cast<int>(amps_.size()); }
  Complex operator[](Eigen::Index j) const { return amps_[j]; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

 private:
  Eigen::VectorXcd amps_;
};

}  // namespace twinterf
