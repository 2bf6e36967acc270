#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twinterf/errors.hpp"
#include "twinterf/mode_vector.hpp"
#include "twinterf/two_boson_state.hpp"

namespace twinterf {

/// Source/detection geometry: two point sources at x = +-x0 whose particles
/// of wavelength `wavelength` travel a distance `distance` to a detection
/// plane scanned along x.
struct HbtGeometry {
  double x0 = 0.0;
  double wavelength = 0.0;
  double distance = 0.0;

  void validate() const {
    if (!(x0 > 0.0) || !(wavelength > 0.0) || !(distance > 0.0)) {
      throw InvalidInput("HbtGeometry: x0, wavelength and distance must all be positive");
    }
  }

  /// Small-angle figure of merit 2*x0/L; the linear phase profile is a
  /// leading-order expansion and degrades as this grows.
  double paraxial_ratio() const { return 2.0 * x0 / distance; }
  bool paraxial_ok() const { return paraxial_ratio() <= 0.1; }

  /// Separation of consecutive dark fringes: wavelength * L / (2 x0).
  double fringe_width() const { return wavelength * distance / (2.0 * x0); }
};

/// Detection-plane wave packet, identical for both sources. |amplitude(x)|^2
/// integrates to 1; sigma is the standard deviation of that intensity.
class Envelope {
 public:
  static Envelope gaussian(double sigma, double center = 0.0) {
    if (!(sigma > 0.0)) throw InvalidInput("Envelope: sigma must be positive");
    return Envelope(sigma, center);
  }

  double sigma() const { return sigma_; }
  double center() const { return center_; }

  double intensity(double x) const {
    const double z = (x - center_) / sigma_;
    return std::exp(-0.5 * z * z) / (sigma_ * std::sqrt(2.0 * std::numbers::pi));
  }

  double amplitude(double x) const { return std::sqrt(intensity(x)); }

 private:
  Envelope(double sigma, double center) : sigma_(sigma), center_(center) {}
  double sigma_;
  double center_;
};

/// Uniformly spaced detector positions, endpoints included.
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;

  double step() const { return (max - min) / (points - 1); }
};

struct PhasePair {
  double theta = 0.0;
  double phi = 0.0;
};

/// Position-dependent phases acquired in reaching detector position x from
/// the two sources: theta_x = 2 pi x0 x / (wavelength L) and phi_x = -theta_x.
inline PhasePair phase_profiles(const HbtGeometry& geom, double x) {
  geom.validate();
  const double theta = 2.0 * std::numbers::pi * geom.x0 * x / (geom.wavelength * geom.distance);
  return PhasePair{theta, -theta};
}

/// Overlap s = integral |psi(x)|^2 e^{i(phi_x - theta_x)} dx of the two
/// post-split channel states, evaluated by adaptive quadrature. Nonzero in
/// general; it feeds the exact normalization of the coincidence density.
inline Complex column_overlap(const HbtGeometry& geom, const Envelope& env) {
  geom.validate();
  const double kappa =
      4.0 * std::numbers::pi * geom.x0 / (geom.wavelength * geom.distance);
  const double a = env.center() - 12.0 * env.sigma();
  const double b = env.center() + 12.0 * env.sigma();
  using quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double re =
      quad::integrate([&](double x) { return env.intensity(x) * std::cos(kappa * x); }, a, b, 15,
                      1e-13);
  const double im =
      quad::integrate([&](double x) { return -env.intensity(x) * std::sin(kappa * x); }, a, b, 15,
                      1e-13);
  return Complex(re, im);
}

namespace detail {

inline double density_with_overlap(const HbtGeometry& geom, const Envelope& env, double x1,
                                   double x2, double one_plus_s2) {
  const double arg = 4.0 * std::numbers::pi * geom.x0 * (x1 - x2) /
                     (geom.wavelength * geom.distance);
  return env.intensity(x1) * env.intensity(x2) * (1.0 + std::cos(arg)) / one_plus_s2;
}

inline void validate_grid(const HbtGeometry& geom, const Envelope& env, const GridSpec& grid) {
  geom.validate();
  if (grid.points < 2) throw InvalidInput("grid: need at least 2 points");
  if (!(grid.min < grid.max)) throw InvalidInput("grid: min must be below max");
  const double span = grid.max - grid.min;
  if (span < 5.0 * env.sigma() * (1.0 - 1e-12)) {
    throw InvalidInput("grid span " + std::to_string(span) +
                       " is below 5 sigma = " + std::to_string(5.0 * env.sigma()) +
                       "; widen the window");
  }
  const double per_fringe = geom.fringe_width() / grid.step();
  if (per_fringe < 16.0 * (1.0 - 1e-12)) {
    throw InvalidInput("grid under-resolved: " + std::to_string(per_fringe) +
                       " points per fringe width " + std::to_string(geom.fringe_width()) +
                       ", need >= 16");
  }
}

}  // namespace detail

/// Coincidence probability density
///   P(x1,x2) = |psi(x1) psi(x2)|^2 [1 + cos(4 pi x0 (x1-x2) / (wavelength L))] / (1+|s|^2),
/// where s is the channel-column overlap. The 1/(1+|s|^2) factor makes the
/// density integrate to exactly 1 over the plane; s -> 0 recovers the bare
/// fringe formula.
inline double coincidence_density(const HbtGeometry& geom, const Envelope& env, double x1,
                                  double x2) {
  const double one_plus_s2 = 1.0 + std::norm(column_overlap(geom, env));
  return detail::density_with_overlap(geom, env, x1, x2, one_plus_s2);
}

/// Sampled coincidence density: either the full symmetric P(x_i, x_j) matrix
/// or a one-dimensional cut at fixed x1.
class ContinuousPattern {
 public:
  bool is_slice() const { return slice_x1_.has_value(); }
  double slice_x1() const { return slice_x1_.value(); }

  int points() const { return static_cast<int>(grid_.size()); }
  const std::vector<double>& grid() const { return grid_; }
  double step() const { return step_; }

  /// |s| of the columns this pattern was built from.
  double overlap_magnitude() const { return overlap_magnitude_; }

  double value(int i, int j) const {
    if (is_slice()) throw InvalidInput("ContinuousPattern: 2-D access on a slice");
    return values_[static_cast<std::size_t>(i) * grid_.size() + static_cast<std::size_t>(j)];
  }

  double slice_value(int i) const {
    if (!is_slice()) throw InvalidInput("ContinuousPattern: slice access on a full pattern");
    return values_[static_cast<std::size_t>(i)];
  }

  const std::vector<double>& values() const { return values_; }

  /// Riemann double integral over the grid; defined for full patterns.
  double quadrature_total() const {
    if (is_slice()) throw InvalidInput("quadrature_total: defined for full 2-D patterns only");
    double sum = 0.0;
    for (double v : values_) sum += v;
    return sum * step_ * step_;
  }

  /// A row of a full pattern repackaged as the slice at x1 = grid[i].
  ContinuousPattern row_as_slice(int i) const {
    if (is_slice()) throw InvalidInput("row_as_slice: pattern is already a slice");
    if (i < 0 || i >= points()) throw InvalidInput("row_as_slice: row index out of range");
    std::vector<double> row(grid_.size());
    for (int j = 0; j < points(); ++j) row[static_cast<std::size_t>(j)] = value(i, j);
    return ContinuousPattern(grid_, std::move(row), grid_[static_cast<std::size_t>(i)],
                             overlap_magnitude_);
  }

  ContinuousPattern(std::vector<double> grid, std::vector<double> values,
                    std::optional<double> slice_x1, double overlap_magnitude)
      : grid_(std::move(grid)),
        values_(std::move(values)),
        slice_x1_(slice_x1),
        overlap_magnitude_(overlap_magnitude) {
    const std::size_t n = grid_.size();
    const std::size_t expected = slice_x1_.has_value() ? n : n * n;
    if (n < 2 || values_.size() != expected) {
      throw InvalidInput("ContinuousPattern: inconsistent grid/value sizes");
    }
    step_ = (grid_.back() - grid_.front()) / static_cast<double>(n - 1);
  }

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
  std::optional<double> slice_x1_;
  double overlap_magnitude_ = 0.0;
  double step_ = 0.0;
};

/// Samples the closed-form density on the grid. With `slice_x1` set, returns
/// the 1-D cut at that fixed first position; otherwise the full symmetric
/// matrix (mirrored, so exchange symmetry is exact).
inline ContinuousPattern scan(const HbtGeometry& geom, const Envelope& env, const GridSpec& grid,
                              std::optional<double> slice_x1 = std::nullopt) {
  detail::validate_grid(geom, env, grid);
  const double one_plus_s2 = 1.0 + std::norm(column_overlap(geom, env));
  const double overlap_mag = std::sqrt(one_plus_s2 - 1.0);

  std::vector<double> xs(static_cast<std::size_t>(grid.points));
  for (int i = 0; i < grid.points; ++i) {
    xs[static_cast<std::size_t>(i)] = grid.min + grid.step() * static_cast<double>(i);
  }

  if (slice_x1.has_value()) {
    std::vector<double> row(xs.size());
    for (int j = 0; j < grid.points; ++j) {
      row[static_cast<std::size_t>(j)] =
          detail::density_with_overlap(geom, env, *slice_x1, xs[static_cast<std::size_t>(j)],
                                       one_plus_s2);
    }
    return ContinuousPattern(std::move(xs), std::move(row), slice_x1, overlap_mag);
  }

  const std::size_t n = xs.size();
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double d = detail::density_with_overlap(geom, env, xs[i], xs[j], one_plus_s2);
      values[i * n + j] = d;
      values[j * n + i] = d;
    }
  }
  return ContinuousPattern(std::move(xs), std::move(values), std::nullopt, overlap_mag);
}

struct FringeMinimum {
  double position = 0.0;
  double value = 0.0;
};

/// Dark-fringe candidates of a 1-D slice: local minima below 1e-3 of the
/// slice peak, each refined by a parabola through the three surrounding
/// samples. Positions come back sorted.
inline std::vector<FringeMinimum> fringe_minima(const ContinuousPattern& slice) {
  if (!slice.is_slice()) throw InvalidInput("fringe_minima: pattern must be a 1-D slice");
  const int n = slice.points();
  double peak = 0.0;
  for (int i = 0; i < n; ++i) peak = std::max(peak, slice.slice_value(i));
  const double threshold = 1e-3 * peak;

  std::vector<FringeMinimum> minima;
  for (int i = 1; i + 1 < n; ++i) {
    const double a = slice.slice_value(i - 1);
    const double b = slice.slice_value(i);
    const double c = slice.slice_value(i + 1);
    if (b > threshold || b > a || b > c) continue;
    const double denom = a - 2.0 * b + c;
    FringeMinimum m{slice.grid()[static_cast<std::size_t>(i)], b};
    if (denom > 0.0) {
      const double shift = 0.5 * slice.step() * (a - c) / denom;
      m.position += shift;
      m.value = b - (a - c) * (a - c) / (8.0 * denom);
    }
    minima.push_back(m);
    ++i;  // skip the immediate neighbor; one detection per fringe
  }
  return minima;
}

/// Mean separation of consecutive dark fringes in a 1-D slice. Needs at
/// least two detectable minima.
inline double fringe_spacing(const ContinuousPattern& slice) {
  const std::vector<FringeMinimum> minima = fringe_minima(slice);
  if (minima.size() < 2) {
    throw InvalidInput("fringe_spacing: fewer than 2 dark fringes detected in the window");
  }
  return (minima.back().position - minima.front().position) /
         static_cast<double>(minima.size() - 1);
}

/// The same pattern computed through the discrete engine: detector positions
/// become n channels, the envelope and phase profiles fill the two splitter
/// columns, and the resulting pair probabilities are converted back to a
/// density. Converges to the closed form as the grid refines, which is the
/// whole point of the construction.
inline ContinuousPattern hbt_from_nport(const HbtGeometry& geom, const Envelope& env,
                                        const GridSpec& grid) {
  detail::validate_grid(geom, env, grid);
  const double dx = grid.step();
  const std::size_t n = static_cast<std::size_t>(grid.points);

  std::vector<double> xs(n);
  Eigen::VectorXcd a(grid.points), b(grid.points);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = grid.min + dx * static_cast<double>(j);
    xs[j] = x;
    const double mag = env.amplitude(x) * std::sqrt(dx);
    const double theta = phase_profiles(geom, x).theta;
    a[static_cast<Eigen::Index>(j)] = std::polar(mag, theta);
    b[static_cast<Eigen::Index>(j)] = std::polar(mag, -theta);
  }
  a /= a.norm();
  b /= b.norm();

  const ModeVector col_a(std::move(a));
  const ModeVector col_b(std::move(b));
  const double overlap_mag = std::abs(col_a.amplitudes().dot(col_b.amplitudes()));
  const CoincidenceDistribution dist = coincidences(symmetrize(col_a, col_b));

  // Unordered pair probabilities aggregate both orderings, so the symmetric
  // per-ordering density takes half of them; bunched entries map one-to-one.
  std::vector<double> values(n * n);
  const double cell = dx * dx;
  for (std::size_t j = 0; j < n; ++j) {
    values[j * n + j] = dist.bunched(static_cast<int>(j)) / cell;
    for (std::size_t k = j + 1; k < n; ++k) {
      const double d = dist.pair(static_cast<int>(j), static_cast<int>(k)) / (2.0 * cell);
      values[j * n + k] = d;
      values[k * n + j] = d;
    }
  }
  return ContinuousPattern(std::move(xs), std::move(values), std::nullopt, overlap_mag);
}

}  // namespace twinterf
