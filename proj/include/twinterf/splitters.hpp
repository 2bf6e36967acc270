#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twinterf/errors.hpp"
#include "twinterf/mode_vector.hpp"

namespace twinterf {

/// Columns with mutual overlap at or below this magnitude can be extended to
/// a single n x n unitary, i.e. they describe a lossless physical splitter.
inline constexpr double kEmbeddableTolerance = 1e-9;

/// Accepted max |U^dag U - I| entry for a compiled network.
inline constexpr double kUnitarityTolerance = 1e-10;

/// Phase convention of a two-port splitter element.
///   real:      (1/sqrt(2)) [[1, 1], [1, -1]]   (one reflection picks up pi)
///   symmetric: (1/sqrt(2)) [[1, i], [i, 1]]
enum class Convention { real, symmetric };

inline std::string to_string(Convention c) {
  return c == Convention::real ? "real" : "symmetric";
}

inline Convention convention_from_string(const std::string& tag) {
  if (tag == "real") return Convention::real;
  if (tag == "symmetric") return Convention::symmetric;
  throw InvalidInput("unknown splitter convention \"" + tag + "\" (expected real or symmetric)");
}

/// Two-port element with reflectivity r (fraction of intensity coupled across
/// the pair). r = 0.5 gives the balanced element of the chosen convention.
inline Eigen::Matrix2cd splitter_element(double reflectivity, Convention convention) {
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) {
    throw InvalidInput("splitter reflectivity must lie in [0,1], got " +
                       std::to_string(reflectivity));
  }
  const double t = std::sqrt(1.0 - reflectivity);
  const double r = std::sqrt(reflectivity);
  Eigen::Matrix2cd b;
  if (convention == Convention::real) {
    b << Complex(t, 0), Complex(r, 0), Complex(r, 0), Complex(-t, 0);
  } else {
    b << Complex(t, 0), Complex(0, r), Complex(0, r), Complex(t, 0);
  }
  return b;
}

inline Eigen::Matrix2cd balanced_splitter_element(Convention convention) {
  return splitter_element(0.5, convention);
}

/// A path-splitter restricted to its two populated input modes: the output
/// amplitude column for a particle from source A and the one for source B.
/// The column overlap <a|b> is recorded so downstream users can tell whether
/// the pair embeds into a unitary (physical splitter) or not.
class SplitterSpec {
 public:
  SplitterSpec(ModeVector col_a, ModeVector col_b)
      : col_a_(std::move(col_a)), col_b_(std::move(col_b)) {
    if (col_a_.dim() != col_b_.dim()) {
      throw InvalidInput("SplitterSpec: column dimensions differ (" +
                         std::to_string(col_a_.dim()) + " vs " + std::to_string(col_b_.dim()) +
                         ")");
    }
    overlap_ = col_a_.amplitudes().dot(col_b_.amplitudes());
  }

  int dim() const { return col_a_.dim(); }
  const ModeVector& col_a() const { return col_a_; }
  const ModeVector& col_b() const { return col_b_; }

  /// <col_a|col_b>.
  Complex overlap() const { return overlap_; }
  bool unitary_embeddable() const { return std::abs(overlap_) <= kEmbeddableTolerance; }

 private:
  ModeVector col_a_;
  ModeVector col_b_;
  Complex overlap_;
};

/// Splitter whose columns have uniform modulus 1/sqrt(n) and the given
/// per-channel phases: col_a[j] = e^{i theta_j}/sqrt(n), col_b[k] =
/// e^{i phi_k}/sqrt(n).
inline SplitterSpec uniform_phase_splitter(int n, std::span<const double> thetas,
                                           std::span<const double> phis) {
  if (n < 2) throw InvalidInput("uniform_phase_splitter: need n >= 2");
  if (static_cast<int>(thetas.size()) != n || static_cast<int>(phis.size()) != n) {
    throw InvalidInput("uniform_phase_splitter: phase list lengths (" +
                       std::to_string(thetas.size()) + ", " + std::to_string(phis.size()) +
                       ") do not match n = " + std::to_string(n));
  }
  const double modulus = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXcd a(n), b(n);
  for (int j = 0; j < n; ++j) {
    a[j] = std::polar(modulus, thetas[static_cast<std::size_t>(j)]);
    b[j] = std::polar(modulus, phis[static_cast<std::size_t>(j)]);
  }
  return SplitterSpec(ModeVector(std::move(a)), ModeVector(std::move(b)));
}

/// The simplified profile: source A picks up no phase anywhere; source B
/// picks up pi on every even-numbered detector (detectors are numbered from
/// 1 in reported patterns, so 0-based index j gets pi when j is odd). Only
/// even n is accepted: with an odd channel count the columns fail to be
/// orthogonal (residual overlap 1/n) and the clean dark fringes are lost.
inline SplitterSpec alternating_profile(int n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidInput("alternating_profile: channel count must be even and >= 2, got " +
                       std::to_string(n));
  }
  // e^{0} and e^{i pi} are exactly +-1, so build the columns as real values;
  // the overlap then cancels term by term and the columns come out exactly
  // orthogonal, with exact zeros in the dark cross terms downstream.
  const double modulus = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXcd a(n), b(n);
  for (int j = 0; j < n; ++j) {
    a[j] = Complex(modulus, 0.0);
    b[j] = Complex(j % 2 == 0 ? modulus : -modulus, 0.0);
  }
  return SplitterSpec(ModeVector(std::move(a)), ModeVector(std::move(b)));
}

/// The interference factor of the cross term feeding detectors j and k:
/// e^{i(theta_j + phi_k)} + e^{i(theta_k + phi_j)}. Only defined for
/// uniform-modulus specs, where the phases are recoverable from the columns.
/// For the alternating profile this is +2 / -2 / 0 according to parity.
inline Complex cross_phase_factor(const SplitterSpec& spec, int j, int k) {
  const int n = spec.dim();
  if (j < 0 || k < 0 || j >= n || k >= n) {
    throw InvalidInput("cross_phase_factor: detector index out of range");
  }
  if (j == k) throw InvalidInput("cross_phase_factor: requires two distinct detectors");
  const double expected = 1.0 / static_cast<double>(n);
  for (int m = 0; m < n; ++m) {
    if (std::abs(std::norm(spec.col_a()[m]) - expected) > 1e-9 ||
        std::abs(std::norm(spec.col_b()[m]) - expected) > 1e-9) {
      throw InvalidInput("cross_phase_factor: spec columns do not have uniform modulus");
    }
  }
  // e^{i theta_j} = sqrt(n) a_j, so the factor is n (a_j b_k + a_k b_j).
  return static_cast<double>(n) *
         (spec.col_a()[j] * spec.col_b()[k] + spec.col_a()[k] * spec.col_b()[j]);
}

/// One two-port element placed between modes i and j of an n-mode network.
struct BeamSplitterElement {
  int mode_i = 0;
  int mode_j = 1;
  double reflectivity = 0.5;
  Convention convention = Convention::real;
};

/// A beam-splitter network: n terminal detector modes, elements applied in
/// listed order, and the input modes where sources A and B enter.
struct NetworkDescription {
  int dim = 0;
  std::vector<BeamSplitterElement> elements;
  int input_a = 0;
  int input_b = 1;

  void validate() const {
    if (dim < 2) throw InvalidInput("network: dim must be >= 2, got " + std::to_string(dim));
    if (input_a < 0 || input_a >= dim || input_b < 0 || input_b >= dim) {
      throw InvalidInput("network: input modes must lie in [0," + std::to_string(dim) + ")");
    }
    for (std::size_t e = 0; e < elements.size(); ++e) {
      const auto& el = elements[e];
      if (el.mode_i < 0 || el.mode_i >= dim || el.mode_j < 0 || el.mode_j >= dim) {
        throw InvalidInput("network element " + std::to_string(e) + ": mode index out of range");
      }
      if (el.mode_i == el.mode_j) {
        throw InvalidInput("network element " + std::to_string(e) +
                           ": the two modes must differ");
      }
      if (!(el.reflectivity >= 0.0 && el.reflectivity <= 1.0)) {
        throw InvalidInput("network element " + std::to_string(e) +
                           ": reflectivity outside [0,1]");
      }
    }
    // Every terminal detector must be reachable from one of the inputs.
    std::vector<bool> reached(static_cast<std::size_t>(dim), false);
    reached[static_cast<std::size_t>(input_a)] = true;
    reached[static_cast<std::size_t>(input_b)] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& el : elements) {
        const bool ri = reached[static_cast<std::size_t>(el.mode_i)];
        const bool rj = reached[static_cast<std::size_t>(el.mode_j)];
        if (ri != rj) {
          reached[static_cast<std::size_t>(el.mode_i)] = true;
          reached[static_cast<std::size_t>(el.mode_j)] = true;
          grew = true;
        }
      }
    }
    for (int m = 0; m < dim; ++m) {
      if (!reached[static_cast<std::size_t>(m)]) {
        throw InvalidInput("network: detector mode " + std::to_string(m) +
                           " is not reachable from the inputs");
      }
    }
  }
};

struct CompiledNetwork {
  Eigen::MatrixXcd unitary;
  SplitterSpec spec;
};

/// Multiplies the listed two-port embeddings (identity on all other modes)
/// into the full n x n transform; the first listed element acts first. The
/// accumulated matrix is checked for unitarity, and the splitter columns are
/// read off as the columns addressed by the input modes.
inline CompiledNetwork compile_network(const NetworkDescription& net) {
  net.validate();
  const int n = net.dim;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& el : net.elements) {
    const Eigen::Matrix2cd b = splitter_element(el.reflectivity, el.convention);
    const Eigen::RowVectorXcd row_i = u.row(el.mode_i);
    const Eigen::RowVectorXcd row_j = u.row(el.mode_j);
    u.row(el.mode_i) = b(0, 0) * row_i + b(0, 1) * row_j;
    u.row(el.mode_j) = b(1, 0) * row_i + b(1, 1) * row_j;
  }

  const double defect =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > kUnitarityTolerance) {
    throw InternalError("compile_network: accumulated transform lost unitarity (defect " +
                        std::to_string(defect) + "); this is a bug");
  }

  SplitterSpec spec(ModeVector(u.col(net.input_a)), ModeVector(u.col(net.input_b)));
  return CompiledNetwork{std::move(u), std::move(spec)};
}

}  // namespace twinterf
