#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "support/test_helpers.hpp"
#include "twinterf/splitters.hpp"
#include "twinterf/two_boson_state.hpp"

using namespace twinterf;
using Catch::Matchers::WithinAbs;
using test_support::max_deviation;

namespace {
constexpr double kPi = std::numbers::pi;

double unitarity_defect(const Eigen::MatrixXcd& u) {
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}
}  // namespace

TEST_CASE("uniform_phase_splitter fills the stated columns") {
  const SplitterSpec spec =
      uniform_phase_splitter(2, std::array{0.0, 0.0}, std::array{0.0, kPi});
  const double m = 1.0 / std::sqrt(2.0);
  CHECK_THAT(spec.col_a()[0].real(), WithinAbs(m, 1e-15));
  CHECK_THAT(spec.col_a()[1].real(), WithinAbs(m, 1e-15));
  CHECK_THAT(spec.col_b()[0].real(), WithinAbs(m, 1e-15));
  CHECK_THAT(spec.col_b()[1].real(), WithinAbs(-m, 1e-15));
  CHECK(spec.unitary_embeddable());
}

TEST_CASE("uniform_phase_splitter reproduces the four-channel profile") {
  const SplitterSpec spec = uniform_phase_splitter(4, std::array{0.0, 0.0, 0.0, 0.0},
                                                   std::array{0.0, kPi, 0.0, kPi});
  for (int j = 0; j < 4; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    CHECK_THAT(spec.col_b()[j].real(), WithinAbs(sign * 0.5, 1e-15));
    CHECK_THAT(spec.col_b()[j].imag(), WithinAbs(0.0, 1e-15));
  }
}

TEST_CASE("identical columns are flagged as not unitary-embeddable") {
  const SplitterSpec spec =
      uniform_phase_splitter(2, std::array{0.0, 0.0}, std::array{0.0, 0.0});
  CHECK_THAT(std::abs(spec.overlap()), WithinAbs(1.0, 1e-12));
  CHECK_FALSE(spec.unitary_embeddable());
}

TEST_CASE("uniform_phase_splitter rejects bad phase lists") {
  CHECK_THROWS_AS(uniform_phase_splitter(3, std::array{0.0, 0.0}, std::array{0.0, 0.0, 0.0}),
                  InvalidInput);
  CHECK_THROWS_AS(uniform_phase_splitter(1, std::array{0.0}, std::array{0.0}), InvalidInput);
}

TEST_CASE("alternating_profile matches the two- and four-channel cases") {
  const SplitterSpec two = alternating_profile(2);
  const SplitterSpec hom =
      uniform_phase_splitter(2, std::array{0.0, 0.0}, std::array{0.0, kPi});
  // The profile builds e^{i pi} exactly; the general path rounds through
  // polar coordinates.
  CHECK((two.col_b().amplitudes() - hom.col_b().amplitudes()).norm() <= 1e-15);

  const SplitterSpec four = alternating_profile(4);
  for (int j = 0; j < 4; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    CHECK_THAT(four.col_b()[j].real(), WithinAbs(sign * 0.5, 1e-15));
  }
}

TEST_CASE("alternating_profile columns are exactly orthogonal for even n") {
  for (int n : {2, 4, 6, 8, 16}) {
    CHECK_THAT(std::abs(alternating_profile(n).overlap()), WithinAbs(0.0, 1e-15));
  }
  CHECK_THROWS_AS(alternating_profile(5), InvalidInput);
  CHECK_THROWS_AS(alternating_profile(0), InvalidInput);
}

TEST_CASE("cross_phase_factor follows the parity rule") {
  const SplitterSpec spec = alternating_profile(4);
  // 0-based indices; detectors are numbered from 1 in reported patterns, so
  // (0,2) here is the odd-odd pair and (1,3) the even-even one.
  CHECK_THAT(cross_phase_factor(spec, 0, 2).real(), WithinAbs(2.0, 1e-12));
  CHECK_THAT(cross_phase_factor(spec, 0, 2).imag(), WithinAbs(0.0, 1e-12));
  CHECK_THAT(cross_phase_factor(spec, 1, 3).real(), WithinAbs(-2.0, 1e-12));
  CHECK_THAT(std::abs(cross_phase_factor(spec, 0, 1)), WithinAbs(0.0, 1e-12));

  const SplitterSpec flat =
      uniform_phase_splitter(3, std::array{0.0, 0.0, 0.0}, std::array{0.0, 0.0, 0.0});
  CHECK_THAT(cross_phase_factor(flat, 0, 2).real(), WithinAbs(2.0, 1e-12));
}

TEST_CASE("cross_phase_factor parity table for larger even n") {
  for (int n : {2, 4, 8, 16, 32, 64}) {
    const SplitterSpec spec = alternating_profile(n);
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Complex factor = cross_phase_factor(spec, j, k);
        const double magnitude = (j % 2 == k % 2) ? 2.0 : 0.0;
        REQUIRE_THAT(std::abs(factor), WithinAbs(magnitude, 1e-12));
      }
    }
  }
}

TEST_CASE("cross_phase_factor rejects bad input") {
  const SplitterSpec spec = alternating_profile(4);
  CHECK_THROWS_AS(cross_phase_factor(spec, 1, 1), InvalidInput);
  CHECK_THROWS_AS(cross_phase_factor(spec, 0, 4), InvalidInput);

  Eigen::VectorXcd lopsided(2);
  lopsided << Complex(0.8, 0.0), Complex(0.6, 0.0);
  const SplitterSpec nonuniform{ModeVector(lopsided), ModeVector(lopsided)};
  CHECK_THROWS_AS(cross_phase_factor(nonuniform, 0, 1), InvalidInput);
}

TEST_CASE("splitter elements are unitary in both conventions") {
  const Eigen::Matrix2cd real = balanced_splitter_element(Convention::real);
  const double m = 1.0 / std::sqrt(2.0);
  CHECK_THAT(real(0, 0).real(), WithinAbs(m, 1e-15));
  CHECK_THAT(real(0, 1).real(), WithinAbs(m, 1e-15));
  CHECK_THAT(real(1, 1).real(), WithinAbs(-m, 1e-15));

  const Eigen::Matrix2cd symmetric = balanced_splitter_element(Convention::symmetric);
  CHECK_THAT(symmetric(0, 1).imag(), WithinAbs(m, 1e-15));
  CHECK_THAT(symmetric(1, 0).imag(), WithinAbs(m, 1e-15));

  CHECK(unitarity_defect(real) <= 1e-15);
  CHECK(unitarity_defect(symmetric) <= 1e-15);
  CHECK(unitarity_defect(splitter_element(0.3, Convention::real)) <= 1e-15);
  CHECK(unitarity_defect(splitter_element(0.3, Convention::symmetric)) <= 1e-15);

  CHECK_THROWS_AS(convention_from_string("lossy"), InvalidInput);
  CHECK_THROWS_AS(splitter_element(1.5, Convention::real), InvalidInput);
}

TEST_CASE("a single balanced element compiles to the two-port transform") {
  NetworkDescription net;
  net.dim = 2;
  net.elements = {{0, 1, 0.5, Convention::real}};
  net.input_a = 0;
  net.input_b = 1;
  const CompiledNetwork compiled = compile_network(net);
  const double m = 1.0 / std::sqrt(2.0);
  CHECK_THAT(compiled.unitary(0, 0).real(), WithinAbs(m, 1e-15));
  CHECK_THAT(compiled.unitary(1, 1).real(), WithinAbs(-m, 1e-15));
  CHECK_THAT(std::abs(compiled.spec.overlap()), WithinAbs(0.0, 1e-12));
}

TEST_CASE("the compiled dip network equals the phase-profile dip") {
  NetworkDescription net;
  net.dim = 2;
  net.elements = {{0, 1, 0.5, Convention::real}};
  net.input_a = 0;
  net.input_b = 1;
  const SplitterSpec compiled = compile_network(net).spec;
  const SplitterSpec profile =
      uniform_phase_splitter(2, std::array{0.0, 0.0}, std::array{0.0, kPi});

  const auto from_network = coincidences(symmetrize(compiled.col_a(), compiled.col_b()));
  const auto from_profile = coincidences(symmetrize(profile.col_a(), profile.col_b()));
  CHECK(max_deviation(from_network, from_profile) <= 1e-12);
}

TEST_CASE("network validation catches malformed descriptions") {
  NetworkDescription net;
  net.dim = 4;
  net.input_a = 0;
  net.input_b = 2;

  net.elements = {{0, 4, 0.5, Convention::real}};
  CHECK_THROWS_AS(compile_network(net), InvalidInput);  // mode out of range

  net.elements = {{1, 1, 0.5, Convention::real}};
  CHECK_THROWS_AS(compile_network(net), InvalidInput);  // degenerate element

  net.elements = {{0, 1, 1.5, Convention::real}};
  CHECK_THROWS_AS(compile_network(net), InvalidInput);  // reflectivity out of range

  net.elements = {{0, 1, 0.5, Convention::real}, {0, 2, 0.5, Convention::real}};
  CHECK_THROWS_AS(compile_network(net), InvalidInput);  // mode 3 unreachable

  net.input_b = 5;
  net.elements = {{0, 1, 0.5, Convention::real}};
  CHECK_THROWS_AS(compile_network(net), InvalidInput);  // input out of range
}

TEST_CASE("random networks compile to unitaries with exact column extraction") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> reflectivity(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);  // up to 16 modes
    NetworkDescription net;
    net.dim = n;
    // A chain touching every mode keeps them all reachable; extras on top.
    for (int m = 0; m + 1 < n; ++m) {
      net.elements.push_back({m, m + 1, reflectivity(rng),
                              (rng() % 2 == 0) ? Convention::real : Convention::symmetric});
    }
    const int extras = static_cast<int>(rng() % 25);
    for (int e = 0; e < extras && static_cast<int>(net.elements.size()) < 40; ++e) {
      const int i = static_cast<int>(rng() % n);
      int j = static_cast<int>(rng() % n);
      if (i == j) j = (j + 1) % n;
      net.elements.push_back({i, j, reflectivity(rng),
                              (rng() % 2 == 0) ? Convention::real : Convention::symmetric});
    }
    net.input_a = static_cast<int>(rng() % n);
    net.input_b = static_cast<int>(rng() % n);
    if (net.input_a == net.input_b) net.input_b = (net.input_b + 1) % n;

    const CompiledNetwork compiled = compile_network(net);
    REQUIRE(unitarity_defect(compiled.unitary) <= 1e-10);
    REQUIRE((compiled.spec.col_a().amplitudes() - compiled.unitary.col(net.input_a)).norm() ==
            0.0);
    REQUIRE((compiled.spec.col_b().amplitudes() - compiled.unitary.col(net.input_b)).norm() ==
            0.0);
    REQUIRE(std::abs(compiled.spec.overlap()) <= 1e-12);
  }
}
