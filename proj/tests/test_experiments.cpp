#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <thread>
#include <vector>

#include "support/test_helpers.hpp"
#include "twinterf/experiments.hpp"
#include "twinterf/oracle.hpp"

using namespace twinterf;
using Catch::Matchers::WithinAbs;
using test_support::max_deviation;
using test_support::to_std;

TEST_CASE("run_hom: the dip") {
  const CoincidenceDistribution dist = run_hom();
  CHECK_THAT(dist.pair(0, 1), WithinAbs(0.0, 1e-12));
  CHECK_THAT(dist.bunched(0), WithinAbs(0.5, 1e-12));
  CHECK_THAT(dist.bunched(1), WithinAbs(0.5, 1e-12));
  CHECK_THAT(dist.total(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("run_extended_hom(eq6): bunching and bright pairs") {
  const CoincidenceDistribution dist = run_extended_hom(ExtendedHomTopology::eq6);
  for (int j = 0; j < 4; ++j) CHECK_THAT(dist.bunched(j), WithinAbs(0.125, 1e-12));
  CHECK_THAT(dist.pair(0, 2), WithinAbs(0.25, 1e-12));
  CHECK_THAT(dist.pair(1, 3), WithinAbs(0.25, 1e-12));
  CHECK_THAT(dist.pair(0, 1), WithinAbs(0.0, 1e-12));
  CHECK_THAT(dist.pair(0, 3), WithinAbs(0.0, 1e-12));
  CHECK_THAT(dist.pair(1, 2), WithinAbs(0.0, 1e-12));
  CHECK_THAT(dist.pair(2, 3), WithinAbs(0.0, 1e-12));
}

TEST_CASE("fig5 and fig6 reproduce eq6 up to the recorded permutation") {
  const CoincidenceDistribution eq6 = run_extended_hom(ExtendedHomTopology::eq6);
  for (ExtendedHomTopology t : {ExtendedHomTopology::fig5, ExtendedHomTopology::fig6}) {
    const CoincidenceDistribution dist = run_extended_hom(t);
    const auto perm = extended_hom_permutation(t);
    REQUIRE(max_deviation(relabel(dist, perm), eq6) <= 1e-12);
  }
}

TEST_CASE("run_nport: reference row for n = 8") {
  const DiscretePattern pattern = run_nport(8, 0);
  CHECK_THAT(pattern.counts[0], WithinAbs(2.0 / 64.0, 1e-12));
  for (int k = 1; k < 8; ++k) {
    const double expected = (k % 2 == 0) ? 4.0 / 64.0 : 0.0;
    CHECK_THAT(pattern.counts[static_cast<std::size_t>(k)], WithinAbs(expected, 1e-12));
  }
}

TEST_CASE("run_nport(2) equals run_hom entrywise") {
  const DiscretePattern two = run_nport(2, 0);
  const CoincidenceDistribution hom = run_hom();
  CHECK_THAT(two.counts[0], WithinAbs(hom.bunched(0), 1e-15));
  CHECK_THAT(two.counts[1], WithinAbs(hom.pair(0, 1), 1e-15));
}

TEST_CASE("run_nport(4) row matches the extended experiment") {
  const DiscretePattern four = run_nport(4, 0);
  CHECK_THAT(four.counts[0], WithinAbs(0.125, 1e-12));
  CHECK_THAT(four.counts[1], WithinAbs(0.0, 1e-12));
  CHECK_THAT(four.counts[2], WithinAbs(0.25, 1e-12));
  CHECK_THAT(four.counts[3], WithinAbs(0.0, 1e-12));
}

TEST_CASE("run_nport rejects odd or invalid inputs") {
  CHECK_THROWS_AS(run_nport(7, 0), InvalidInput);
  CHECK_THROWS_AS(run_nport(4, 4), InvalidInput);
  CHECK_THROWS_AS(run_nport(4, -1), InvalidInput);
}

TEST_CASE("full alternating distribution sums to one for all even n") {
  for (int n = 2; n <= 64; n += 2) {
    const SplitterSpec spec = alternating_profile(n);
    const CoincidenceDistribution dist = coincidences(symmetrize(spec.col_a(), spec.col_b()));
    REQUIRE_THAT(dist.total(), WithinAbs(1.0, 1e-12));

    const double n2 = static_cast<double>(n) * n;
    for (int j = 0; j < n; ++j) {
      REQUIRE_THAT(dist.bunched(j), WithinAbs(2.0 / n2, 1e-12));
      for (int k = j + 1; k < n; ++k) {
        const double expected = (j % 2 == k % 2) ? 4.0 / n2 : 0.0;
        REQUIRE_THAT(dist.pair(j, k), WithinAbs(expected, 1e-12));
      }
    }
  }
}

TEST_CASE("canned runs agree with the oracle") {
  const auto check_spec = [](const SplitterSpec& spec) {
    const auto dist = coincidences(symmetrize(spec.col_a(), spec.col_b()));
    const auto oracle =
        oracle_coincidences(to_std(spec.col_a().amplitudes()), to_std(spec.col_b().amplitudes()));
    REQUIRE(max_deviation(dist, oracle) <= 1e-12);
  };
  check_spec(alternating_profile(2));
  check_spec(alternating_profile(8));
  check_spec(alternating_profile(32));
  check_spec(extended_hom_splitter(ExtendedHomTopology::eq6));
  check_spec(extended_hom_splitter(ExtendedHomTopology::fig5));
  check_spec(extended_hom_splitter(ExtendedHomTopology::fig6));
}

TEST_CASE("analyze_fringes on the n = 8 row") {
  // Detectors are reported 1-based; dark cross partners of detector 1 are
  // detectors 2, 4, 6, 8, i.e. 0-based indices 1, 3, 5, 7.
  const FringeReport report = analyze_fringes(run_nport(8, 0), 1e-9);
  CHECK(report.dark_indices == std::vector<int>{1, 3, 5, 7});
  CHECK_THAT(report.bright_value, WithinAbs(4.0 / 64.0, 1e-12));
  REQUIRE(report.visibility.has_value());
  CHECK_THAT(*report.visibility, WithinAbs(1.0, 1e-12));
}

TEST_CASE("analyze_fringes on the extended row") {
  DiscretePattern row{4, 0, {0.125, 0.0, 0.25, 0.0}};
  const FringeReport report = analyze_fringes(row, 1e-9);
  CHECK(report.dark_indices == std::vector<int>{1, 3});
  REQUIRE(report.visibility.has_value());
  CHECK_THAT(*report.visibility, WithinAbs(1.0, 1e-12));
}

TEST_CASE("analyze_fringes edge cases") {
  const DiscretePattern flat{5, 0, {0.2, 0.2, 0.2, 0.2, 0.2}};
  const FringeReport flat_report = analyze_fringes(flat, 1e-9);
  REQUIRE(flat_report.visibility.has_value());
  CHECK_THAT(*flat_report.visibility, WithinAbs(0.0, 1e-12));
  CHECK(flat_report.dark_indices.empty());

  // Two detectors leave a single cross entry: no visibility to report.
  const FringeReport hom_report = analyze_fringes(run_nport(2, 0), 1e-9);
  CHECK_FALSE(hom_report.visibility.has_value());
  CHECK(hom_report.dark_indices == std::vector<int>{1});

  CHECK_THROWS_AS(analyze_fringes(flat, 0.0), InvalidInput);
}

TEST_CASE("concurrent canned runs are deterministic") {
  const DiscretePattern reference = run_nport(16, 3);
  std::vector<DiscretePattern> results(8);
  std::vector<std::thread> workers;
  workers.reserve(results.size());
  for (auto& slot : results) {
    workers.emplace_back([&slot] { slot = run_nport(16, 3); });
  }
  for (auto& w : workers) w.join();
  for (const auto& result : results) {
    REQUIRE(result.counts == reference.counts);
  }
}
