#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "twinterf/coincidence_distribution.hpp"
#include "twinterf/errors.hpp"
#include "twinterf/splitters.hpp"
#include "twinterf/two_boson_state.hpp"

namespace twinterf {

/// Coincidence counts of one reference detector against every detector:
/// counts[k] = P{reference, k} for k != reference, and the bunched
/// probability P(reference, reference) at k = reference. Indices 0-based.
struct DiscretePattern {
  int n = 0;
  int reference = 0;
  std::vector<double> counts;
};

/// Fringe summary of a discrete pattern. Visibility is taken over the cross
/// pairs only (the bunched entry is not part of the spatial fringe) and is
/// absent when fewer than two cross entries exist or all of them vanish.
struct FringeReport {
  std::vector<int> dark_indices;
  double bright_value = 0.0;
  std::optional<double> visibility;
};

inline DiscretePattern pattern_from_distribution(const CoincidenceDistribution& dist,
                                                 int reference) {
  const int n = dist.dim();
  if (reference < 0 || reference >= n) {
    throw InvalidInput("reference detector " + std::to_string(reference) +
                       " out of range [0," + std::to_string(n) + ")");
  }
  DiscretePattern pattern{n, reference, std::vector<double>(static_cast<std::size_t>(n))};
  for (int k = 0; k < n; ++k) {
    pattern.counts[static_cast<std::size_t>(k)] =
        (k == reference) ? dist.bunched(reference) : dist.pair(reference, k);
  }
  return pattern;
}

/// Two detectors behind one balanced splitter, sources tuned: the canonical
/// dip. P{1,2} vanishes and each bunched probability is 1/2. The n = 2
/// alternating profile is exactly the half-silvered-mirror phase convention
/// (source B picks up pi on the way to detector 2).
inline CoincidenceDistribution run_hom() {
  const SplitterSpec spec = alternating_profile(2);
  return coincidences(symmetrize(spec.col_a(), spec.col_b()));
}

/// How the four-detector splitter is realized.
///   eq6:  phase profile applied directly (columns (1,1,1,1)/2 and (1,-1,1,-1)/2)
///   fig5: one central splitter feeding two output splitters
///   fig6: two input splitters cross-wired into two output splitters
/// fig5 and fig6 compile to columns (1,1,1,1)/2 and (1,1,-1,-1)/2, the eq6
/// pattern with detectors 1 and 2 (0-based) swapped; see
/// extended_hom_permutation for the recorded relabeling.
enum class ExtendedHomTopology { eq6, fig5, fig6 };

inline std::string to_string(ExtendedHomTopology t) {
  switch (t) {
    case ExtendedHomTopology::eq6: return "eq6";
    case ExtendedHomTopology::fig5: return "fig5";
    default: return "fig6";
  }
}

/// The beam-splitter realization of the fig5/fig6 topologies (eq6 is a bare
/// phase profile, not a network).
inline NetworkDescription extended_hom_network(ExtendedHomTopology topology) {
  NetworkDescription net;
  net.dim = 4;
  net.input_a = 0;
  net.input_b = 2;
  if (topology == ExtendedHomTopology::fig5) {
    net.elements = {{0, 2, 0.5, Convention::real},
                    {0, 1, 0.5, Convention::real},
                    {2, 3, 0.5, Convention::real}};
  } else if (topology == ExtendedHomTopology::fig6) {
    net.elements = {{0, 1, 0.5, Convention::real},
                    {2, 3, 0.5, Convention::real},
                    {0, 2, 0.5, Convention::real},
                    {1, 3, 0.5, Convention::real}};
  } else {
    throw InvalidInput("extended_hom_network: eq6 is a phase profile, not a network");
  }
  return net;
}

/// Detector relabeling that carries a topology's distribution onto the eq6
/// one: detector j of the topology corresponds to eq6 detector perm[j].
inline std::array<int, 4> extended_hom_permutation(ExtendedHomTopology topology) {
  if (topology == ExtendedHomTopology::eq6) return {0, 1, 2, 3};
  return {0, 2, 1, 3};
}

inline SplitterSpec extended_hom_splitter(ExtendedHomTopology topology) {
  // The direct profile is the n = 4 alternating case: columns (1,1,1,1)/2
  // and (1,-1,1,-1)/2.
  if (topology == ExtendedHomTopology::eq6) return alternating_profile(4);
  return compile_network(extended_hom_network(topology)).spec;
}

inline CoincidenceDistribution run_extended_hom(ExtendedHomTopology topology) {
  const SplitterSpec spec = extended_hom_splitter(topology);
  return coincidences(symmetrize(spec.col_a(), spec.col_b()));
}

/// Alternating-phase pattern for an even channel count: the reference
/// detector's coincidence row. Same-parity partners carry 4/n^2, opposite
/// parity vanishes, and the bunched entry is 2/n^2.
inline DiscretePattern run_nport(int n, int reference) {
  const SplitterSpec spec = alternating_profile(n);
  const CoincidenceDistribution dist = coincidences(symmetrize(spec.col_a(), spec.col_b()));
  return pattern_from_distribution(dist, reference);
}

inline FringeReport analyze_fringes(const DiscretePattern& pattern, double zero_tol) {
  if (!(zero_tol > 0.0)) throw InvalidInput("analyze_fringes: zero_tol must be positive");
  if (pattern.n < 2 || static_cast<int>(pattern.counts.size()) != pattern.n) {
    throw InvalidInput("analyze_fringes: malformed pattern");
  }
  FringeReport report;
  double max_cross = 0.0;
  double min_cross = std::numeric_limits<double>::infinity();
  int cross_count = 0;
  for (int k = 0; k < pattern.n; ++k) {
    if (k == pattern.reference) continue;
    const double value = pattern.counts[static_cast<std::size_t>(k)];
    if (value < zero_tol) report.dark_indices.push_back(k);
    max_cross = std::max(max_cross, value);
    min_cross = std::min(min_cross, value);
    ++cross_count;
  }
  report.bright_value = max_cross;
  // A single cross entry (n = 2) has no fringe contrast to speak of.
  if (cross_count >= 2 && max_cross + min_cross > 0.0) {
    report.visibility = (max_cross - min_cross) / (max_cross + min_cross);
  }
  return report;
}

}  // namespace twinterf
