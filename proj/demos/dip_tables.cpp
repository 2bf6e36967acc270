// Prints the coincidence tables of the two- and four-detector experiments.

#include <cstdio>

#include "twinterf/twinterf.hpp"

int main() {
  using namespace twinterf;

  const CoincidenceDistribution hom = run_hom();
  std::printf("two detectors, one balanced splitter:\n");
  std::printf("  P(1,1) = %.6f   P(2,2) = %.6f   P{1,2} = %.6f\n\n", hom.bunched(0),
              hom.bunched(1), hom.pair(0, 1));

  const CoincidenceDistribution ext = run_extended_hom(ExtendedHomTopology::eq6);
  std::printf("four detectors, alternating phases:\n");
  for (int j = 0; j < 4; ++j) std::printf("  P(%d,%d) = %.6f\n", j + 1, j + 1, ext.bunched(j));
  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k) {
      std::printf("  P{%d,%d} = %.6f\n", j + 1, k + 1, ext.pair(j, k));
    }
  }

  std::printf("\ncoincidence row of detector 1 for n = 8 (dark even detectors):\n");
  const DiscretePattern row = run_nport(8, 0);
  for (int k = 0; k < row.n; ++k) std::printf("  detector %d: %.6f\n", k + 1, row.counts[k]);
  return 0;
}
