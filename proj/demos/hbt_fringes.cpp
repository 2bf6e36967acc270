// Writes the fixed-x1 coincidence fringe of the continuous-position setup to
// stdout as CSV, plus a short summary on stderr.

#include <cstdio>

#include "twinterf/twinterf.hpp"

int main() {
  using namespace twinterf;

  const HbtGeometry geom{1e-3, 8e-7, 1.0};  // x0 = 1 mm, 800 nm light, L = 1 m
  const Envelope env = Envelope::gaussian(2e-3);
  const ContinuousPattern slice = scan(geom, env, {-0.005, 0.005, 2048}, 0.0);

  std::fprintf(stderr, "fringe width lambda*L/(2*x0) = %.6g m\n", geom.fringe_width());
  std::fprintf(stderr, "estimated from pattern       = %.6g m\n", fringe_spacing(slice));

  std::printf("x2,density\n");
  for (int j = 0; j < slice.points(); ++j) {
    std::printf("%.17g,%.17g\n", slice.grid()[j], slice.slice_value(j));
  }
  return 0;
}
