// Regenerates the embedded zeros table: scans Xi(t) for sign changes on
// (0, 238) with step 0.05 and bisects each bracket. Emits CSV on stdout.
#include <cstdio>
#include <vector>

#include "hp/special.hpp"
#include "hp/zeros.hpp"

int main(int argc, char** argv) {
  const int want = argc > 1 ? std::atoi(argv[1]) : 100;
  const double step = 0.05;
  std::printf("index,gamma\n");
  int found = 0;
  double t = 2.0;
  double prev = hp::xi_critical(t);
  while (found < want && t < 400.0) {
    const double next = t + step;
    const double cur = hp::xi_critical(next);
    if (prev * cur < 0.0) {
      const hp::ZetaZero z = hp::refine_zero(t, next, 1e-11);
      ++found;
      std::printf("%d,%.12g\n", found, z.gamma);
      if (z.residual > 1e-8) {
        std::fprintf(stderr, "zero %d residual %.3g exceeds 1e-8\n", found,
                     z.residual);
        return 1;
      }
    }
    prev = cur;
    t = next;
  }
  if (found < want) {
    std::fprintf(stderr, "only %d zeros found below scan limit\n", found);
    return 1;
  }
  return 0;
}
