#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "branchlab/limits/integrals.hpp"
#include "branchlab/mmm/space.hpp"
#include "branchlab/random.hpp"

namespace branchlab {

// Tree coded by a nonnegative path on a uniform grid: d(u, v) = f(u) + f(v) - 2 min_[u,v] f.
// Grid points at distance zero are merged into one point carrying their summed mass.
// The root is the class of the first grid point. classOf (optional) receives the point
// index of every grid position.
FiniteMmmSpace contourTree(const std::vector<double>& path, double massScale,
                           std::vector<std::size_t>* classOf = nullptr);

// Uniform Dyck path with 2 * halfLength steps (heights S_0 .. S_{2N}), by the cycle lemma.
std::vector<int> sampleDyckPath(int halfLength, Rng& rng);
// Strictly positive simple-walk excursion with `steps` (even, >= 2) steps, S_i / sqrt(steps).
std::vector<double> sampleExcursion(int steps, Rng& rng);

struct ExcursionCheckOptions {
  int excursions = 10'000;
  int steps = 10'000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct ExcursionCheck {
  Estimate inverseHeightIntegral;  // E int_0^1 dt / e(t) from the contour trees
  Estimate freeMoment;             // k = 1 moment of 1{d <= R} under the free excursion law
  double crt = 0;                  // k = 1 CRT moment formula
  double relError = 0;
};

// Integrating the k = 1 monomial of the contour tree of a normalised excursion against
// the excursion-length measure gives (1/sqrt(2 pi)) E[int dt/e(t)] int phi; compared
// here with the CRT formula for phi = 1{d_01 <= R}.
ExcursionCheck excursionDonskerCheck(double R, const ExcursionCheckOptions& options);

}  // namespace branchlab
