#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "branchlab/limits/brownian_moments.hpp"
#include "branchlab/random.hpp"

namespace branchlab {

struct CppAtom {
  double position = 0;
  double depth = 0;
};

// Coalescent point process on [0, Z]: Poisson atoms with intensity du ds / s^2 on
// [0, Z] x [epsilon, 1]. Two positions are at distance 2 * (largest depth strictly
// between them); every position is at distance 1 from the root.
struct CppSample {
  double Z = 0;
  double epsilon = 0;
  std::vector<CppAtom> atoms;

  double distance(double u, double v) const;
};

CppSample sampleCpp(double epsilon, Rng& rng);
CppSample sampleCpp(double epsilon, std::uint64_t seed);

struct CppMonteCarloOptions {
  std::size_t samples = 100'000;
  std::uint64_t seed = 1;
  double epsilon = 1e-3;
  std::size_t positionsPerSample = 8;  // position tuples averaged per CPP draw
  unsigned threads = 1;
};

// Monte Carlo mean of the k-th monomial of the CPP with mass (Sigma^2/2) Leb on [0, Z]
// and i.i.d. pi marks.
Estimate cppMonomialMonteCarlo(const LimitQuery& q, const CppMonteCarloOptions& options);

}  // namespace branchlab
