#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "branchlab/tree/tree_shape.hpp"

namespace branchlab {

struct Estimate {
  double value = 0;
  double standardError = 0;
};

struct Integration {
  enum class Kind { MonteCarlo, Grid };
  Kind kind = Kind::MonteCarlo;
  std::size_t samples = 1'000'000;  // Monte Carlo
  std::uint64_t seed = 1;
  int cellsPerAxis = 100;           // midpoint grid
  unsigned threads = 1;

  static Integration monteCarlo(std::size_t samples, std::uint64_t seed) {
    Integration i;
    i.samples = samples;
    i.seed = seed;
    return i;
  }
  static Integration grid(int cellsPerAxis) {
    Integration i;
    i.kind = Kind::Grid;
    i.cellsPerAxis = cellsPerAxis;
    return i;
  }
};

using ShapeIntegrand = std::function<double(const ContinuousShape&)>;

// Integral of F against Lebesgue measure on {0 <= b_i < min(l_i, l_{i+1}), l_i <= R},
// i.e. uniform sampling of [0,R]^{2k-1} with the shape indicator.
Estimate lambdaIntegral(int k, const ShapeIntegrand& F, double R, const Integration& how);

// Integral over b in [0,1]^{k-1} of F(l = (1,...,1), b).
Estimate lambdaTildeIntegral(int k, const ShapeIntegrand& F, const Integration& how);

}  // namespace branchlab
