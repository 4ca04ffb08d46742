#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "branchlab/mmm/space.hpp"
#include "branchlab/tree/distance_matrix.hpp"

namespace branchlab {

// phi(D, marks) with D the (k+1)x(k+1) distances of (root, x_1, ..., x_k).
using MonomialFunction = std::function<double(const DistanceMatrix&, const std::vector<int>&)>;

struct MonomialOptions {
  std::uint64_t tupleCap = 4'000'000;   // exhaustive below this many tuples
  std::size_t samplesPerStratum = 64;   // otherwise: tuples drawn per leading point
  std::uint64_t seed = 1;
};

struct MonomialResult {
  double value = 0;
  double standardError = 0;
  bool exact = true;
};

// sum over all k-tuples (repetitions allowed) of prod mass * phi.
MonomialResult monomial(const FiniteMmmSpace& space, int k, const MonomialFunction& phi,
                        const MonomialOptions& options = {});

// Splits the monomial of a rescaled tree into the part from k distinct pairwise
// incomparable vertices (every ordering) and the rest.
struct MonomialDecomposition {
  double total = 0;
  double planar = 0;
  double deficient = 0;
  double bound = 0;  // phiSup * k! * |T|^{k-1} * (height+1) * massScale^k
};
MonomialDecomposition decomposeMonomial(const MarkedTree& tree, int k, const MonomialFunction& phi, double edgeScale,
                                        double massScale, double phiSup);

}  // namespace branchlab
