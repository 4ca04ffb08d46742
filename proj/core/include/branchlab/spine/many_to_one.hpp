#pragma once

#include <functional>
#include <vector>

#include "branchlab/spine/kernel.hpp"

namespace branchlab {

// f(zeta_0, ..., zeta_n): a functional of the ancestral type history of one vertex.
using PathFunctional = std::function<double(const std::vector<int>&)>;

// psi(x0) * E[ prod_{m<n} lambda(zeta_m) f(zeta) / psi(zeta_n) ] for the spine chain
// zeta, summed exactly over all |E|^n type paths.
double manyToOne(const SpineKernel& kernel, int x0, int n, const PathFunctional& f);

}  // namespace branchlab
