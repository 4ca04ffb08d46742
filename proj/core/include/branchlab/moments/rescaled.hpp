#pragma once

#include <functional>
#include <vector>

#include "branchlab/spine/q_expectation.hpp"
#include "branchlab/tree/tree_shape.hpp"

namespace branchlab {

// Functional of a continuous shape and the leaf types.
using ContinuousFunctional = std::function<double(const ContinuousShape&, const std::vector<int>&)>;

// n^{-2k} M^k_x0[ F(shape / n, leaf types) ], summed over shapes with heights <= n R.
double rescaledMoment(const QEvaluator& biased, int k, const ContinuousFunctional& F, int n, int x0, double R,
                      unsigned threads = 1);
// n^{-k} times the same sum restricted to shapes whose leaves all sit at height n.
double ultrametricMoment(const QEvaluator& biased, int k, const ContinuousFunctional& F, int n, int x0);

}  // namespace branchlab
