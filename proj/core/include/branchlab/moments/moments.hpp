#pragma once

#include <cstdint>

#include "branchlab/process/model.hpp"
#include "branchlab/process/population.hpp"
#include "branchlab/spine/functional.hpp"
#include "branchlab/spine/many_to_one.hpp"
#include "branchlab/spine/q_expectation.hpp"

namespace branchlab {

// k-th planar factorial moment E_x0[ sum_{v_1 < ... < v_k} F(spanned marked tree) ],
// where tuples spanning fewer than k leaves contribute 0. F must vanish on trees of
// height above supportRadius.
struct MomentQuery {
  int k = 1;
  int x0 = 0;
  Functional F;
  int supportRadius = 0;
};

// Exact sum over every realisation of the population to depth `horizon` (>= support).
double momentBruteforce(const Model& model, const MomentQuery& q, int horizon,
                        std::uint64_t cap = kDefaultEnumerationCap);

// psi(x0) * sum over shapes with k leaves and heights <= R of Q[bias * F]. Shapes are
// split into blocks by first leaf height; block results are added in a fixed order, so
// the value does not depend on `threads`.
double momentManyToFew(const QEvaluator& biased, const MomentQuery& q, unsigned threads = 1);
double momentManyToFew(const SpineKernel& kernel, const MomentQuery& q, unsigned threads = 1);

// E_x0[ sum_{|v| = n} f(types along the ancestral line of v) ] by enumeration.
double manyToOneBruteforce(const Model& model, int x0, int n, const PathFunctional& f,
                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace branchlab
