#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "branchlab/process/marked_tree.hpp"
#include "branchlab/spine/kernel.hpp"

namespace branchlab {

struct ProductFunctional;
using ProductSum = std::vector<ProductFunctional>;

// Functional that factorises over the first branch point:
//   k == 1: F = leaf(height, leaf type)
//   k >= 2: F = 1{block sizes == composition} * stem(n, type at branch point)
//               * prod_i (sum of block(n, i))(i-th subtree)
// where n is the height of the first branch point and subtree heights are measured
// from the children of the branch point. Block functionals may depend on n.
struct ProductFunctional {
  int k = 1;
  std::function<double(int, int)> leaf;
  std::vector<int> composition;
  std::function<double(int, int)> stem;
  std::function<ProductSum(int, std::size_t)> block;
  // F vanishes once a leaf is higher than this.
  int supportHeight = 0;

  double operator()(const MarkedShape& ms) const;
};

double evaluate(const ProductSum& f, const MarkedShape& ms);

// 1{all leaf heights <= R} * prod_i w(leaf type i), written as a sum of product
// functionals over the compositions of k into at least two blocks.
ProductSum heightIndicatorProducts(int k, int R, std::vector<double> leafWeights);

// Moment by recursion over the first branch point: the stem contributes mean-matrix
// powers, the branch point a sum over ordered distinct children, and each block a
// lower-order moment. Returns one entry per start type.
Eigen::VectorXd momentRecursiveVector(const SpineKernel& kernel, const ProductSum& f);
double momentRecursive(const SpineKernel& kernel, int x0, const ProductSum& f);
double momentRecursive(const SpineKernel& kernel, int x0, const ProductFunctional& f);

}  // namespace branchlab
