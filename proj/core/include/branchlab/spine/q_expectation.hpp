#pragma once

#include <deque>
#include <mutex>

#include <Eigen/Dense>

#include "branchlab/spine/functional.hpp"
#include "branchlab/spine/kernel.hpp"
#include "branchlab/tree/tree_shape.hpp"

namespace branchlab {

// Powers of a fixed square matrix, computed once and shared between shapes. Growth is
// serialised; returned references stay valid for the lifetime of the cache.
class MatrixPowerCache {
 public:
  explicit MatrixPowerCache(Eigen::MatrixXd base);
  void reserve(int maxExponent) const { power(maxExponent); }
  const Eigen::MatrixXd& power(int n) const;
  int maxExponent() const;

 private:
  Eigen::MatrixXd base_;
  mutable std::deque<Eigen::MatrixXd> powers_;
  mutable std::mutex mu_;
};

// Exact expectation of F (optionally times the bias term) under the tree-indexed chain
// on the shape started from x0. Interior marks are summed out by matrix powers; only
// the types of the root segment end, branch points and leaves are enumerated.
class QEvaluator {
 public:
  QEvaluator(const SpineKernel& kernel, bool withBias);

  void reserve(int maxExponent) const {
    cache_.reserve(maxExponent);
    plain_.reserve(maxExponent);
  }
  double expectation(const TreeShape& shape, int x0, const ShapeFunctional& f) const;
  // Throws InteriorMarksRequired for a history functional.
  double expectation(const TreeShape& shape, int x0, const Functional& f) const;

  const SpineKernel& kernel() const { return kernel_; }
  bool withBias() const { return withBias_; }

 private:
  const SpineKernel& kernel_;
  bool withBias_;
  MatrixPowerCache cache_;  // powers of the biased segment matrix B
  MatrixPowerCache plain_;  // powers of the transition matrix P
};

double qExpectation(const SpineKernel& kernel, const TreeShape& shape, int x0, const Functional& f, bool withBias);

}  // namespace branchlab
