#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "branchlab/tree/tree_shape.hpp"

namespace branchlab {

// Symmetric (k+1)x(k+1) matrix; index 0 is the root.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    d_[i * n_ + j] = v;
    d_[j * n_ + i] = v;
  }
  const std::vector<double>& data() const { return d_; }

  // Zero diagonal, symmetry, nonnegativity, triangle inequality.
  bool isValid(double tol = 1e-12) const;

  // Relabel points: result(i,j) = (*this)(perm[i], perm[j]).
  DistanceMatrix permuted(const std::vector<std::size_t>& perm) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

enum class DistanceConvention {
  Graph,      // D_ij = l_i + l_j - 2 min(b_i..b_{j-1}); graph distance in the decoded tree
  AsPrinted,  // D_ij = l_i + l_j - min(b_i..b_{j-1})
};

template <class T>
DistanceMatrix distanceMatrix(const BasicTreeShape<T>& shape,
                              DistanceConvention convention = DistanceConvention::Graph) {
  shape.validate();
  const std::size_t k = shape.k();
  const double factor = convention == DistanceConvention::Graph ? 2.0 : 1.0;
  DistanceMatrix d(k + 1);
  for (std::size_t j = 0; j < k; ++j) d.set(0, j + 1, static_cast<double>(shape.l[j]));
  for (std::size_t i = 0; i < k; ++i) {
    double m = 0;
    for (std::size_t j = i + 1; j < k; ++j) {
      m = j == i + 1 ? static_cast<double>(shape.b[i]) : std::min(m, static_cast<double>(shape.b[j - 1]));
      d.set(i + 1, j + 1, static_cast<double>(shape.l[i]) + static_cast<double>(shape.l[j]) - factor * m);
    }
  }
  return d;
}

}  // namespace branchlab
