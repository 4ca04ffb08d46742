#include "branchlab/tree/distance_matrix.hpp"

#include <cmath>

#include "branchlab/errors.hpp"

namespace branchlab {

bool DistanceMatrix::isValid(double tol) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (std::abs((*this)(i, i)) > tol) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      const double dij = (*this)(i, j);
      if (dij < -tol || std::abs(dij - (*this)(j, i)) > tol) return false;
      for (std::size_t m = 0; m < n_; ++m)
        if (dij > (*this)(i, m) + (*this)(m, j) + tol) return false;
    }
  }
  return true;
}

DistanceMatrix DistanceMatrix::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw InvalidInput("permutation size mismatch");
  DistanceMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.d_[i * n_ + j] = (*this)(perm[i], perm[j]);
  return out;
}

}  // namespace branchlab
