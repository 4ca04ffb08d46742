#pragma once

#include <vector>

#include "branchlab/limits/integrals.hpp"
#include "branchlab/mmm/monomial.hpp"

namespace branchlab {

struct LimitQuery {
  int k = 1;
  double sigma2 = 1;
  std::vector<double> pi{1.0};  // mark law
  MonomialFunction phi;         // must vanish once a leaf is farther than R from the root
  double R = 1;
};

// sum over relabelings sigma of the k points, expectation over i.i.d. pi marks.
double symmetrisedMarkAverage(const LimitQuery& q, const DistanceMatrix& d);

// (Sigma^2/2)^{k-1} sum_sigma int E_pi phi_sigma(D(theta), X) Lambda_k(d theta)
Estimate crtMoment(const LimitQuery& q, const Integration& how);
// (Sigma^2/2)^k sum_sigma int_{[0,1]^{k-1}} E_pi phi_sigma(D(1, b), X) db
Estimate cppMoment(const LimitQuery& q, const Integration& how);

}  // namespace branchlab
