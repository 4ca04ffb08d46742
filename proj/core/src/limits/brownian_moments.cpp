#include "branchlab/limits/brownian_moments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "branchlab/errors.hpp"

namespace branchlab {

double symmetrisedMarkAverage(const LimitQuery& q, const DistanceMatrix& d) {
  const auto K = static_cast<std::size_t>(q.k);
  const std::size_t E = q.pi.size();
  if (d.dim() != K + 1) throw InvalidInput("distance matrix does not match k");
  std::vector<std::size_t> sigma(K);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::size_t> perm(K + 1);
  std::vector<int> x(K, 0), xs(K);
  double total = 0;
  do {
    perm[0] = 0;
    for (std::size_t i = 0; i < K; ++i) perm[i + 1] = sigma[i] + 1;
    const DistanceMatrix ds = d.permuted(perm);
    std::fill(x.begin(), x.end(), 0);
    for (;;) {
      double w = 1;
      for (std::size_t i = 0; i < K; ++i) w *= q.pi[static_cast<std::size_t>(x[i])];
      if (w != 0.0) {
        for (std::size_t i = 0; i < K; ++i) xs[i] = x[sigma[i]];
        total += w * q.phi(ds, xs);
      }
      std::size_t i = 0;
      while (i < K && ++x[i] == static_cast<int>(E)) x[i++] = 0;
      if (i == K) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

namespace {

void checkQuery(const LimitQuery& q) {
  if (q.k < 1) throw InvalidInput("k must be positive");
  if (!q.phi) throw InvalidInput("limit query needs a functional");
  if (q.pi.empty()) throw InvalidInput("mark law is empty");
  double s = 0;
  for (double p : q.pi) {
    if (!(p >= 0)) throw InvalidInput("mark law has a negative entry");
    s += p;
  }
  if (std::abs(s - 1.0) > 1e-9) throw InvalidInput("mark law must sum to one");
}

}  // namespace

Estimate crtMoment(const LimitQuery& q, const Integration& how) {
  checkQuery(q);
  const double c = std::pow(q.sigma2 / 2.0, q.k - 1);
  Estimate e = lambdaIntegral(
      q.k, [&](const ContinuousShape& s) { return symmetrisedMarkAverage(q, distanceMatrix(s)); }, q.R, how);
  return {c * e.value, c * e.standardError};
}

Estimate cppMoment(const LimitQuery& q, const Integration& how) {
  checkQuery(q);
  const double c = std::pow(q.sigma2 / 2.0, q.k);
  Estimate e = lambdaTildeIntegral(
      q.k, [&](const ContinuousShape& s) { return symmetrisedMarkAverage(q, distanceMatrix(s)); }, how);
  return {c * e.value, c * e.standardError};
}

}  // namespace branchlab
