#include "branchlab/limits/convergence.hpp"

#include <cmath>
#include <limits>

#include "branchlab/errors.hpp"
#include "branchlab/process/criticality.hpp"
#include "branchlab/process/survival.hpp"
#include "branchlab/spine/q_expectation.hpp"

namespace branchlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// sum over leaf-type vectors of prod pi * F
double markAverage(const ContinuousFunctional& F, const ContinuousShape& s, const Eigen::VectorXd& pi) {
  const std::size_t K = s.k();
  const auto E = static_cast<int>(pi.size());
  std::vector<int> x(K, 0);
  double total = 0;
  for (;;) {
    double w = 1;
    for (int t : x) w *= pi(t);
    if (w != 0.0) total += w * F(s, x);
    std::size_t i = 0;
    while (i < K && ++x[i] == E) x[i++] = 0;
    if (i == K) break;
  }
  return total;
}

ConvergenceRow row(int n, double observed, double limit, const char* path) {
  const double rel = std::isnan(limit) ? kNaN : std::abs(observed - limit) / std::abs(limit);
  return {n, observed, limit, rel, path};
}

}  // namespace

ConvergenceReport convergenceReport(const Model& model, const ConvergenceOptions& o) {
  if (o.k < 1) throw InvalidInput("k must be positive");
  if (!o.F && (o.rescaled || o.ultrametric)) throw InvalidInput("convergence report needs a functional");
  const Eigenpair ep = eigenpair(model);
  ConvergenceReport rep;
  rep.perron = ep.perron;
  rep.sigma2 = sigmaSquared(model, ep);
  rep.critical = ep.critical();
  rep.warnings = ep.warnings;
  if (!rep.critical) rep.warnings.push_back("limit columns suppressed for a non-critical model");

  const SpineKernel kernel = SpineKernel::build(model, std::vector<double>(ep.h.data(), ep.h.data() + ep.h.size()));
  const QEvaluator biased(kernel, true);
  const double hx = ep.h(o.x0);
  const double pre = hx * std::pow(rep.sigma2 / 2.0, o.k - 1);
  Integration how = o.limitIntegration;
  if (how.kind == Integration::Kind::Grid && o.k >= 3) how = Integration::monteCarlo(1'000'000, how.seed);
  how.threads = o.threads;
  auto integrand = [&](const ContinuousShape& s) { return markAverage(o.F, s, ep.pi); };

  if (o.rescaled) {
    const double limit = rep.critical ? pre * lambdaIntegral(o.k, integrand, o.R, how).value : kNaN;
    for (int n : o.nGrid)
      rep.rows.push_back(row(n, n * rescaledMoment(biased, o.k, o.F, n, o.x0, o.R, o.threads), limit, "rescaled"));
  }
  if (o.ultrametric) {
    const double limit = rep.critical ? pre * lambdaTildeIntegral(o.k, integrand, how).value : kNaN;
    for (int n : o.nGrid)
      rep.rows.push_back(row(n, n * ultrametricMoment(biased, o.k, o.F, n, o.x0), limit, "ultrametric"));
  }
  if (!o.kolmogorovGrid.empty()) {
    for (const auto& r : kolmogorovProfile(model, o.kolmogorovGrid))
      if (r.type == o.x0) rep.rows.push_back(row(r.n, r.scaled, rep.critical ? r.limit : kNaN, "kolmogorov"));
  }
  return rep;
}

}  // namespace branchlab
