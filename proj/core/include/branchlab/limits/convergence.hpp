#pragma once

#include <string>
#include <vector>

#include "branchlab/limits/integrals.hpp"
#include "branchlab/moments/rescaled.hpp"
#include "branchlab/process/model.hpp"

namespace branchlab {

struct ConvergenceRow {
  int n = 0;
  double observed = 0;
  double limit = 0;     // NaN when suppressed
  double relError = 0;  // NaN when suppressed
  std::string path;     // rescaled | ultrametric | kolmogorov
};

struct ConvergenceOptions {
  int k = 1;
  ContinuousFunctional F;
  double R = 1;  // support radius of F in rescaled units
  int x0 = 0;
  std::vector<int> nGrid;
  bool rescaled = true;
  bool ultrametric = true;
  std::vector<int> kolmogorovGrid;  // empty: no Kolmogorov rows
  Integration limitIntegration = Integration::grid(200);
  unsigned threads = 1;
};

struct ConvergenceReport {
  bool critical = false;
  double perron = 0;
  double sigma2 = 0;
  std::vector<ConvergenceRow> rows;
  std::vector<std::string> warnings;
};

// Observed n * (rescaled moment), n * (ultrametric moment) and n P(Z_n > 0) against
// their limits h(x0) (Sigma^2/2)^{k-1} int F d(Lambda_k or its ultrametric version) and
// 2 h(x0) / Sigma^2. Limits are suppressed for non-critical models.
ConvergenceReport convergenceReport(const Model& model, const ConvergenceOptions& options);

}  // namespace branchlab
