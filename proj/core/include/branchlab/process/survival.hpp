#pragma once

#include <vector>

#include "branchlab/process/model.hpp"

namespace branchlab {

// P_x(Z_n > 0) for every type x, by the exact extinction recursion.
std::vector<double> survivalProbabilities(const Model& model, int n);
// P_{x0}(Z_n = 0).
double extinctionBy(const Model& model, int x0, int n);

struct KolmogorovRow {
  int n = 0;
  int type = 0;
  double scaled = 0;  // n P_x(Z_n > 0)
  double limit = 0;   // 2 h(x) / Sigma^2; NaN when the model is not critical
};

std::vector<KolmogorovRow> kolmogorovProfile(const Model& model, const std::vector<int>& nGrid);

}  // namespace branchlab
