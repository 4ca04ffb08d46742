#include "branchlab/process/survival.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "branchlab/errors.hpp"
#include "branchlab/process/criticality.hpp"

namespace branchlab {

namespace {

// One step on q = 1 - s: q'(x) = sum_a p_a (1 - prod_c (1 - q(c))). Working with q keeps
// full relative precision when survival probabilities are tiny.
void step(const Model& model, std::vector<double>& q, std::vector<double>& scratch) {
  for (std::size_t x = 0; x < q.size(); ++x) {
    double v = 0;
    for (const auto& a : model.offspring(static_cast<int>(x))) {
      double logs = 0;
      for (int c : a.children) logs += std::log1p(-q[static_cast<std::size_t>(c)]);
      v += a.probability * -std::expm1(logs);
    }
    scratch[x] = v;
  }
  q.swap(scratch);
}

}  // namespace

std::vector<double> survivalProbabilities(const Model& model, int n) {
  if (n < 0) throw InvalidInput("negative generation");
  std::vector<double> q(model.typeCount(), 1.0), scratch(q.size());
  for (int g = 0; g < n; ++g) step(model, q, scratch);
  return q;
}

double extinctionBy(const Model& model, int x0, int n) {
  return 1.0 - survivalProbabilities(model, n).at(static_cast<std::size_t>(x0));
}

std::vector<KolmogorovRow> kolmogorovProfile(const Model& model, const std::vector<int>& nGrid) {
  const Eigenpair ep = eigenpair(model);
  const double s2 = sigmaSquared(model, ep);
  const bool useLimit = ep.critical() && s2 > 0;
  std::vector<int> grid = nGrid;
  std::sort(grid.begin(), grid.end());
  std::vector<KolmogorovRow> rows;
  std::vector<double> q(model.typeCount(), 1.0), scratch(q.size());
  int at = 0;
  for (int n : grid) {
    if (n < 0) throw InvalidInput("negative generation in grid");
    for (; at < n; ++at) step(model, q, scratch);
    for (std::size_t x = 0; x < q.size(); ++x)
      rows.push_back({n, static_cast<int>(x), n * q[x],
                      useLimit ? 2.0 * ep.h(static_cast<Eigen::Index>(x)) / s2
                               : std::numeric_limits<double>::quiet_NaN()});
  }
  return rows;
}

}  // namespace branchlab
