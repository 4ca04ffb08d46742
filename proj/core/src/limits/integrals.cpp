#include "branchlab/limits/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "branchlab/errors.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/random.hpp"

namespace branchlab {

namespace {

// Integrates g over [0, side]^dim.
Estimate cube(int dim, double side, const std::function<double(const std::vector<double>&)>& g,
              const Integration& how) {
  const double vol = std::pow(side, dim);
  if (dim == 0) return {g({}), 0.0};
  const auto D = static_cast<std::size_t>(dim);
  if (how.kind == Integration::Kind::Grid) {
    if (how.cellsPerAxis < 1) throw InvalidInput("grid needs at least one cell per axis");
    const double h = side / how.cellsPerAxis;
    const auto c = static_cast<std::size_t>(how.cellsPerAxis);
    // Outer axis split across blocks.
    std::vector<double> part(c, 0.0);
    parallelBlocks(c, how.threads, [&](std::size_t outer) {
      std::vector<std::size_t> idx(D, 0);
      idx[0] = outer;
      std::vector<double> x(D);
      double s = 0;
      for (;;) {
        for (std::size_t d = 0; d < D; ++d) x[d] = (static_cast<double>(idx[d]) + 0.5) * h;
        s += g(x);
        bool done = true;
        for (std::size_t d = D; d-- > 1;) {
          if (++idx[d] < c) {
            done = false;
            break;
          }
          idx[d] = 0;
        }
        if (done) break;
      }
      part[outer] = s;
    });
    double s = 0;
    for (double v : part) s += v;
    return {s * std::pow(h, dim), 0.0};
  }
  if (how.samples < 2) throw InvalidInput("Monte Carlo needs at least two samples");
  const std::size_t blocks = std::min<std::size_t>(64, how.samples);
  std::vector<double> sum(blocks, 0.0), sum2(blocks, 0.0);
  parallelBlocks(blocks, how.threads, [&](std::size_t b) {
    const std::size_t n = how.samples / blocks + (b < how.samples % blocks ? 1 : 0);
    Rng rng(deriveSeed(how.seed, b));
    std::uniform_real_distribution<double> u(0.0, side);
    std::vector<double> x(D);
    double s = 0, s2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& xi : x) xi = u(rng);
      const double v = g(x);
      s += v;
      s2 += v * v;
    }
    sum[b] = s;
    sum2[b] = s2;
  });
  double s = 0, s2 = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    s += sum[b];
    s2 += sum2[b];
  }
  const double N = static_cast<double>(how.samples);
  const double mean = s / N;
  const double var = std::max(0.0, (s2 / N - mean * mean) * N / (N - 1));
  return {vol * mean, vol * std::sqrt(var / N)};
}

}  // namespace

Estimate lambdaIntegral(int k, const ShapeIntegrand& F, double R, const Integration& how) {
  if (k < 1 || !(R >= 0)) throw InvalidInput("lambda integral needs k >= 1 and R >= 0");
  const auto K = static_cast<std::size_t>(k);
  return cube(2 * k - 1, R, [&](const std::vector<double>& x) {
    ContinuousShape s;
    s.l.resize(K);
    s.b.resize(K - 1);
    for (std::size_t i = 0; i < K; ++i) s.l[i] = x[2 * i];
    // A grid cell cut by the boundary b_i = min(l_i, l_{i+1}) has its midpoint on the
    // boundary; count it at half weight, just inside the domain.
    double w = 1;
    for (std::size_t i = 0; i + 1 < K; ++i) {
      s.b[i] = x[2 * i + 1];
      if (s.b[i] == std::min(s.l[i], s.l[i + 1])) {
        s.b[i] = std::nextafter(s.b[i], 0.0);
        w *= 0.5;
      }
    }
    return s.valid() ? w * F(s) : 0.0;
  }, how);
}

Estimate lambdaTildeIntegral(int k, const ShapeIntegrand& F, const Integration& how) {
  if (k < 1) throw InvalidInput("k must be positive");
  const auto K = static_cast<std::size_t>(k);
  return cube(k - 1, 1.0, [&](const std::vector<double>& x) {
    ContinuousShape s;
    s.l.assign(K, 1.0);
    s.b = x;
    return s.valid() ? F(s) : 0.0;
  }, how);
}

}  // namespace branchlab
