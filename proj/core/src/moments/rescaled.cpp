#include "branchlab/moments/rescaled.hpp"

#include <cmath>

#include "branchlab/errors.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/tree/enumerate.hpp"

namespace branchlab {

double rescaledMoment(const QEvaluator& biased, int k, const ContinuousFunctional& F, int n, int x0, double R,
                      unsigned threads) {
  if (!biased.withBias()) throw InvalidInput("rescaled moments need the biased evaluator");
  if (k < 1 || n < 1 || !(R >= 0)) throw InvalidInput("invalid rescaled moment arguments");
  const int maxH = static_cast<int>(std::floor(n * R + 1e-9));
  const double inv = 1.0 / n;
  biased.reserve(maxH);
  const ShapeFunctional wrapped = [&](const MarkedShape& ms) { return F(scaleShape(ms.shape, inv), ms.leafTypes); };
  const std::size_t blocks = static_cast<std::size_t>(maxH) + 1;
  std::vector<double> part(blocks, 0.0);
  parallelBlocks(blocks, threads, [&](std::size_t b) {
    double s = 0;
    const int l1 = static_cast<int>(b);
    forEachShape(k, maxH, [&](const TreeShape& shape) { s += biased.expectation(shape, x0, wrapped); },
                 ShapeRange{l1, l1});
    part[b] = s;
  });
  double total = 0;
  for (double v : part) total += v;
  return biased.kernel().psi(x0) * total * std::pow(static_cast<double>(n), -2.0 * k);
}

double ultrametricMoment(const QEvaluator& biased, int k, const ContinuousFunctional& F, int n, int x0) {
  if (!biased.withBias()) throw InvalidInput("ultrametric moments need the biased evaluator");
  if (k < 1 || n < 1) throw InvalidInput("invalid ultrametric moment arguments");
  biased.reserve(n);
  const double inv = 1.0 / n;
  const ShapeFunctional wrapped = [&](const MarkedShape& ms) { return F(scaleShape(ms.shape, inv), ms.leafTypes); };
  TreeShape s;
  s.l.assign(static_cast<std::size_t>(k), n);
  s.b.assign(static_cast<std::size_t>(k - 1), 0);
  double total = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == s.b.size()) {
      total += biased.expectation(s, x0, wrapped);
      return;
    }
    for (int b = 0; b < n; ++b) {
      s.b[i] = b;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return biased.kernel().psi(x0) * total * std::pow(static_cast<double>(n), -static_cast<double>(k));
}

}  // namespace branchlab
