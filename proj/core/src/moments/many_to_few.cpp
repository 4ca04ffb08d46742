#include "branchlab/moments/moments.hpp"

#include "branchlab/errors.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/tree/enumerate.hpp"

namespace branchlab {

double momentManyToFew(const QEvaluator& biased, const MomentQuery& q, unsigned threads) {
  if (!biased.withBias()) throw InvalidInput("many-to-few needs the biased evaluator");
  if (q.k < 1 || q.supportRadius < 0) throw InvalidInput("invalid moment query");
  if (!std::holds_alternative<ShapeFunctional>(q.F)) throw InteriorMarksRequired();
  const auto& F = std::get<ShapeFunctional>(q.F);
  biased.reserve(q.supportRadius);
  const std::size_t blocks = static_cast<std::size_t>(q.supportRadius) + 1;
  std::vector<double> part(blocks, 0.0);
  parallelBlocks(blocks, threads, [&](std::size_t b) {
    double s = 0;
    const int l1 = static_cast<int>(b);
    forEachShape(
        q.k, q.supportRadius, [&](const TreeShape& shape) { s += biased.expectation(shape, q.x0, F); },
        ShapeRange{l1, l1});
    part[b] = s;
  });
  double total = 0;
  for (double v : part) total += v;
  return biased.kernel().psi(q.x0) * total;
}

double momentManyToFew(const SpineKernel& kernel, const MomentQuery& q, unsigned threads) {
  QEvaluator biased(kernel, true);
  return momentManyToFew(biased, q, threads);
}

}  // namespace branchlab
