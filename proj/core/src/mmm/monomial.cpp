#include "branchlab/mmm/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "branchlab/errors.hpp"
#include "branchlab/random.hpp"

namespace branchlab {

namespace {

DistanceMatrix tupleMatrix(const FiniteMmmSpace& s, const std::vector<std::size_t>& pts) {
  DistanceMatrix d(pts.size() + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d.set(0, i + 1, s.distance(s.root(), pts[i]));
    for (std::size_t j = i + 1; j < pts.size(); ++j) d.set(i + 1, j + 1, s.distance(pts[i], pts[j]));
  }
  return d;
}

}  // namespace

MonomialResult monomial(const FiniteMmmSpace& space, int k, const MonomialFunction& phi,
                        const MonomialOptions& options) {
  if (k < 1) throw InvalidInput("monomial order must be positive");
  const auto supp = space.support();
  const auto K = static_cast<std::size_t>(k);
  MonomialResult res;
  if (supp.empty()) return res;

  double tuples = std::pow(static_cast<double>(supp.size()), k);
  std::vector<std::size_t> pts(K);
  std::vector<int> marks(K);
  if (tuples <= static_cast<double>(options.tupleCap)) {
    double total = 0;
    auto rec = [&](auto&& self, std::size_t pos, double w) -> void {
      if (pos == K) {
        total += w * phi(tupleMatrix(space, pts), marks);
        return;
      }
      for (auto i : supp) {
        pts[pos] = i;
        marks[pos] = space.mark(i);
        self(self, pos + 1, w * space.mass(i));
      }
    };
    rec(rec, 0, 1.0);
    res.value = total;
    return res;
  }

  // Stratify on the first coordinate; the remaining ones are drawn from the normalised
  // mass measure.
  res.exact = false;
  std::vector<double> w;
  for (auto i : supp) w.push_back(space.mass(i));
  const double M = std::accumulate(w.begin(), w.end(), 0.0);
  std::discrete_distribution<std::size_t> pick(w.begin(), w.end());
  Rng rng(options.seed);
  const std::size_t m = std::max<std::size_t>(options.samplesPerStratum, 2);
  const double tail = std::pow(M, k - 1);
  double value = 0, var = 0;
  for (std::size_t s = 0; s < supp.size(); ++s) {
    pts[0] = supp[s];
    marks[0] = space.mark(supp[s]);
    double sum = 0, sum2 = 0;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 1; j < K; ++j) {
        pts[j] = supp[pick(rng)];
        marks[j] = space.mark(pts[j]);
      }
      const double v = phi(tupleMatrix(space, pts), marks);
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / static_cast<double>(m);
    const double s2 = std::max(0.0, (sum2 - static_cast<double>(m) * mean * mean) / static_cast<double>(m - 1));
    const double weight = space.mass(supp[s]) * tail;
    value += weight * mean;
    var += weight * weight * s2 / static_cast<double>(m);
  }
  res.value = value;
  res.standardError = std::sqrt(var);
  return res;
}

MonomialDecomposition decomposeMonomial(const MarkedTree& tree, int k, const MonomialFunction& phi, double edgeScale,
                                        double massScale, double phiSup) {
  const FiniteMmmSpace space = treeToMmm(tree, edgeScale, massScale);
  MonomialOptions exhaustive;
  exhaustive.tupleCap = UINT64_MAX;
  MonomialDecomposition out;
  out.total = monomial(space, k, phi, exhaustive).value;

  // Vertices of the space are in lexicographic order (treeToMmm indexes them so).
  const auto verts = tree.tree.vertices();
  const auto K = static_cast<std::size_t>(k);
  std::vector<std::size_t> pick(K);
  std::vector<std::size_t> order(K);
  std::vector<std::size_t> pts(K);
  std::vector<int> marks(K);
  double planar = 0;
  auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
    if (pos == K) {
      std::iota(order.begin(), order.end(), 0);
      do {
        for (std::size_t i = 0; i < K; ++i) {
          pts[i] = pick[order[i]];
          marks[i] = space.mark(pts[i]);
        }
        planar += phi(tupleMatrix(space, pts), marks);
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    for (std::size_t i = from; i < verts.size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < pos && ok; ++j) ok = !verts[pick[j]].comparable(verts[i]);
      if (!ok) continue;
      pick[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  out.planar = planar * std::pow(massScale, k);
  out.deficient = out.total - out.planar;
  out.bound = phiSup * deficientTupleBound(tree.tree, k) * std::pow(massScale, k);
  return out;
}

}  // namespace branchlab
