#include "branchlab/moments/product_functional.hpp"

#include "branchlab/errors.hpp"

namespace branchlab {

namespace {

MarkedShape sliceOf(const MarkedShape& ms, const TreeShape& part, std::size_t& leafPos, std::size_t& branchPos) {
  MarkedShape s;
  s.shape = part;
  for (std::size_t i = 0; i < part.k(); ++i) s.leafTypes.push_back(ms.leafTypes.at(leafPos++));
  const int nb = branchPointCount(part);
  for (int i = 0; i < nb; ++i) s.branchTypes.push_back(ms.branchTypes.at(branchPos++));
  return s;
}

}  // namespace

double ProductFunctional::operator()(const MarkedShape& ms) const {
  if (static_cast<int>(ms.shape.k()) != k) return 0.0;
  if (k == 1) return leaf(ms.shape.l[0], ms.leafTypes.at(0));
  const ShapeDecomposition d = decomposeShape(ms.shape);
  if (d.blocks != composition) return 0.0;
  double v = stem(d.stem, ms.branchTypes.at(0));
  std::size_t leafPos = 0, branchPos = 1;
  for (std::size_t i = 0; i < d.parts.size() && v != 0.0; ++i) {
    const MarkedShape sub = sliceOf(ms, d.parts[i], leafPos, branchPos);
    v *= evaluate(block(d.stem, i), sub);
  }
  return v;
}

double evaluate(const ProductSum& f, const MarkedShape& ms) {
  double v = 0;
  for (const auto& p : f) v += p(ms);
  return v;
}

namespace {

void compositions(int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (cur.size() >= 2) out.push_back(cur);
    return;
  }
  for (int first = 1; first <= k; ++first) {
    cur.push_back(first);
    compositions(k - first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ProductSum heightIndicatorProducts(int k, int R, std::vector<double> w) {
  if (k < 1) throw InvalidInput("k must be positive");
  ProductSum out;
  if (R < 0) return out;
  if (k == 1) {
    ProductFunctional p;
    p.k = 1;
    p.supportHeight = R;
    p.leaf = [R, w](int h, int t) { return h <= R ? w.at(static_cast<std::size_t>(t)) : 0.0; };
    out.push_back(std::move(p));
    return out;
  }
  std::vector<int> cur;
  std::vector<std::vector<int>> comps;
  compositions(k, cur, comps);
  for (auto& c : comps) {
    ProductFunctional p;
    p.k = k;
    p.supportHeight = R;
    p.composition = c;
    p.stem = [R](int n, int) { return n <= R - 1 ? 1.0 : 0.0; };
    p.block = [R, w, c](int n, std::size_t i) { return heightIndicatorProducts(c.at(i), R - n - 1, w); };
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace branchlab
