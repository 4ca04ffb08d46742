#include "branchlab/spine/functional.hpp"

namespace branchlab {

double evaluate(const Functional& f, const MarkedTree& spanned) {
  if (const auto* s = std::get_if<ShapeFunctional>(&f)) return (*s)(markedShapeOf(spanned));
  return std::get<HistoryFunctional>(f)(spanned);
}

namespace functionals {

ShapeFunctional one() {
  return [](const MarkedShape&) { return 1.0; };
}

ShapeFunctional zero() {
  return [](const MarkedShape&) { return 0.0; };
}

ShapeFunctional shapeIs(const TreeShape& shape) {
  return [shape](const MarkedShape& ms) { return ms.shape == shape ? 1.0 : 0.0; };
}

ShapeFunctional heightAtMost(int R) {
  return [R](const MarkedShape& ms) {
    for (int l : ms.shape.l)
      if (l > R) return 0.0;
    return 1.0;
  };
}

ShapeFunctional leafWeights(std::vector<double> w) {
  return [w = std::move(w)](const MarkedShape& ms) {
    double v = 1;
    for (int t : ms.leafTypes) v *= w.at(static_cast<std::size_t>(t));
    return v;
  };
}

ShapeFunctional product(ShapeFunctional a, ShapeFunctional b) {
  return [a = std::move(a), b = std::move(b)](const MarkedShape& ms) {
    const double x = a(ms);
    return x == 0.0 ? 0.0 : x * b(ms);
  };
}

}  // namespace functionals

}  // namespace branchlab
