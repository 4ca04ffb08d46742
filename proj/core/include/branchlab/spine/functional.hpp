#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "branchlab/process/marked_tree.hpp"

namespace branchlab {

// Depends on the shape and on leaf and branch-point types only.
using ShapeFunctional = std::function<double(const MarkedShape&)>;
// Depends on the whole marked spanned tree, interior marks included.
using HistoryFunctional = std::function<double(const MarkedTree&)>;
using Functional = std::variant<ShapeFunctional, HistoryFunctional>;

double evaluate(const Functional& f, const MarkedTree& spanned);

namespace functionals {

ShapeFunctional one();
ShapeFunctional zero();
ShapeFunctional shapeIs(const TreeShape& shape);
// 1{every leaf height <= R}
ShapeFunctional heightAtMost(int R);
// prod_i w(leaf type i)
ShapeFunctional leafWeights(std::vector<double> w);
ShapeFunctional product(ShapeFunctional a, ShapeFunctional b);

}  // namespace functionals

}  // namespace branchlab
