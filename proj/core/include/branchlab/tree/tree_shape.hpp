#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "branchlab/errors.hpp"
#include "branchlab/tree/planar_tree.hpp"

namespace branchlab {

// Leaf-height / branch-height encoding of a planar tree with k leaves: l[i] is the
// height of the i-th leaf in lexicographic order, b[i] the height of the most recent
// common ancestor of leaves i and i+1. Valid iff b[i] < min(l[i], l[i+1]).
template <class T>
struct BasicTreeShape {
  std::vector<T> l;
  std::vector<T> b;

  std::size_t k() const { return l.size(); }

  bool valid() const {
    if (l.empty() || b.size() + 1 != l.size()) return false;
    for (T x : l)
      if (!(x >= T(0))) return false;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!(b[i] >= T(0)) || !(b[i] < l[i]) || !(b[i] < l[i + 1])) return false;
    return true;
  }
  void validate() const {
    if (!valid()) throw InvalidInput("invalid tree shape: need |b| = |l|-1 and 0 <= b_i < min(l_i, l_{i+1})");
  }
  T height() const {
    T h = l.front();
    for (T x : l) h = x > h ? x : h;
    return h;
  }

  bool operator==(const BasicTreeShape&) const = default;
};

using TreeShape = BasicTreeShape<int>;
using ContinuousShape = BasicTreeShape<double>;

PlanarTree decodeHeights(const TreeShape& shape);
TreeShape encodeHeights(const PlanarTree& tree);

ContinuousShape scaleShape(const TreeShape& shape, double factor);

// Shape-level first-branch decomposition: stem = min b, blocks split where b_i == stem,
// sub-shapes measured from the children of the branch point (heights - stem - 1).
struct ShapeDecomposition {
  int stem = 0;
  std::vector<int> blocks;
  std::vector<TreeShape> parts;
};
ShapeDecomposition decomposeShape(const TreeShape& shape);
TreeShape composeShape(int stem, const std::vector<TreeShape>& parts);

// Number of distinct branch points (vertices of out-degree >= 2) of the decoded tree.
int branchPointCount(const TreeShape& shape);

std::string shapeToString(const TreeShape& shape);

}  // namespace branchlab
