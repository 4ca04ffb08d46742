#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "branchlab/tree/tree_shape.hpp"

namespace branchlab {

// Visits every discrete shape with k leaves and all leaf heights in [0, R], in
// lexicographic order of (l, b). The optional range restricts l_1 to [l1Min, l1Max] so
// that workers can partition the grid.
struct ShapeRange {
  int l1Min = 0;
  int l1Max = -1;  // -1: up to R
};

void forEachShape(int k, int R, const std::function<void(const TreeShape&)>& visit, ShapeRange range = {});
std::vector<TreeShape> enumerateShapes(int k, int R);

// Closed form sum over l in [0,R]^k of prod_i min(l_i, l_{i+1}) (R+1 when k = 1).
std::uint64_t countShapes(int k, int R);

}  // namespace branchlab
