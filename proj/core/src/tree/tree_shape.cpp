#include "branchlab/tree/tree_shape.hpp"

#include <algorithm>
#include <map>

namespace branchlab {

PlanarTree decodeHeights(const TreeShape& shape) {
  shape.validate();
  std::map<Vertex, int> deg;
  auto grow = [&](Vertex v, int toHeight) {
    // v is the first vertex of a fresh branch; extend it with first children.
    while (static_cast<int>(v.generation()) < toHeight) {
      deg[v] = 1;
      v = v.child(1);
    }
    deg[v] = 0;
    return v;
  };
  Vertex last = grow(Vertex{}, shape.l[0]);
  for (std::size_t i = 0; i + 1 < shape.k(); ++i) {
    // Glue a branch of length l_{i+1} - b_i at the ancestor of the last leaf at height b_i.
    const Vertex w = last.prefix(static_cast<std::size_t>(shape.b[i]));
    const int d = ++deg.at(w);
    last = grow(w.child(d), shape.l[i + 1]);
  }
  return PlanarTree::fromDegrees(deg);
}

TreeShape encodeHeights(const PlanarTree& tree) {
  const auto& leaves = tree.leaves();
  TreeShape s;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    s.l.push_back(static_cast<int>(leaves[i].generation()));
    if (i + 1 < leaves.size()) s.b.push_back(static_cast<int>(mrca(leaves[i], leaves[i + 1]).generation()));
  }
  return s;
}

ContinuousShape scaleShape(const TreeShape& shape, double factor) {
  ContinuousShape c;
  for (int x : shape.l) c.l.push_back(x * factor);
  for (int x : shape.b) c.b.push_back(x * factor);
  return c;
}

ShapeDecomposition decomposeShape(const TreeShape& shape) {
  shape.validate();
  if (shape.k() < 2) throw InvalidInput("first-branch decomposition needs at least two leaves");
  ShapeDecomposition d;
  d.stem = *std::min_element(shape.b.begin(), shape.b.end());
  const int off = d.stem + 1;
  TreeShape cur;
  for (std::size_t i = 0; i < shape.k(); ++i) {
    cur.l.push_back(shape.l[i] - off);
    if (i + 1 == shape.k() || shape.b[i] == d.stem) {
      d.blocks.push_back(static_cast<int>(cur.l.size()));
      d.parts.push_back(std::move(cur));
      cur = TreeShape{};
    } else {
      cur.b.push_back(shape.b[i] - off);
    }
  }
  return d;
}

TreeShape composeShape(int stem, const std::vector<TreeShape>& parts) {
  if (stem < 0) throw InvalidInput("negative stem");
  if (parts.size() < 2) throw InvalidInput("a first branch point needs at least two parts");
  const int off = stem + 1;
  TreeShape s;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    parts[j].validate();
    if (j) s.b.push_back(stem);
    for (std::size_t i = 0; i < parts[j].k(); ++i) {
      s.l.push_back(parts[j].l[i] + off);
      if (i + 1 < parts[j].k()) s.b.push_back(parts[j].b[i] + off);
    }
  }
  return s;
}

int branchPointCount(const TreeShape& shape) {
  if (shape.k() < 2) return 0;
  const auto d = decomposeShape(shape);
  int n = 1;
  for (const auto& p : d.parts) n += branchPointCount(p);
  return n;
}

std::string shapeToString(const TreeShape& shape) {
  auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  return "{\"l\":" + list(shape.l) + ",\"b\":" + list(shape.b) + "}";
}

}  // namespace branchlab
