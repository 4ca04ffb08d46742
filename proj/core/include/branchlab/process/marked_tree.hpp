#pragma once

#include <map>
#include <string>
#include <vector>

#include "branchlab/tree/planar_tree.hpp"
#include "branchlab/tree/tree_shape.hpp"

namespace branchlab {

struct MarkedTree {
  PlanarTree tree;
  std::map<Vertex, int> marks;

  int mark(const Vertex& v) const;
  // Marks defined exactly on the vertex set.
  void validate() const;
};

// What an exact functional may look at: the shape plus the types of the leaves
// (lexicographic order) and of the branch points (lexicographic order).
struct MarkedShape {
  TreeShape shape;
  std::vector<int> leafTypes;
  std::vector<int> branchTypes;
};

MarkedShape markedShapeOf(const MarkedTree& t);

// Spanned subtree of a tuple carrying the marks of the original vertices.
struct SpannedMarkedTree {
  MarkedTree tree;
  bool fullRank = false;
};
SpannedMarkedTree spannedMarkedTree(const MarkedTree& t, const std::vector<Vertex>& tuple);

// Breadth-first population of a single realisation. Children of a node are contiguous.
struct FlatPopulation {
  struct Node {
    int parent = -1;
    int type = 0;
    int generation = 0;
    int firstChild = -1;
    int childCount = 0;
  };
  std::vector<Node> nodes;

  std::vector<int> generationSizes(int maxGeneration) const;
  MarkedTree toMarkedTree() const;
};

}  // namespace branchlab
