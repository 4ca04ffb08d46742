#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "branchlab/tree/vertex.hpp"

namespace branchlab {

// Finite rooted planar tree stored as a prefix-closed vertex set with out-degrees.
class PlanarTree {
 public:
  // Single root.
  PlanarTree();

  static PlanarTree fromVertices(const std::set<Vertex>& vertices);
  static PlanarTree fromDegrees(const std::map<Vertex, int>& degrees);
  static PlanarTree path(int length);
  // Canonical parenthesised form, e.g. "(()())" for the cherry.
  static PlanarTree parse(const std::string& canonical);

  bool contains(const Vertex& v) const { return degree_.count(v) != 0; }
  int degree(const Vertex& v) const;
  std::vector<Vertex> children(const Vertex& v) const;

  // Vertices in lexicographic order (= depth-first preorder).
  std::vector<Vertex> vertices() const;
  const std::map<Vertex, int>& degrees() const { return degree_; }
  const std::vector<Vertex>& leaves() const { return leaves_; }
  std::vector<Vertex> branchPoints() const;

  std::size_t size() const { return degree_.size(); }
  std::size_t leafCount() const { return leaves_.size(); }
  int height() const { return height_; }

  std::string toString() const;

  // Throws InvalidInput on violated prefix-closure, child contiguity or the
  // leaf/branch-point count identity.
  void validate() const;

  bool operator==(const PlanarTree& other) const { return degree_ == other.degree_; }

 private:
  explicit PlanarTree(std::map<Vertex, int> degrees);
  void refresh();

  std::map<Vertex, int> degree_;
  std::vector<Vertex> leaves_;
  int height_ = 0;
};

// Tree spanned by a tuple of vertices (union of their ancestral lines), relabelled
// canonically. `fullRank` is false when fewer than k leaves remain, i.e. the tuple has
// repeats or comparable entries.
struct SpannedTree {
  PlanarTree tree;
  bool fullRank = false;
  // origin[u] is the vertex of the original tree relabelled as u.
  std::map<Vertex, Vertex> origin;
  // image[i] is the relabelled position of the i-th tuple entry.
  std::vector<Vertex> image;
};

SpannedTree subtreeSpanned(const PlanarTree& tree, const std::vector<Vertex>& tuple);

// First-branch decomposition of a tree with at least two leaves.
struct FirstBranch {
  int stem = 0;                        // generation of the first branch point w
  std::vector<int> blocks;             // leaves per subtree, a composition of k
  std::vector<PlanarTree> subtrees;    // S_i = {v : w i v in tree}
};

FirstBranch decomposeFirstBranch(const PlanarTree& tree);
PlanarTree composeFirstBranch(int stem, const std::vector<PlanarTree>& subtrees);

// Number of k-tuples (with repetition) of vertices whose spanned tree has fewer than
// k leaves; equals |T|^k - k! * (#antichains of size k).
std::uint64_t countDeficientTuples(const PlanarTree& tree, int k);
// Upper bound k! * |T|^{k-1} * (height+1).
double deficientTupleBound(const PlanarTree& tree, int k);

}  // namespace branchlab
