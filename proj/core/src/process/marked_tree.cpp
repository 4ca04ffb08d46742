#include "branchlab/process/marked_tree.hpp"

#include "branchlab/errors.hpp"

namespace branchlab {

int MarkedTree::mark(const Vertex& v) const {
  auto it = marks.find(v);
  if (it == marks.end()) throw InvalidInput("no mark at " + v.toString());
  return it->second;
}

void MarkedTree::validate() const {
  tree.validate();
  if (marks.size() != tree.size()) throw InvalidInput("marks must cover exactly the vertex set");
  for (const auto& kv : marks)
    if (!tree.contains(kv.first)) throw InvalidInput("mark on vertex outside tree: " + kv.first.toString());
}

MarkedShape markedShapeOf(const MarkedTree& t) {
  MarkedShape ms;
  ms.shape = encodeHeights(t.tree);
  for (const auto& v : t.tree.leaves()) ms.leafTypes.push_back(t.mark(v));
  for (const auto& v : t.tree.branchPoints()) ms.branchTypes.push_back(t.mark(v));
  return ms;
}

SpannedMarkedTree spannedMarkedTree(const MarkedTree& t, const std::vector<Vertex>& tuple) {
  SpannedTree s = subtreeSpanned(t.tree, tuple);
  SpannedMarkedTree out;
  out.fullRank = s.fullRank;
  out.tree.tree = std::move(s.tree);
  for (const auto& [lab, orig] : s.origin) out.tree.marks[lab] = t.mark(orig);
  return out;
}

std::vector<int> FlatPopulation::generationSizes(int maxGeneration) const {
  std::vector<int> z(static_cast<std::size_t>(maxGeneration) + 1, 0);
  for (const auto& n : nodes)
    if (n.generation <= maxGeneration) ++z[static_cast<std::size_t>(n.generation)];
  return z;
}

MarkedTree FlatPopulation::toMarkedTree() const {
  std::vector<Vertex> words(nodes.size());
  std::map<Vertex, int> deg;
  MarkedTree t;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (n.parent >= 0) {
      const auto& p = nodes[static_cast<std::size_t>(n.parent)];
      words[i] = words[static_cast<std::size_t>(n.parent)].child(static_cast<int>(i) - p.firstChild + 1);
    }
    deg[words[i]] = n.childCount;
    t.marks[words[i]] = n.type;
  }
  t.tree = PlanarTree::fromDegrees(deg);
  return t;
}

}  // namespace branchlab
