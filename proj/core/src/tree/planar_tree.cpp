#include "branchlab/tree/planar_tree.hpp"

#include <algorithm>
#include <functional>

#include "branchlab/errors.hpp"

namespace branchlab {

PlanarTree::PlanarTree() : PlanarTree(std::map<Vertex, int>{{Vertex{}, 0}}) {}

PlanarTree::PlanarTree(std::map<Vertex, int> degrees) : degree_(std::move(degrees)) { refresh(); }

void PlanarTree::refresh() {
  leaves_.clear();
  height_ = 0;
  for (const auto& [v, d] : degree_) {
    if (d == 0) leaves_.push_back(v);
    height_ = std::max(height_, static_cast<int>(v.generation()));
  }
}

PlanarTree PlanarTree::fromVertices(const std::set<Vertex>& vertices) {
  std::map<Vertex, int> deg;
  for (const auto& v : vertices) deg.emplace(v, 0);
  for (const auto& v : vertices) {
    if (v.isRoot()) continue;
    auto it = deg.find(v.parent());
    if (it == deg.end()) throw InvalidInput("vertex set is not prefix-closed at " + v.toString());
    it->second = std::max(it->second, v.word().back());
  }
  PlanarTree t(std::move(deg));
  t.validate();
  return t;
}

PlanarTree PlanarTree::fromDegrees(const std::map<Vertex, int>& degrees) {
  PlanarTree t(degrees);
  t.validate();
  return t;
}

PlanarTree PlanarTree::path(int length) {
  if (length < 0) throw InvalidInput("negative path length");
  std::map<Vertex, int> deg;
  std::vector<int> w;
  for (int i = 0; i <= length; ++i) {
    deg.emplace(Vertex(w), i < length ? 1 : 0);
    w.push_back(1);
  }
  return PlanarTree(std::move(deg));
}

PlanarTree PlanarTree::parse(const std::string& s) {
  std::map<Vertex, int> deg;
  std::size_t pos = 0;
  std::function<void(const Vertex&)> node = [&](const Vertex& v) {
    if (pos >= s.size() || s[pos] != '(') throw InvalidInput("malformed tree string: " + s);
    ++pos;
    int d = 0;
    while (pos < s.size() && s[pos] == '(') node(v.child(++d));
    if (pos >= s.size() || s[pos] != ')') throw InvalidInput("malformed tree string: " + s);
    ++pos;
    deg[v] = d;
  };
  node(Vertex{});
  if (pos != s.size()) throw InvalidInput("trailing characters in tree string: " + s);
  return PlanarTree(std::move(deg));
}

int PlanarTree::degree(const Vertex& v) const {
  auto it = degree_.find(v);
  if (it == degree_.end()) throw InvalidInput("vertex " + v.toString() + " not in tree");
  return it->second;
}

std::vector<Vertex> PlanarTree::children(const Vertex& v) const {
  std::vector<Vertex> c;
  const int d = degree(v);
  for (int i = 1; i <= d; ++i) c.push_back(v.child(i));
  return c;
}

std::vector<Vertex> PlanarTree::vertices() const {
  std::vector<Vertex> out;
  out.reserve(degree_.size());
  for (const auto& kv : degree_) out.push_back(kv.first);
  return out;
}

std::vector<Vertex> PlanarTree::branchPoints() const {
  std::vector<Vertex> out;
  for (const auto& [v, d] : degree_)
    if (d >= 2) out.push_back(v);
  return out;
}

std::string PlanarTree::toString() const {
  std::string out;
  std::function<void(const Vertex&)> emit = [&](const Vertex& v) {
    out += '(';
    const int d = degree_.at(v);
    for (int i = 1; i <= d; ++i) emit(v.child(i));
    out += ')';
  };
  emit(Vertex{});
  return out;
}

void PlanarTree::validate() const {
  if (degree_.empty() || !degree_.begin()->first.isRoot()) throw InvalidInput("tree lacks a root");
  std::size_t edges = 0;
  for (const auto& [v, d] : degree_) {
    if (d < 0) throw InvalidInput("negative degree at " + v.toString());
    if (!v.isRoot()) {
      auto it = degree_.find(v.parent());
      if (it == degree_.end()) throw InvalidInput("not prefix-closed at " + v.toString());
      if (v.word().back() > it->second) throw InvalidInput("child index exceeds parent degree at " + v.toString());
    }
    for (int i = 1; i <= d; ++i)
      if (!degree_.count(v.child(i))) throw InvalidInput("children not contiguous below " + v.toString());
    edges += static_cast<std::size_t>(d);
  }
  if (edges + 1 != degree_.size()) throw InvalidInput("degree sum does not match vertex count");
  long excess = 1;
  for (const auto& [v, d] : degree_)
    if (d >= 2) excess += d - 1;
  if (static_cast<long>(leaves_.size()) != excess) throw InvalidInput("leaf count identity violated");
}

SpannedTree subtreeSpanned(const PlanarTree& tree, const std::vector<Vertex>& tuple) {
  std::set<Vertex> span;
  for (const auto& v : tuple) {
    if (!tree.contains(v)) throw InvalidInput("vertex " + v.toString() + " not in tree");
    for (std::size_t g = 0; g <= v.generation(); ++g) span.insert(v.prefix(g));
  }
  if (span.empty()) span.insert(Vertex{});

  // Children of u inside the span, in planar order, get relabelled 1, 2, ...
  std::map<Vertex, Vertex> relabel;
  std::map<Vertex, int> deg;
  relabel[Vertex{}] = Vertex{};
  deg[Vertex{}] = 0;
  for (const auto& u : span) {  // lexicographic: parents and elder siblings first
    if (u.isRoot()) continue;
    const Vertex& pu = relabel.at(u.parent());
    const int idx = ++deg[pu];
    relabel[u] = pu.child(idx);
    deg.emplace(relabel[u], 0);
  }
  SpannedTree out;
  out.tree = PlanarTree::fromDegrees(deg);
  for (const auto& [orig, lab] : relabel) out.origin[lab] = orig;
  for (const auto& v : tuple) out.image.push_back(relabel.at(v));
  out.fullRank = tuple.empty() ? false : out.tree.leafCount() == tuple.size();
  return out;
}

namespace {

PlanarTree subtreeAt(const PlanarTree& tree, const Vertex& w) {
  std::map<Vertex, int> deg;
  auto it = tree.degrees().lower_bound(w);
  for (; it != tree.degrees().end() && w.isAncestorOf(it->first); ++it) {
    const auto& word = it->first.word();
    deg.emplace(Vertex(std::vector<int>(word.begin() + static_cast<std::ptrdiff_t>(w.generation()), word.end())),
                it->second);
  }
  return PlanarTree::fromDegrees(deg);
}

}  // namespace

FirstBranch decomposeFirstBranch(const PlanarTree& tree) {
  const auto& leaves = tree.leaves();
  if (leaves.size() < 2) throw InvalidInput("first-branch decomposition needs at least two leaves");
  const Vertex w = mrca(leaves.front(), leaves.back());
  FirstBranch fb;
  fb.stem = static_cast<int>(w.generation());
  for (const auto& c : tree.children(w)) {
    fb.subtrees.push_back(subtreeAt(tree, c));
    fb.blocks.push_back(static_cast<int>(fb.subtrees.back().leafCount()));
  }
  return fb;
}

PlanarTree composeFirstBranch(int stem, const std::vector<PlanarTree>& subtrees) {
  if (stem < 0) throw InvalidInput("negative stem");
  if (subtrees.size() < 2) throw InvalidInput("a first branch point needs at least two subtrees");
  std::map<Vertex, int> deg;
  std::vector<int> w;
  for (int i = 0; i < stem; ++i) {
    deg.emplace(Vertex(w), 1);
    w.push_back(1);
  }
  const Vertex branch(w);
  deg.emplace(branch, static_cast<int>(subtrees.size()));
  for (std::size_t i = 0; i < subtrees.size(); ++i) {
    const Vertex c = branch.child(static_cast<int>(i) + 1);
    for (const auto& [v, d] : subtrees[i].degrees()) deg.emplace(c.concat(v), d);
  }
  return PlanarTree::fromDegrees(deg);
}

std::uint64_t countDeficientTuples(const PlanarTree& tree, int k) {
  if (k < 1) throw InvalidInput("k must be positive");
  using Poly = std::vector<std::uint64_t>;  // coefficients up to z^k
  const std::size_t K = static_cast<std::size_t>(k);
  std::map<Vertex, Poly> poly;
  const auto& deg = tree.degrees();
  for (auto it = deg.rbegin(); it != deg.rend(); ++it) {  // children before parents
    Poly p(K + 1, 0);
    p[0] = 1;
    for (int i = 1; i <= it->second; ++i) {
      const Poly& c = poly.at(it->first.child(i));
      Poly q(K + 1, 0);
      for (std::size_t a = 0; a <= K; ++a)
        for (std::size_t b = 0; a + b <= K; ++b) q[a + b] += p[a] * c[b];
      p = std::move(q);
    }
    p[1] += 1;  // the antichain {v}
    poly[it->first] = std::move(p);
  }
  const std::uint64_t antichains = poly.at(Vertex{})[K];
  std::uint64_t total = 1, fact = 1;
  for (int i = 0; i < k; ++i) total *= tree.size();
  for (int i = 2; i <= k; ++i) fact *= static_cast<std::uint64_t>(i);
  return total - fact * antichains;
}

double deficientTupleBound(const PlanarTree& tree, int k) {
  double fact = 1, pw = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  for (int i = 1; i < k; ++i) pw *= static_cast<double>(tree.size());
  return fact * pw * (tree.height() + 1);
}

}  // namespace branchlab
