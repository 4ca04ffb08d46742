#include "branchlab/moments/moments.hpp"

#include <algorithm>

#include "branchlab/errors.hpp"

namespace branchlab {

double momentBruteforce(const Model& model, const MomentQuery& q, int horizon, std::uint64_t cap) {
  if (q.k < 1) throw InvalidInput("k must be positive");
  if (horizon < q.supportRadius) throw InvalidInput("horizon must cover the support radius");
  const auto k = static_cast<std::size_t>(q.k);
  double total = 0;
  forEachPopulation(
      model, q.x0, horizon,
      [&](double p, const FlatPopulation& pop) {
        const MarkedTree t = pop.toMarkedTree();
        std::vector<Vertex> vs;
        for (const auto& v : t.tree.vertices())
          if (static_cast<int>(v.generation()) <= q.supportRadius) vs.push_back(v);
        if (vs.size() < k) return;
        // All k-subsets, listed in lexicographic order v_1 < ... < v_k.
        std::vector<std::size_t> idx(k);
        std::vector<Vertex> tuple(k);
        double sum = 0;
        auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
          if (pos == k) {
            const SpannedMarkedTree s = spannedMarkedTree(t, tuple);
            if (s.fullRank) sum += evaluate(q.F, s.tree);
            return;
          }
          for (std::size_t i = from; i + (k - pos) <= vs.size(); ++i) {
            // a lexicographic successor that descends from its predecessor can never
            // complete an antichain
            if (pos > 0 && tuple[pos - 1].isAncestorOf(vs[i])) continue;
            tuple[pos] = vs[i];
            self(self, pos + 1, i + 1);
          }
        };
        rec(rec, 0, 0);
        total += p * sum;
      },
      cap);
  return total;
}

double manyToOneBruteforce(const Model& model, int x0, int n, const PathFunctional& f, std::uint64_t cap) {
  double total = 0;
  std::vector<int> path;
  forEachPopulation(
      model, x0, n,
      [&](double p, const FlatPopulation& pop) {
        double sum = 0;
        for (const auto& node : pop.nodes) {
          if (node.generation != n) continue;
          path.assign(static_cast<std::size_t>(n) + 1, 0);
          const FlatPopulation::Node* cur = &node;
          for (int g = n;; --g) {
            path[static_cast<std::size_t>(g)] = cur->type;
            if (cur->parent < 0) break;
            cur = &pop.nodes[static_cast<std::size_t>(cur->parent)];
          }
          sum += f(path);
        }
        total += p * sum;
      },
      cap);
  return total;
}

}  // namespace branchlab
