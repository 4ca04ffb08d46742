#include "branchlab/process/population.hpp"

#include "branchlab/errors.hpp"

namespace branchlab {

double countPopulationOutcomes(const Model& model, int x0, int nGen) {
  const std::size_t n = model.typeCount();
  std::vector<double> c(n, 1.0);
  for (int g = 0; g < nGen; ++g) {
    std::vector<double> next(n, 0.0);
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& a : model.orderedOffspring(static_cast<int>(x))) {
        double prod = 1;
        for (int ch : a.children) prod *= c[static_cast<std::size_t>(ch)];
        next[x] += prod;
      }
    c = std::move(next);
  }
  return c.at(static_cast<std::size_t>(x0));
}

void forEachPopulation(const Model& model, int x0, int nGen,
                       const std::function<void(double, const FlatPopulation&)>& visit, std::uint64_t cap) {
  if (x0 < 0 || x0 >= static_cast<int>(model.typeCount())) throw InvalidInput("unknown start type");
  if (nGen < 0) throw InvalidInput("negative generation count");
  const double estimate = countPopulationOutcomes(model, x0, nGen);
  if (estimate > static_cast<double>(cap)) throw EnumerationCapExceeded(estimate, cap);

  FlatPopulation pop;
  pop.nodes.push_back({-1, x0, 0, -1, 0});
  // Nodes are expanded in breadth-first order; the choice for node i appends its brood
  // and recursion continues with node i+1.
  auto rec = [&](auto&& self, std::size_t i, double p) -> void {
    if (i == pop.nodes.size() || pop.nodes[i].generation >= nGen) {
      visit(p, pop);
      return;
    }
    const std::size_t mark = pop.nodes.size();
    const int g = pop.nodes[i].generation + 1;
    for (const auto& a : model.orderedOffspring(pop.nodes[i].type)) {
      pop.nodes[i].firstChild = static_cast<int>(mark);
      pop.nodes[i].childCount = static_cast<int>(a.children.size());
      for (int c : a.children) pop.nodes.push_back({static_cast<int>(i), c, g, -1, 0});
      self(self, i + 1, p * a.probability);
      pop.nodes.resize(mark);
    }
    pop.nodes[i].firstChild = -1;
    pop.nodes[i].childCount = 0;
  };
  rec(rec, 0, 1.0);
}

std::vector<std::pair<double, MarkedTree>> enumeratePopulation(const Model& model, int x0, int nGen,
                                                               std::uint64_t cap) {
  std::vector<std::pair<double, MarkedTree>> out;
  forEachPopulation(
      model, x0, nGen, [&](double p, const FlatPopulation& pop) { out.emplace_back(p, pop.toMarkedTree()); }, cap);
  return out;
}

}  // namespace branchlab
