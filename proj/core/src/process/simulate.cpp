#include "branchlab/process/simulate.hpp"

#include <algorithm>

#include "branchlab/errors.hpp"

namespace branchlab {

FlatPopulation simulateFlat(const Model& model, int x0, int nGen, Rng& rng) {
  if (x0 < 0 || x0 >= static_cast<int>(model.typeCount())) throw InvalidInput("unknown start type");
  if (nGen < 0) throw InvalidInput("negative generation count");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  FlatPopulation pop;
  pop.nodes.push_back({-1, x0, 0, -1, 0});
  std::vector<int> brood;
  for (std::size_t i = 0; i < pop.nodes.size(); ++i) {
    if (pop.nodes[i].generation >= nGen) continue;
    const auto& law = model.offspring(pop.nodes[i].type);
    double u = unif(rng);
    std::size_t a = 0;
    while (a + 1 < law.size() && u >= law[a].probability) u -= law[a++].probability;
    while (law[a].probability == 0.0 && a > 0) --a;
    brood = law[a].children;
    std::shuffle(brood.begin(), brood.end(), rng);
    pop.nodes[i].firstChild = static_cast<int>(pop.nodes.size());
    pop.nodes[i].childCount = static_cast<int>(brood.size());
    const int g = pop.nodes[i].generation + 1;
    for (int c : brood) pop.nodes.push_back({static_cast<int>(i), c, g, -1, 0});
  }
  return pop;
}

MarkedTree simulate(const Model& model, int x0, int nGen, std::uint64_t seed) {
  Rng rng(seed);
  return simulateFlat(model, x0, nGen, rng).toMarkedTree();
}

}  // namespace branchlab
