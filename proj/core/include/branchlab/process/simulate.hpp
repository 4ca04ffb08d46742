#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "branchlab/process/marked_tree.hpp"
#include "branchlab/process/model.hpp"
#include "branchlab/random.hpp"

namespace branchlab {

// Realisation truncated at generation nGen (vertices of generation nGen are present
// but not expanded). Broods are placed in uniformly random order.
FlatPopulation simulateFlat(const Model& model, int x0, int nGen, Rng& rng);
MarkedTree simulate(const Model& model, int x0, int nGen, std::uint64_t seed);

// Monte Carlo only: types live in an arbitrary space handled by the caller's sampler.
template <class T>
struct GenericPopulation {
  std::vector<int> parent;
  std::vector<int> generation;
  std::vector<T> marks;
};

template <class T>
GenericPopulation<T> simulateGeneric(const T& root, const std::function<std::vector<T>(const T&, Rng&)>& sampler,
                                     int nGen, std::uint64_t seed) {
  Rng rng(seed);
  GenericPopulation<T> pop;
  pop.parent.push_back(-1);
  pop.generation.push_back(0);
  pop.marks.push_back(root);
  for (std::size_t i = 0; i < pop.marks.size(); ++i) {
    if (pop.generation[i] >= nGen) continue;
    std::vector<T> kids = sampler(pop.marks[i], rng);
    for (auto& c : kids) {
      pop.parent.push_back(static_cast<int>(i));
      pop.generation.push_back(pop.generation[i] + 1);
      pop.marks.push_back(std::move(c));
    }
  }
  return pop;
}

}  // namespace branchlab
