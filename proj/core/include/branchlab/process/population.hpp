#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "branchlab/process/marked_tree.hpp"
#include "branchlab/process/model.hpp"

namespace branchlab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

// Number of distinct realisations to depth nGen (planar orderings counted separately).
double countPopulationOutcomes(const Model& model, int x0, int nGen);

// Streams every realisation of the population to depth nGen exactly once together with
// its probability. Throws EnumerationCapExceeded when the outcome count exceeds `cap`.
void forEachPopulation(const Model& model, int x0, int nGen,
                       const std::function<void(double, const FlatPopulation&)>& visit,
                       std::uint64_t cap = kDefaultEnumerationCap);

std::vector<std::pair<double, MarkedTree>> enumeratePopulation(const Model& model, int x0, int nGen,
                                                               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace branchlab
