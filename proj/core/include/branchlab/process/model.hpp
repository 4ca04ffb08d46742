#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace branchlab {

// One support point of the offspring law: with `probability` the parent has exactly
// these children. The listed order carries no meaning; realisations place the brood in
// a uniformly random planar order.
struct OffspringAtom {
  double probability = 0;
  std::vector<int> children;
};

// Finite-type branching mechanism.
class Model {
 public:
  Model(std::vector<std::string> typeNames, std::vector<std::vector<OffspringAtom>> offspring);

  std::size_t typeCount() const { return names_.size(); }
  const std::vector<std::string>& typeNames() const { return names_; }
  const std::string& typeName(int x) const { return names_.at(static_cast<std::size_t>(x)); }
  int typeIndex(const std::string& name) const;

  const std::vector<OffspringAtom>& offspring(int x) const { return offspring_.at(static_cast<std::size_t>(x)); }
  // Every distinct planar ordering of every brood, each with an equal share of the
  // atom's probability. Zero-probability atoms are dropped.
  const std::vector<OffspringAtom>& orderedOffspring(int x) const { return ordered_.at(static_cast<std::size_t>(x)); }
  int maxBrood() const { return maxBrood_; }

  // {"types":[...],"offspring":{"A":[{"prob":p,"children":["A","B"]},...],...}}
  static Model fromJson(const nlohmann::json& j);
  static Model fromFile(const std::string& path);
  nlohmann::json toJson() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<OffspringAtom>> offspring_;
  std::vector<std::vector<OffspringAtom>> ordered_;
  int maxBrood_ = 0;
};

namespace models {

// 0 or 2 children with probability 1/2 each.
Model binaryGaltonWatson();
// Types A, B; each type has no children or the brood (A, B), probability 1/2 each.
Model twoTypeSymmetric();
// A: 0.3 none, 0.4 (A), 0.3 (A, B, B); B: 0.5 none, 0.5 (A). Critical, non-symmetric.
Model twoTypeAsymmetric();
// Exactly one child, forever.
Model deterministicChild();
// Never any children.
Model sterile();
// No child or one child, probability 1/2 each.
Model subcriticalSingleChild();

}  // namespace models

}  // namespace branchlab
