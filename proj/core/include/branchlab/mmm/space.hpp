#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <nlohmann/json.hpp>

#include "branchlab/mmm/metric.hpp"
#include "branchlab/process/marked_tree.hpp"

namespace branchlab {

// Pointed marked metric measure space on finitely many points.
class FiniteMmmSpace {
 public:
  FiniteMmmSpace(std::shared_ptr<const Metric> metric, std::size_t root, std::vector<double> mass,
                 std::vector<int> marks);

  std::size_t size() const { return mass_.size(); }
  std::size_t root() const { return root_; }
  double mass(std::size_t i) const { return mass_[i]; }
  int mark(std::size_t i) const { return marks_[i]; }
  double distance(std::size_t i, std::size_t j) const { return metric_->distance(i, j); }
  const std::shared_ptr<const Metric>& metric() const { return metric_; }
  const std::vector<double>& masses() const { return mass_; }
  const std::vector<int>& marks() const { return marks_; }
  double totalMass() const;
  // Points of positive mass.
  std::vector<std::size_t> support() const;

  // Zero diagonal, symmetry, triangle inequality (cubic; meant for small spaces).
  bool isValid(double tol = 1e-12) const;

  // {"points": n, "root": r, "dist": [row-major], "mass": [...], "mark": [...]}
  nlohmann::json toJson() const;
  static FiniteMmmSpace fromJson(const nlohmann::json& j);

 private:
  std::shared_ptr<const Metric> metric_;
  std::size_t root_;
  std::vector<double> mass_;
  std::vector<int> marks_;
};

// Every vertex becomes a point of mass massScale; graph distances times edgeScale.
FiniteMmmSpace treeToMmm(const MarkedTree& tree, double edgeScale, double massScale);
// Root (mass 0) plus the vertices of generation n, each of mass massScale.
FiniteMmmSpace generationSlice(const MarkedTree& tree, int n, double edgeScale, double massScale);

// Points within closed distance R of the root; masses unchanged.
FiniteMmmSpace restrictBall(const FiniteMmmSpace& space, double R);
// Largest root distance over the support (0 for an empty measure).
double height(const FiniteMmmSpace& space);
// Smallest mass of a closed delta-ball centred in the support (0 for an empty measure).
double lowerMass(const FiniteMmmSpace& space, double delta);

}  // namespace branchlab
