#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "branchlab/process/marked_tree.hpp"
#include "branchlab/process/model.hpp"

namespace branchlab {

enum class PsiPreset { Unit, Harmonic };

// psi-biased quantities derived from a model:
//   m_d(x)      = E_x[ sum over ordered distinct d-tuples of children of prod psi ]
//   lambda(x)   = m_1(x) / psi(x)
//   P(x, y)     = spine transition, the one-child law under m_1-biasing
//   chi_d(x; y) = law of the ordered types of d distinct children under m_d-biasing
// Tuple tables are flat arrays of size |E|^d, first coordinate most significant.
class SpineKernel {
 public:
  static SpineKernel build(const Model& model, const std::vector<double>& psi);
  static SpineKernel build(const Model& model, PsiPreset preset);

  const Model& model() const { return model_; }
  std::size_t typeCount() const { return psi_.size(); }
  const std::vector<double>& psi() const { return psi_; }
  double psi(int x) const { return psi_[static_cast<std::size_t>(x)]; }
  int maxDegree() const { return maxDegree_; }

  // Zero for d above the maximal brood size.
  double m(int d, int x) const;
  double lambda(int x) const { return lambda_[static_cast<std::size_t>(x)]; }
  const Eigen::MatrixXd& transition() const { return transition_; }
  // B(x, y) = lambda(x) P(x, y) = M(x, y) psi(y) / psi(x).
  const Eigen::MatrixXd& segment() const { return segment_; }

  // Normalised chi_d(x; .). The row is identically zero when m_d(x) = 0.
  const std::vector<double>& chi(int d, int x) const;
  // m_d(x) chi_d(x; .), the unnormalised tuple sums.
  const std::vector<double>& chiMass(int d, int x) const;

  nlohmann::json toJson() const;

 private:
  SpineKernel(const Model& model, std::vector<double> psi);

  Model model_;
  std::vector<double> psi_;
  int maxDegree_ = 0;
  std::vector<std::vector<double>> m_;                   // [d][x]
  std::vector<double> lambda_;
  Eigen::MatrixXd transition_, segment_;
  std::vector<std::vector<std::vector<double>>> chi_;    // [d][x][tuple]
  std::vector<std::vector<std::vector<double>>> chiMass_;
};

std::vector<double> psiVector(const Model& model, PsiPreset preset);

// e_d(values); e_0 = 1.
double elementarySymmetric(const std::vector<double>& values, int d);

// Bias term of the tree-indexed chain evaluated on a fully marked tree:
// prod_v lambda(x_v) * prod_{branch} m_d/(d! psi lambda) * prod_{leaf} 1/(psi lambda),
// computed in the cancelled per-vertex form so that lambda = 0 is harmless.
double deltaBias(const SpineKernel& kernel, const MarkedTree& tree);

}  // namespace branchlab
