#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "branchlab/process/model.hpp"

namespace branchlab {

// M(x, y) = expected number of type-y children of a type-x parent.
Eigen::MatrixXd meanMatrix(const Model& model);

// Some power of the matrix is strictly positive (irreducible and aperiodic).
bool isPrimitive(const Eigen::MatrixXd& m);

struct Eigenpair {
  Eigen::VectorXd h;   // right eigenvector, M h = perron h
  Eigen::VectorXd pi;  // left eigenvector, probability vector
  double perron = 0;
  std::vector<std::string> warnings;

  bool critical(double tol = 1e-9) const;
};

// Power iteration to 1e-12; normalised so that sum(pi) = 1 and <pi, h> = 1.
// Throws ModelPropertyError for a reducible or periodic mean matrix.
Eigenpair eigenpair(const Model& model);

// sum_x pi(x) E_x[ sum_{i != j} h(xi_i) h(xi_j) ].
double sigmaSquared(const Model& model, const Eigenpair& ep);

}  // namespace branchlab
