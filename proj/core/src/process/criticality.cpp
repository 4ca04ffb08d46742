#include "branchlab/process/criticality.hpp"

#include <cmath>
#include <sstream>

#include "branchlab/errors.hpp"

namespace branchlab {

Eigen::MatrixXd meanMatrix(const Model& model) {
  const auto n = static_cast<Eigen::Index>(model.typeCount());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x)
    for (const auto& a : model.offspring(static_cast<int>(x)))
      for (int c : a.children) m(x, c) += a.probability;
  return m;
}

bool isPrimitive(const Eigen::MatrixXd& m) {
  // Wielandt: a primitive n x n matrix has M^{(n-1)^2+1} > 0.
  const auto n = m.rows();
  using B = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
  B a = (m.array() > 0).cast<int>();
  B p = a;
  const long steps = (n - 1) * (n - 1);
  for (long s = 0; s < steps; ++s) p = ((p * a).array() > 0).cast<int>();
  return (p.array() > 0).all();
}

bool Eigenpair::critical(double tol) const { return std::abs(perron - 1.0) <= tol; }

namespace {

Eigen::VectorXd powerIterate(const Eigen::MatrixXd& m, double& rho) {
  const auto n = m.rows();
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < 10'000'000; ++it) {
    Eigen::VectorXd w = m * v;
    const double s = w.sum();
    if (!(s > 0)) throw ModelPropertyError("mean matrix annihilates the positive cone");
    w /= s;
    const double diff = (w - v).lpNorm<Eigen::Infinity>();
    v = w;
    if (diff < 1e-12 && it > 2) {
      rho = (m * v).sum() / v.sum();
      return v;
    }
  }
  throw ModelPropertyError("power iteration did not converge");
}

}  // namespace

Eigenpair eigenpair(const Model& model) {
  const Eigen::MatrixXd m = meanMatrix(model);
  if (!isPrimitive(m))
    throw ModelPropertyError("mean matrix is reducible or periodic (no strictly positive power)");
  Eigenpair ep;
  double rhoRight = 0, rhoLeft = 0;
  ep.h = powerIterate(m, rhoRight);
  ep.pi = powerIterate(m.transpose(), rhoLeft);
  ep.perron = rhoRight;
  ep.pi /= ep.pi.sum();
  ep.h /= ep.pi.dot(ep.h);
  if (std::abs(ep.perron - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "model is not critical: perron root " << ep.perron;
    ep.warnings.push_back(os.str());
  }
  return ep;
}

double sigmaSquared(const Model& model, const Eigenpair& ep) {
  double total = 0;
  for (std::size_t x = 0; x < model.typeCount(); ++x) {
    double ex = 0;
    for (const auto& a : model.offspring(static_cast<int>(x))) {
      double s = 0, s2 = 0;
      for (int c : a.children) {
        s += ep.h(c);
        s2 += ep.h(c) * ep.h(c);
      }
      ex += a.probability * (s * s - s2);
    }
    total += ep.pi(static_cast<Eigen::Index>(x)) * ex;
  }
  return total;
}

}  // namespace branchlab
