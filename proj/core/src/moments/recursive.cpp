#include "branchlab/moments/product_functional.hpp"

#include "branchlab/errors.hpp"

namespace branchlab {

namespace {

Eigen::VectorXd productVector(const SpineKernel& kernel, const ProductFunctional& f);

Eigen::VectorXd sumVector(const SpineKernel& kernel, const ProductSum& f) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(kernel.typeCount()));
  for (const auto& p : f) v += productVector(kernel, p);
  return v;
}

// Mean-matrix power M^n = diag(psi) B^n diag(psi)^{-1} with B = diag(lambda) P.
class MeanPowers {
 public:
  explicit MeanPowers(const SpineKernel& kernel) : kernel_(kernel) {
    pw_.push_back(Eigen::MatrixXd::Identity(kernel.segment().rows(), kernel.segment().cols()));
  }
  Eigen::MatrixXd mean(int n) {
    while (static_cast<int>(pw_.size()) <= n) pw_.push_back(pw_.back() * kernel_.segment());
    Eigen::MatrixXd m = pw_[static_cast<std::size_t>(n)];
    for (Eigen::Index x = 0; x < m.rows(); ++x)
      for (Eigen::Index y = 0; y < m.cols(); ++y)
        m(x, y) *= kernel_.psi(static_cast<int>(x)) / kernel_.psi(static_cast<int>(y));
    return m;
  }

 private:
  const SpineKernel& kernel_;
  std::vector<Eigen::MatrixXd> pw_;
};

Eigen::VectorXd productVector(const SpineKernel& kernel, const ProductFunctional& f) {
  const auto E = static_cast<Eigen::Index>(kernel.typeCount());
  MeanPowers powers(kernel);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(E);
  if (f.k == 1) {
    // Many-to-one at every height up to the support.
    for (int n = 0; n <= f.supportHeight; ++n) {
      Eigen::VectorXd g(E);
      for (Eigen::Index z = 0; z < E; ++z) g(z) = f.leaf(n, static_cast<int>(z));
      out += powers.mean(n) * g;
    }
    return out;
  }
  if (f.composition.size() < 2) throw InvalidInput("product functional needs at least two blocks");
  int total = 0;
  for (int c : f.composition) total += c;
  if (total != f.k) throw InvalidInput("composition does not sum to k");
  const std::size_t d = f.composition.size();
  double dfact = 1;
  for (std::size_t i = 2; i <= d; ++i) dfact *= static_cast<double>(i);

  for (int n = 0; n <= f.supportHeight; ++n) {
    std::vector<Eigen::VectorXd> blocks;
    for (std::size_t i = 0; i < d; ++i) blocks.push_back(sumVector(kernel, f.block(n, i)));
    // g(y) = E_y[ sum over ordered distinct d-tuples of children of prod_i V_i(child_i) ] / d!
    Eigen::VectorXd g = Eigen::VectorXd::Zero(E);
    for (Eigen::Index y = 0; y < E; ++y) {
      const double s = f.stem(n, static_cast<int>(y));
      if (s == 0.0) continue;
      double acc = 0;
      for (const auto& atom : kernel.model().offspring(static_cast<int>(y))) {
        const auto& kids = atom.children;
        if (kids.size() < d || atom.probability == 0.0) continue;
        std::vector<bool> used(kids.size(), false);
        double sum = 0;
        auto rec = [&](auto&& self, std::size_t i, double w) -> void {
          if (i == d) {
            sum += w;
            return;
          }
          for (std::size_t c = 0; c < kids.size(); ++c) {
            if (used[c]) continue;
            const double v = blocks[i](kids[c]);
            if (v == 0.0) continue;
            used[c] = true;
            self(self, i + 1, w * v);
            used[c] = false;
          }
        };
        rec(rec, 0, 1.0);
        acc += atom.probability * sum;
      }
      g(y) = s * acc / dfact;
    }
    out += powers.mean(n) * g;
  }
  return out;
}

}  // namespace

Eigen::VectorXd momentRecursiveVector(const SpineKernel& kernel, const ProductSum& f) { return sumVector(kernel, f); }

double momentRecursive(const SpineKernel& kernel, int x0, const ProductSum& f) {
  return momentRecursiveVector(kernel, f)(x0);
}

double momentRecursive(const SpineKernel& kernel, int x0, const ProductFunctional& f) {
  return momentRecursive(kernel, x0, ProductSum{f});
}

}  // namespace branchlab
