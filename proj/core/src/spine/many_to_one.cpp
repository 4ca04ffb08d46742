#include "branchlab/spine/many_to_one.hpp"

#include "branchlab/errors.hpp"

namespace branchlab {

double manyToOne(const SpineKernel& kernel, int x0, int n, const PathFunctional& f) {
  const int E = static_cast<int>(kernel.typeCount());
  if (x0 < 0 || x0 >= E) throw InvalidInput("unknown start type");
  if (n < 0) throw InvalidInput("negative path length");
  const Eigen::MatrixXd& P = kernel.transition();
  std::vector<int> path{x0};
  double acc = 0;
  auto rec = [&](auto&& self, double w) -> void {
    if (static_cast<int>(path.size()) == n + 1) {
      acc += w * f(path) / kernel.psi(path.back());
      return;
    }
    const int x = path.back();
    for (int y = 0; y < E; ++y) {
      const double step = kernel.lambda(x) * P(x, y);
      if (step == 0.0) continue;
      path.push_back(y);
      self(self, w * step);
      path.pop_back();
    }
  };
  rec(rec, 1.0);
  return kernel.psi(x0) * acc;
}

}  // namespace branchlab
