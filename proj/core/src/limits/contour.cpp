#include "branchlab/limits/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "branchlab/errors.hpp"
#include "branchlab/limits/brownian_moments.hpp"
#include "branchlab/mmm/monomial.hpp"
#include "branchlab/parallel.hpp"

namespace branchlab {

FiniteMmmSpace contourTree(const std::vector<double>& f, double massScale, std::vector<std::size_t>* classOf) {
  if (f.empty()) throw InvalidInput("contour tree needs a nonempty path");
  for (double v : f)
    if (!(v >= 0)) throw InvalidInput("contour path must be nonnegative");
  if (f.front() != 0.0 || f.back() != 0.0) throw InvalidInput("contour path must vanish at both ends");
  const std::size_t n = f.size();

  // Min-Cartesian tree: the lowest common ancestor of u < v is a minimiser of f on
  // [u, v]. Ties are chained parent-to-child with zero edge length.
  std::vector<int> parent(n, -1);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i) {
    int last = -1;
    while (!stack.empty() && f[stack.back()] > f[i]) {
      last = static_cast<int>(stack.back());
      stack.pop_back();
    }
    if (last >= 0) parent[static_cast<std::size_t>(last)] = static_cast<int>(i);
    if (!stack.empty()) parent[i] = static_cast<int>(stack.back());
    stack.push_back(i);
  }

  // Collapse zero-length edges: a point joins its parent's class when heights agree.
  std::vector<long> rep(n, -1);
  std::vector<std::size_t> chain;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t u = i;
    while (rep[u] < 0) {
      chain.push_back(u);
      const int p = parent[u];
      if (p < 0 || f[static_cast<std::size_t>(p)] != f[u]) {
        rep[u] = static_cast<long>(u);
        chain.pop_back();
        break;
      }
      u = static_cast<std::size_t>(p);
    }
    for (auto c : chain) rep[c] = rep[u];
    chain.clear();
  }

  std::vector<long> index(n, -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(rep[i]);
    if (index[r] < 0) {
      index[r] = static_cast<long>(reps.size());
      reps.push_back(r);
    }
  }
  const std::size_t m = reps.size();
  std::vector<int> cparent(m, -1);
  std::vector<double> depth(m), mass(m, 0.0);
  for (std::size_t c = 0; c < m; ++c) {
    const std::size_t r = reps[c];
    depth[c] = f[r];
    if (parent[r] >= 0) cparent[c] = static_cast<int>(index[static_cast<std::size_t>(rep[static_cast<std::size_t>(parent[r])])]);
  }
  for (std::size_t i = 0; i < n; ++i) mass[static_cast<std::size_t>(index[static_cast<std::size_t>(rep[i])])] += massScale;
  if (classOf) {
    classOf->resize(n);
    for (std::size_t i = 0; i < n; ++i) (*classOf)[i] = static_cast<std::size_t>(index[static_cast<std::size_t>(rep[i])]);
  }
  const auto root = static_cast<std::size_t>(index[static_cast<std::size_t>(rep[0])]);
  return FiniteMmmSpace(std::make_shared<TreeMetric>(std::move(cparent), std::move(depth)), root, std::move(mass),
                        std::vector<int>(m, 0));
}

std::vector<int> sampleDyckPath(int halfLength, Rng& rng) {
  if (halfLength < 0) throw InvalidInput("negative Dyck path length");
  const auto N = static_cast<std::size_t>(halfLength);
  // N up-steps and N+1 down-steps; the rotation starting after the first minimum of the
  // partial sums is a Dyck path followed by one final down-step.
  std::vector<int> steps(2 * N + 1, -1);
  std::fill(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(N), 1);
  std::shuffle(steps.begin(), steps.end(), rng);
  int s = 0, best = 1;
  std::size_t at = 0;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    s += steps[j];
    if (s < best) {
      best = s;
      at = j + 1;
    }
  }
  std::vector<int> path(2 * N + 1, 0);
  for (std::size_t t = 0; t < 2 * N; ++t) path[t + 1] = path[t] + steps[(at + t) % steps.size()];
  return path;
}

std::vector<double> sampleExcursion(int steps, Rng& rng) {
  if (steps < 2 || steps % 2) throw InvalidInput("excursion length must be even and at least 2");
  const std::vector<int> dyck = sampleDyckPath(steps / 2 - 1, rng);
  const double scale = 1.0 / std::sqrt(static_cast<double>(steps));
  std::vector<double> e(static_cast<std::size_t>(steps) + 1, 0.0);
  for (std::size_t i = 1; i < e.size() - 1; ++i) e[i] = (1 + dyck[i - 1]) * scale;
  return e;
}

ExcursionCheck excursionDonskerCheck(double R, const ExcursionCheckOptions& opt) {
  if (opt.excursions < 2) throw InvalidInput("need at least two excursions");
  const auto count = static_cast<std::size_t>(opt.excursions);
  std::vector<double> vals(count);
  const MonomialFunction inverseHeight = [](const DistanceMatrix& d, const std::vector<int>&) {
    return d(0, 1) > 0 ? 1.0 / d(0, 1) : 0.0;
  };
  const std::size_t blocks = std::min<std::size_t>(64, count);
  parallelBlocks(blocks, opt.threads, [&](std::size_t b) {
    for (std::size_t j = b; j < count; j += blocks) {
      Rng rng(deriveSeed(opt.seed, j));
      const auto path = sampleExcursion(opt.steps, rng);
      const FiniteMmmSpace tree = contourTree(path, 1.0 / opt.steps);
      vals[j] = monomial(tree, 1, inverseHeight).value;
    }
  });
  double s = 0, s2 = 0;
  for (double v : vals) {
    s += v;
    s2 += v * v;
  }
  const double N = static_cast<double>(count);
  const double mean = s / N;
  const double se = std::sqrt(std::max(0.0, (s2 / N - mean * mean) / (N - 1)));
  ExcursionCheck out;
  out.inverseHeightIntegral = {mean, se};
  const double c = R / std::sqrt(2.0 * std::numbers::pi);
  out.freeMoment = {c * mean, c * se};
  LimitQuery q;
  q.k = 1;
  q.R = R;
  q.phi = [R](const DistanceMatrix& d, const std::vector<int>&) { return d(0, 1) <= R ? 1.0 : 0.0; };
  out.crt = crtMoment(q, Integration::grid(1000)).value;
  out.relError = std::abs(out.freeMoment.value - out.crt) / out.crt;
  return out;
}

}  // namespace branchlab
