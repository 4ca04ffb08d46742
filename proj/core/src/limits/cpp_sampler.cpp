#include "branchlab/limits/cpp_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "branchlab/errors.hpp"
#include "branchlab/parallel.hpp"

namespace branchlab {

double CppSample::distance(double u, double v) const {
  if (u > v) std::swap(u, v);
  double m = 0;
  for (const auto& a : atoms)
    if (a.position > u && a.position < v) m = std::max(m, a.depth);
  return 2.0 * m;
}

namespace {

CppSample drawCpp(double epsilon, Rng& rng) {
  if (!(epsilon > 0 && epsilon < 1)) throw InvalidInput("CPP cutoff must lie in (0,1)");
  CppSample s;
  s.epsilon = epsilon;
  s.Z = std::exponential_distribution<double>(1.0)(rng);
  // In r = 1/depth the intensity is Z dr on [1, 1/epsilon]: scan r upwards, so atoms come
  // out deepest first and a smaller cutoff only appends shallower ones.
  std::exponential_distribution<double> gap(s.Z);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double rMax = 1.0 / epsilon;
  for (double r = 1.0 + gap(rng); r < rMax; r += gap(rng)) {
    const double u = unif(rng) * s.Z;
    s.atoms.push_back({u, 1.0 / r});
  }
  return s;
}

}  // namespace

CppSample sampleCpp(double epsilon, Rng& rng) {
  CppSample s = drawCpp(epsilon, rng);
  std::sort(s.atoms.begin(), s.atoms.end(), [](const CppAtom& a, const CppAtom& b) { return a.position < b.position; });
  return s;
}

CppSample sampleCpp(double epsilon, std::uint64_t seed) {
  Rng rng(seed);
  return sampleCpp(epsilon, rng);
}

Estimate cppMonomialMonteCarlo(const LimitQuery& q, const CppMonteCarloOptions& opt) {
  if (q.k < 1) throw InvalidInput("k must be positive");
  if (opt.samples < 2) throw InvalidInput("need at least two CPP samples");
  const auto K = static_cast<std::size_t>(q.k);
  const std::size_t m = std::max<std::size_t>(1, opt.positionsPerSample);
  const std::size_t E = q.pi.size();
  const std::size_t blocks = std::min<std::size_t>(64, opt.samples);
  std::vector<double> sum(blocks, 0.0), sum2(blocks, 0.0);

  parallelBlocks(blocks, opt.threads, [&](std::size_t b) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> pos(m * K);
    std::vector<std::size_t> order(m * K), rank(m * K);
    std::vector<double> gapMax, sorted(m * K);
    DistanceMatrix d(K + 1);
    std::vector<int> x(K);
    double s = 0, s2 = 0;
    for (std::size_t it = b; it < opt.samples; it += blocks) {
      // Separate streams per sample for the CPP and the positions keep runs with
      // different cutoffs coupled sample by sample.
      Rng cppRng(deriveSeed(opt.seed, 2 * it)), posRng(deriveSeed(opt.seed, 2 * it + 1));
      CppSample cpp = K > 1 ? drawCpp(opt.epsilon, cppRng) : CppSample{};
      if (K == 1) cpp.Z = std::exponential_distribution<double>(1.0)(cppRng);
      for (auto& p : pos) p = unif(posRng) * cpp.Z;
      // Largest depth in each gap between consecutive sorted positions.
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return pos[a] < pos[c]; });
      for (std::size_t r = 0; r < order.size(); ++r) {
        rank[order[r]] = r;
        sorted[r] = pos[order[r]];
      }
      gapMax.assign(order.size(), 0.0);
      for (const auto& a : cpp.atoms) {
        // gap g lies between sorted[g-1] and sorted[g]
        const auto g = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), a.position) - sorted.begin());
        if (g > 0 && g < sorted.size()) gapMax[g] = std::max(gapMax[g], a.depth);
      }
      double acc = 0;
      for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t i = 0; i < K; ++i) {
          d.set(0, i + 1, 1.0);
          for (std::size_t j = i + 1; j < K; ++j) {
            std::size_t lo = rank[t * K + i], hi = rank[t * K + j];
            if (lo > hi) std::swap(lo, hi);
            double mx = 0;
            for (std::size_t r = lo + 1; r <= hi; ++r) mx = std::max(mx, gapMax[r]);
            d.set(i + 1, j + 1, 2.0 * mx);
          }
        }
        // Marks: exact average over the i.i.d. law.
        std::fill(x.begin(), x.end(), 0);
        for (;;) {
          double w = 1;
          for (std::size_t i = 0; i < K; ++i) w *= q.pi[static_cast<std::size_t>(x[i])];
          if (w != 0.0) acc += w * q.phi(d, x);
          std::size_t i = 0;
          while (i < K && ++x[i] == static_cast<int>(E)) x[i++] = 0;
          if (i == K) break;
        }
      }
      const double v = std::pow(q.sigma2 / 2.0 * cpp.Z, q.k) * acc / static_cast<double>(m);
      s += v;
      s2 += v * v;
    }
    sum[b] = s;
    sum2[b] = s2;
  });
  double s = 0, s2 = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    s += sum[b];
    s2 += sum2[b];
  }
  const double N = static_cast<double>(opt.samples);
  const double mean = s / N;
  const double var = std::max(0.0, (s2 / N - mean * mean) * N / (N - 1));
  return {mean, std::sqrt(var / N)};
}

}  // namespace branchlab
