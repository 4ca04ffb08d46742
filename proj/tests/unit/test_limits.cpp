#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "oracles.hpp"

using namespace branchlab;

namespace {

double midpoint2d(const std::function<double(double, double)>& f, int cells) {
  const double h = 1.0 / cells;
  double s = 0;
  for (int i = 0; i < cells; ++i)
    for (int j = 0; j < cells; ++j) s += f((i + 0.5) * h, (j + 0.5) * h);
  return s * h * h;
}

MonomialFunction leavesWithin(double R) {
  return [R](const DistanceMatrix& d, const std::vector<int>&) {
    for (std::size_t i = 1; i < d.dim(); ++i)
      if (d(0, i) > R) return 0.0;
    return 1.0;
  };
}

const MonomialFunction kFarPair = [](const DistanceMatrix& d, const std::vector<int>&) {
  return d(1, 2) >= 1.0 ? 1.0 : 0.0;
};

}  // namespace

TEST(Lambda, FirstOrder) {
  ShapeIntegrand within = [](const ContinuousShape& s) { return s.l[0] <= 0.75 ? 1.0 : 0.0; };
  EXPECT_NEAR(lambdaIntegral(1, within, 0.75, Integration::grid(1000)).value, 0.75, 1e-3);
  Estimate mc = lambdaIntegral(1, within, 0.75, Integration::monteCarlo(100000, 3));
  EXPECT_LE(std::abs(mc.value - 0.75), 3 * mc.standardError + 1e-12);
}

TEST(Lambda, SecondOrderAgainstQuadrature) {
  ShapeIntegrand unitBox = [](const ContinuousShape& s) { return s.l[0] <= 1 && s.l[1] <= 1 ? 1.0 : 0.0; };
  const double oracle1 = midpoint2d([](double a, double b) { return std::min(a, b); }, 2000);
  EXPECT_NEAR(oracle1, 1.0 / 3, 1e-6);
  EXPECT_NEAR(lambdaIntegral(2, unitBox, 1.0, Integration::grid(120)).value, oracle1, 2e-3);
  Estimate mc = lambdaIntegral(2, unitBox, 1.0, Integration::monteCarlo(200000, 5));
  EXPECT_LE(std::abs(mc.value - oracle1), 3 * mc.standardError);

  ShapeIntegrand lowBranch = [](const ContinuousShape& s) { return s.l[0] <= 1 && s.l[1] <= 1 && s.b[0] <= 0.5 ? 1.0 : 0.0; };
  const double oracle2 = midpoint2d([](double a, double b) { return std::min({a, b, 0.5}); }, 2000);
  EXPECT_NEAR(oracle2, 7.0 / 24, 1e-6);
  EXPECT_NEAR(lambdaIntegral(2, lowBranch, 1.0, Integration::grid(120)).value, oracle2, 2e-3);
  Estimate mc2 = lambdaIntegral(2, lowBranch, 1.0, Integration::monteCarlo(200000, 6));
  EXPECT_LE(std::abs(mc2.value - oracle2), 3 * mc2.standardError);
}

TEST(Lambda, ThreadsDoNotChangeMonteCarlo) {
  ShapeIntegrand f = [](const ContinuousShape& s) { return s.l[0] + s.b[0]; };
  Integration a = Integration::monteCarlo(50000, 9), b = a;
  b.threads = 4;
  EXPECT_EQ(lambdaIntegral(2, f, 1.0, a).value, lambdaIntegral(2, f, 1.0, b).value);
}

TEST(LambdaTilde, Examples) {
  ShapeIntegrand one = [](const ContinuousShape&) { return 1.0; };
  EXPECT_NEAR(lambdaTildeIntegral(1, one, Integration::grid(10)).value, 1.0, 1e-12);
  EXPECT_NEAR(lambdaTildeIntegral(3, one, Integration::grid(10)).value, 1.0, 1e-12);
  ShapeIntegrand b1 = [](const ContinuousShape& s) { return s.b[0]; };
  EXPECT_NEAR(lambdaTildeIntegral(2, b1, Integration::grid(100)).value, 0.5, 1e-12);
  ShapeIntegrand ordered = [](const ContinuousShape& s) { return s.b[0] < s.b[1] ? 1.0 : 0.0; };
  EXPECT_NEAR(lambdaTildeIntegral(3, ordered, Integration::grid(100)).value, 0.5, 1e-2);
  Estimate mc = lambdaTildeIntegral(3, ordered, Integration::monteCarlo(100000, 2));
  EXPECT_LE(std::abs(mc.value - 0.5), 3 * mc.standardError);
}

TEST(BrownianMoments, Examples) {
  LimitQuery q1{1, 0.8, {1.0}, leavesWithin(0.6), 0.6};
  EXPECT_NEAR(crtMoment(q1, Integration::grid(1000)).value, 0.6, 1e-3);

  LimitQuery c1{1, 0.8, {1.0}, [](const DistanceMatrix&, const std::vector<int>&) { return 1.0; }, 1.0};
  EXPECT_NEAR(cppMoment(c1, Integration::grid(10)).value, 0.4, 1e-12);

  LimitQuery q2{2, 1.0, {1.0}, leavesWithin(1.0), 1.0};
  EXPECT_NEAR(crtMoment(q2, Integration::grid(120)).value, 1.0 / 3, 3e-3);

  LimitQuery far{2, 1.0, {1.0}, kFarPair, 1.0};
  // D_12 = 2(1 - b) >= 1 iff b <= 1/2, two orderings, (1/2)^2 prefactor
  EXPECT_NEAR(cppMoment(far, Integration::grid(1000)).value, 0.25, 1e-3);
}

TEST(BrownianMoments, LinearityAndMarkIndependence) {
  MonomialFunction a = leavesWithin(1.0);
  MonomialFunction b = [](const DistanceMatrix& d, const std::vector<int>& x) {
    return (d(0, 1) <= 1 && d(0, 2) <= 1 ? d(1, 2) : 0.0) * (x[0] == 0 ? 2.0 : 1.0);
  };
  MonomialFunction ab = [&](const DistanceMatrix& d, const std::vector<int>& x) { return 3 * a(d, x) + b(d, x); };
  std::vector<double> pi{0.3, 0.7};
  auto how = Integration::grid(60);
  const double va = crtMoment({2, 0.7, pi, a, 1.0}, how).value, vb = crtMoment({2, 0.7, pi, b, 1.0}, how).value;
  EXPECT_NEAR(crtMoment({2, 0.7, pi, ab, 1.0}, how).value, 3 * va + vb, 1e-12);
  EXPECT_NEAR(crtMoment({2, 0.7, {1.0}, a, 1.0}, how).value, va, 1e-12);
  EXPECT_NEAR(cppMoment({2, 0.7, pi, kFarPair, 1.0}, how).value, cppMoment({2, 0.7, {1.0}, kFarPair, 1.0}, how).value,
              1e-12);
  // (1.3 from the mark factor: E[2 if x=0 else 1] = 1.3)
  MonomialFunction bPlain = [](const DistanceMatrix& d, const std::vector<int>&) {
    return d(0, 1) <= 1 && d(0, 2) <= 1 ? d(1, 2) : 0.0;
  };
  EXPECT_NEAR(vb, 1.3 * crtMoment({2, 0.7, pi, bPlain, 1.0}, how).value, 1e-12);
}

TEST(BrownianMoments, UltrametricCppConsistency) {
  const double s2 = 0.7;
  LimitQuery q{2, s2, {1.0}, kFarPair, 1.0};
  auto how = Integration::grid(1000);
  ShapeIntegrand sym = [&](const ContinuousShape& s) { return symmetrisedMarkAverage(q, distanceMatrix(s)); };
  const double ultraLimit = (s2 / 2) * lambdaTildeIntegral(2, sym, how).value;
  EXPECT_NEAR(ultraLimit, (2 / s2) * cppMoment(q, how).value, 1e-12);
}

TEST(CppSampler, DistanceRule) {
  CppSample s{1.0, 0.1, {{0.5, 0.3}, {1.2, 0.8}}};
  EXPECT_NEAR(s.distance(0.2, 1.0), 0.6, 1e-15);
  EXPECT_NEAR(s.distance(0.2, 1.5), 1.6, 1e-15);
  EXPECT_NEAR(s.distance(1.5, 0.2), 1.6, 1e-15);
  EXPECT_EQ(s.distance(0.6, 1.1), 0.0);
}

TEST(CppSampler, AtomLaw) {
  const double eps = 0.05;
  Rng rng(8);
  const int N = 40000;
  double countPerZ = 0, count2 = 0, deep = 0, atoms = 0, zs = 0, zs2 = 0;
  for (int i = 0; i < N; ++i) {
    CppSample s = sampleCpp(eps, rng);
    zs += s.Z;
    zs2 += s.Z * s.Z;
    const double n = static_cast<double>(s.atoms.size());
    countPerZ += n;
    count2 += n * n;
    for (std::size_t j = 0; j < s.atoms.size(); ++j) {
      const auto& a = s.atoms[j];
      ASSERT_GE(a.depth, eps);
      ASSERT_LE(a.depth, 1.0);
      ASSERT_GE(a.position, 0.0);
      ASSERT_LE(a.position, s.Z);
      if (j > 0) ASSERT_LE(s.atoms[j - 1].position, a.position);
      deep += a.depth > 0.5;
      atoms += 1;
    }
  }
  const double zMean = zs / N, zSe = std::sqrt((zs2 / N - zMean * zMean) / N);
  EXPECT_LE(std::abs(zMean - 1.0), 3 * zSe);
  // E[N] = E[Z] (1/eps - 1)
  const double nMean = countPerZ / N, nSe = std::sqrt((count2 / N - nMean * nMean) / N);
  EXPECT_LE(std::abs(nMean - (1 / eps - 1)), 3 * nSe);
  // P(depth > 1/2) = (2 - 1) / (1/eps - 1)
  const double p = 1.0 / (1 / eps - 1), ph = deep / atoms;
  EXPECT_LE(std::abs(ph - p), 3 * std::sqrt(p * (1 - p) / atoms));
}

TEST(CppSampler, MonteCarloMatchesFormula) {
  CppMonteCarloOptions o;
  o.samples = 100000;
  o.seed = 4;
  LimitQuery c1{1, 0.9, {1.0}, [](const DistanceMatrix&, const std::vector<int>&) { return 1.0; }, 1.0};
  Estimate e1 = cppMonomialMonteCarlo(c1, o);
  EXPECT_LE(std::abs(e1.value - 0.45), 3 * e1.standardError);

  o.samples = 20000;
  LimitQuery far{2, 1.0, {0.4, 0.6}, kFarPair, 1.0};
  Estimate e2 = cppMonomialMonteCarlo(far, o);
  const double formula = cppMoment(far, Integration::grid(1000)).value;
  EXPECT_LE(std::abs(e2.value - formula), 3 * e2.standardError);
  o.threads = 3;
  EXPECT_EQ(cppMonomialMonteCarlo(far, o).value, e2.value);
}

TEST(CppSampler, CutoffStability) {
  CppMonteCarloOptions o;
  o.samples = 20000;
  o.epsilon = 2e-3;
  LimitQuery far{2, 1.0, {1.0}, kFarPair, 1.0};
  Estimate a = cppMonomialMonteCarlo(far, o);
  o.epsilon = 1e-3;
  Estimate b = cppMonomialMonteCarlo(far, o);
  EXPECT_LT(std::abs(a.value - b.value), a.standardError);
}

TEST(Contour, TentAndFlatPaths) {
  std::vector<std::size_t> cls;
  FiniteMmmSpace t = contourTree({0, 0.5, 1.0, 0.5, 0}, 0.5, &cls);
  EXPECT_NEAR(t.distance(cls[1], cls[2]), 0.5, 1e-15);  // times 0.5 and 1.0
  EXPECT_EQ(cls[1], cls[3]);                           // times 0.5 and 1.5 coincide
  EXPECT_NEAR(t.distance(cls[1], cls[3]), 0.0, 1e-15);
  EXPECT_EQ(cls[0], cls[4]);
  EXPECT_EQ(t.root(), cls[0]);
  EXPECT_NEAR(t.mass(cls[1]), 1.0, 1e-15);
  EXPECT_NEAR(t.totalMass(), 2.5, 1e-15);

  FiniteMmmSpace flat = contourTree({0, 0, 0, 0}, 1.0);
  EXPECT_EQ(flat.size(), 1u);
  EXPECT_THROW(contourTree({0, -1, 0}, 1.0), InvalidInput);
  EXPECT_THROW(contourTree({0, 1}, 1.0), InvalidInput);
}

TEST(Contour, DistancesMatchRunningMinimum) {
  Rng rng(21);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> f = sampleExcursion(40, rng);
    for (auto& v : f) v = std::round(v * 3) / 3;  // induce ties
    f.front() = f.back() = 0;
    std::vector<std::size_t> cls;
    FiniteMmmSpace t = contourTree(f, 1.0, &cls);
    EXPECT_TRUE(t.isValid(1e-12));
    for (std::size_t u = 0; u < f.size(); ++u)
      for (std::size_t v = u; v < f.size(); ++v) {
        const double m = *std::min_element(f.begin() + static_cast<long>(u), f.begin() + static_cast<long>(v) + 1);
        ASSERT_NEAR(t.distance(cls[u], cls[v]), f[u] + f[v] - 2 * m, 1e-12);
      }
  }
}

TEST(Contour, DyckPathsAreUniform) {
  Rng rng(13);
  const int N = 100000;
  std::map<std::vector<int>, int> freq;
  for (int i = 0; i < N; ++i) {
    auto p = sampleDyckPath(3, rng);
    ASSERT_EQ(p.size(), 7u);
    ASSERT_EQ(p.front(), 0);
    ASSERT_EQ(p.back(), 0);
    for (std::size_t j = 1; j < p.size(); ++j) {
      ASSERT_EQ(std::abs(p[j] - p[j - 1]), 1);
      ASSERT_GE(p[j], 0);
    }
    ++freq[p];
  }
  ASSERT_EQ(freq.size(), 5u);  // Catalan(3)
  for (const auto& [p, c] : freq) EXPECT_LE(std::abs(c / double(N) - 0.2), 3 * std::sqrt(0.2 * 0.8 / N));

  auto e = sampleExcursion(10, rng);
  ASSERT_EQ(e.size(), 11u);
  for (std::size_t j = 1; j + 1 < e.size(); ++j) EXPECT_GT(e[j], 0);
}

TEST(Contour, SmallDonskerCheck) {
  ExcursionCheckOptions o;
  o.excursions = 400;
  o.steps = 2000;
  o.threads = 4;
  ExcursionCheck c = excursionDonskerCheck(1.0, o);
  EXPECT_NEAR(c.crt, 1.0, 1e-3);
  EXPECT_LT(c.relError, 0.15);
  EXPECT_NEAR(c.inverseHeightIntegral.value, std::sqrt(2 * std::numbers::pi), 0.15 * std::sqrt(2 * std::numbers::pi));
}

TEST(Convergence, ReportRows) {
  ConvergenceOptions o;
  o.k = 1;
  o.F = [](const ContinuousShape& s, const std::vector<int>&) { return s.l[0] <= 1 + 1e-12 ? 1.0 : 0.0; };
  o.nGrid = {10, 100};
  o.kolmogorovGrid = {100, 1000};
  o.ultrametric = false;
  ConvergenceReport r = convergenceReport(models::binaryGaltonWatson(), o);
  EXPECT_TRUE(r.critical);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.rows[1].path, "rescaled");
  EXPECT_NEAR(r.rows[1].limit, 1.0, 1e-9);
  EXPECT_LE(r.rows[1].relError, 0.02);
  EXPECT_LT(r.rows[1].relError, r.rows[0].relError);
  EXPECT_EQ(r.rows[3].path, "kolmogorov");
  EXPECT_NEAR(r.rows[3].limit, 2.0, 1e-9);

  ConvergenceOptions u;
  u.k = 2;
  u.F = [](const ContinuousShape&, const std::vector<int>&) { return 1.0; };
  u.nGrid = {100};
  u.rescaled = false;
  ConvergenceReport ru = convergenceReport(models::binaryGaltonWatson(), u);
  ASSERT_EQ(ru.rows.size(), 1u);
  EXPECT_NEAR(ru.rows[0].limit, 0.5, 1e-9);
  EXPECT_LE(ru.rows[0].relError, 0.05);
}

TEST(Convergence, SubcriticalSuppressesLimits) {
  ConvergenceOptions o;
  o.F = [](const ContinuousShape&, const std::vector<int>&) { return 1.0; };
  o.nGrid = {10};
  o.kolmogorovGrid = {10};
  ConvergenceReport r = convergenceReport(models::subcriticalSingleChild(), o);
  EXPECT_FALSE(r.critical);
  EXPECT_NEAR(r.perron, 0.5, 1e-12);
  EXPECT_FALSE(r.warnings.empty());
  for (const auto& row : r.rows) {
    EXPECT_TRUE(std::isnan(row.limit));
    EXPECT_TRUE(std::isnan(row.relError));
  }
}
