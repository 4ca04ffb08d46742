#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"

using namespace branchlab;

namespace {

// Two types, broods up to four with repeated types.
Model quad() {
  return Model({"A", "B"}, {{{0.4, {}}, {0.2, {0}}, {0.2, {0, 1, 1, 0}}, {0.2, {1, 0}}},
                            {{0.5, {}}, {0.3, {0, 1}}, {0.2, {1, 1, 0}}}});
}

std::vector<Model> spineModels() {
  return {models::binaryGaltonWatson(), models::twoTypeSymmetric(), models::twoTypeAsymmetric(), quad()};
}

std::vector<int> unflatten(std::size_t idx, int d, int E) {
  std::vector<int> y(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    y[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(E));
    idx /= static_cast<std::size_t>(E);
  }
  return y;
}

// Test functional of leaf types, branch types and the first leaf height.
double testF(const std::vector<int>& leafTypes, const std::vector<int>& branchTypes, int l1) {
  double v = 1.0 + 0.25 * l1;
  for (int t : leafTypes) v *= t == 0 ? 1.5 : 0.5;
  for (int t : branchTypes) v *= t == 0 ? 2.0 : 0.75;
  return v;
}

}  // namespace

TEST(Kernel, BinaryGaltonWatsonUnitPsi) {
  SpineKernel k = SpineKernel::build(models::binaryGaltonWatson(), PsiPreset::Unit);
  EXPECT_DOUBLE_EQ(k.lambda(0), 1.0);
  EXPECT_DOUBLE_EQ(k.m(2, 0), 1.0);
  EXPECT_DOUBLE_EQ(k.transition()(0, 0), 1.0);
  EXPECT_EQ(k.m(3, 0), 0.0);
}

TEST(Kernel, FactorialMomentOfSingleBrood) {
  Model m({"a", "b"}, {{{1.0, {0, 0, 1}}}, {{1.0, {}}}});
  SpineKernel k = SpineKernel::build(m, std::vector<double>{1.0, 2.0});
  EXPECT_DOUBLE_EQ(k.m(2, 0), 10.0);
  EXPECT_DOUBLE_EQ(2 * elementarySymmetric({1, 1, 2}, 2), 10.0);
  EXPECT_DOUBLE_EQ(elementarySymmetric({1, 1, 2}, 0), 1.0);
}

TEST(Kernel, SymmetricHarmonicChi) {
  SpineKernel k = SpineKernel::build(models::twoTypeSymmetric(), PsiPreset::Harmonic);
  for (int x = 0; x < 2; ++x) {
    EXPECT_NEAR(k.lambda(x), 1.0, 1e-10);
    const auto& c = k.chi(2, x);  // AA, AB, BA, BB
    EXPECT_NEAR(c[0], 0.0, 1e-15);
    EXPECT_NEAR(c[1], 0.5, 1e-12);
    EXPECT_NEAR(c[2], 0.5, 1e-12);
    EXPECT_NEAR(c[3], 0.0, 1e-15);
  }
}

TEST(Kernel, RejectsNonpositivePsi) {
  EXPECT_THROW(SpineKernel::build(models::twoTypeSymmetric(), std::vector<double>{1.0, 0.0}), InvalidInput);
  EXPECT_THROW(SpineKernel::build(models::twoTypeSymmetric(), std::vector<double>{1.0}), InvalidInput);
}

TEST(Kernel, AgreesWithDefinitions) {
  for (const Model& m : spineModels())
    for (PsiPreset preset : {PsiPreset::Unit, PsiPreset::Harmonic}) {
      SpineKernel k = SpineKernel::build(m, preset);
      const int E = static_cast<int>(m.typeCount());
      const auto& psi = k.psi();
      for (int x = 0; x < E; ++x) {
        EXPECT_NEAR(k.transition().row(x).sum(), 1.0, 1e-12);
        EXPECT_NEAR(k.lambda(x), oracle::factorialMoment(m, psi, 1, x) / psi[x], 1e-12);
        for (int d = 1; d <= std::min(4, k.maxDegree()); ++d) {
          EXPECT_NEAR(k.m(d, x), oracle::factorialMoment(m, psi, d, x), 1e-12);
          const auto& c = k.chi(d, x);
          ASSERT_EQ(c.size(), static_cast<std::size_t>(std::pow(E, d)));
          const double total = std::accumulate(c.begin(), c.end(), 0.0);
          EXPECT_NEAR(total, k.m(d, x) > 0 ? 1.0 : 0.0, 1e-12);
          for (std::size_t i = 0; i < c.size(); ++i) {
            const auto y = unflatten(i, d, E);
            EXPECT_NEAR(c[i], oracle::chi(m, psi, d, x, y), 1e-12);
            EXPECT_NEAR(k.chiMass(d, x)[i], k.m(d, x) * c[i], 1e-12);
            // exchangeability: reversing the tuple leaves the law unchanged
            auto r = y;
            std::reverse(r.begin(), r.end());
            std::size_t j = 0;
            for (int t : r) j = j * static_cast<std::size_t>(E) + static_cast<std::size_t>(t);
            EXPECT_NEAR(c[i], c[j], 1e-12);
          }
        }
        for (int y = 0; y < E; ++y) {
          EXPECT_NEAR(k.chi(1, x)[static_cast<std::size_t>(y)], k.transition()(x, y), 1e-12);
          EXPECT_NEAR(k.segment()(x, y), k.lambda(x) * k.transition()(x, y), 1e-12);
        }
      }
      if (preset == PsiPreset::Harmonic && eigenpair(m).critical())
        for (int x = 0; x < E; ++x) EXPECT_NEAR(k.lambda(x), 1.0, 1e-10);
    }
}

TEST(Kernel, ElementarySymmetricMatchesTupleSums) {
  std::vector<double> w{0.5, 1.0, 2.0, 3.0, 1.25};
  std::vector<int> idx{0, 1, 2, 3, 4};
  double fact = 1;
  for (int d = 1; d <= 4; ++d) {
    fact *= d;
    EXPECT_NEAR(fact * elementarySymmetric(w, d), oracle::orderedTupleSum(idx, w, d), 1e-10);
  }
}

TEST(Kernel, JsonDump) {
  auto j = SpineKernel::build(models::twoTypeAsymmetric(), PsiPreset::Harmonic).toJson();
  EXPECT_TRUE(j.contains("psi"));
  EXPECT_TRUE(j.contains("lambda"));
}

TEST(Delta, Examples) {
  Model asym = models::twoTypeAsymmetric();
  SpineKernel unit = SpineKernel::build(asym, PsiPreset::Unit);
  SpineKernel harm = SpineKernel::build(asym, PsiPreset::Harmonic);
  for (int x = 0; x < 2; ++x) {
    MarkedTree single{PlanarTree(), {{Vertex{}, x}}};
    EXPECT_NEAR(deltaBias(unit, single), 1.0 / unit.psi(x), 1e-14);
    EXPECT_NEAR(deltaBias(harm, single), 1.0 / harm.psi(x), 1e-14);
  }
  MarkedTree branch{PlanarTree::path(3), {{Vertex{}, 0}, {Vertex{1}, 1}, {Vertex{1, 1}, 0}, {Vertex{1, 1, 1}, 1}}};
  EXPECT_NEAR(deltaBias(harm, branch), 13.0 / 8, 1e-10);

  SpineKernel bgw = SpineKernel::build(models::binaryGaltonWatson(), PsiPreset::Unit);
  MarkedTree cherry{PlanarTree::parse("(()())"), {{Vertex{}, 0}, {Vertex{1}, 0}, {Vertex{2}, 0}}};
  EXPECT_DOUBLE_EQ(deltaBias(bgw, cherry), 0.5);
}

TEST(Delta, MatchesLiteralProductOnRandomTrees) {
  for (const Model& m : spineModels())
    for (PsiPreset preset : {PsiPreset::Unit, PsiPreset::Harmonic}) {
      SpineKernel k = SpineKernel::build(m, preset);
      for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        MarkedTree t = simulate(m, 0, 4, seed);
        EXPECT_NEAR(deltaBias(k, t), oracle::literalDelta(m, k.psi(), t), 1e-10 * (1 + oracle::literalDelta(m, k.psi(), t)));
      }
    }
}

TEST(QExpectation, SingleTypeAndManyToOne) {
  SpineKernel bgw = SpineKernel::build(models::binaryGaltonWatson(), PsiPreset::Unit);
  for (int n = 0; n <= 6; ++n)
    EXPECT_NEAR(qExpectation(bgw, TreeShape{{n}, {}}, 0, functionals::one(), false), 1.0, 1e-14);

  for (const Model& m : spineModels()) {
    Eigen::MatrixXd M = oracle::meanMatrix(m);
    const int E = static_cast<int>(m.typeCount());
    Eigen::VectorXd f(E);
    std::vector<double> fw(static_cast<std::size_t>(E));
    for (int y = 0; y < E; ++y) f(y) = fw[static_cast<std::size_t>(y)] = 2.0 - 0.6 * y;
    for (PsiPreset preset : {PsiPreset::Unit, PsiPreset::Harmonic}) {
      SpineKernel k = SpineKernel::build(m, preset);
      Eigen::VectorXd Mn = f;
      for (int n = 0; n <= 6; ++n) {
        for (int x = 0; x < E; ++x)
          EXPECT_NEAR(k.psi(x) * qExpectation(k, TreeShape{{n}, {}}, x, functionals::leafWeights(fw), true), Mn(x), 1e-12);
        Mn = M * Mn;
      }
    }
  }
}

TEST(QExpectation, BinaryCherry) {
  SpineKernel bgw = SpineKernel::build(models::binaryGaltonWatson(), PsiPreset::Unit);
  EXPECT_DOUBLE_EQ(qExpectation(bgw, TreeShape{{1, 1}, {0}}, 0, functionals::one(), true), 0.5);
}

TEST(QExpectation, MatchesTreeIndexedEnumeration) {
  for (const Model& m : {models::twoTypeAsymmetric(), quad()})
    for (PsiPreset preset : {PsiPreset::Unit, PsiPreset::Harmonic}) {
      SpineKernel k = SpineKernel::build(m, preset);
      QEvaluator biased(k, true), plain(k, false);
      ShapeFunctional F = [](const MarkedShape& ms) { return testF(ms.leafTypes, ms.branchTypes, ms.shape.l[0]); };
      auto Fo = [](const MarkedTree& t) {
        std::vector<int> lt, bt;
        for (const auto& [v, d] : t.tree.degrees()) {
          if (d == 0) lt.push_back(t.mark(v));
          if (d >= 2) bt.push_back(t.mark(v));
        }
        return testF(lt, bt, static_cast<int>(t.tree.leaves().front().generation()));
      };
      for (int kk = 1; kk <= 3; ++kk)
        for (const auto& s : enumerateShapes(kk, 2))
          for (int x = 0; x < 2; ++x) {
            const double ob = oracle::treeIndexedExpectation(m, k.psi(), s, x, Fo, true);
            const double op = oracle::treeIndexedExpectation(m, k.psi(), s, x, Fo, false);
            EXPECT_NEAR(biased.expectation(s, x, F), ob, 1e-12 * (1 + ob)) << shapeToString(s);
            EXPECT_NEAR(plain.expectation(s, x, F), op, 1e-12 * (1 + op)) << shapeToString(s);
          }
    }
}

TEST(QExpectation, HistoryFunctionalRejected) {
  SpineKernel k = SpineKernel::build(models::twoTypeSymmetric(), PsiPreset::Unit);
  Functional hist = HistoryFunctional([](const MarkedTree&) { return 1.0; });
  EXPECT_THROW(qExpectation(k, TreeShape{{2}, {}}, 0, hist, true), InteriorMarksRequired);
  Functional shape = functionals::one();
  EXPECT_NO_THROW(qExpectation(k, TreeShape{{2}, {}}, 0, shape, true));
}

TEST(QExpectation, PowerCacheIsConsistent) {
  Eigen::MatrixXd B(2, 2);
  B << 0.3, 0.7, 0.2, 0.9;
  MatrixPowerCache c(B);
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(2, 2);
  for (int n = 0; n <= 20; ++n) {
    EXPECT_TRUE(c.power(n).isApprox(P, 1e-12) || (c.power(n) - P).norm() < 1e-14);
    P = P * B;
  }
  EXPECT_GE(c.maxExponent(), 20);
}

TEST(ManyToOne, MatchesEnumerationWithHistory) {
  for (const Model& m : {models::binaryGaltonWatson(), models::twoTypeSymmetric(), models::twoTypeAsymmetric()})
    for (PsiPreset preset : {PsiPreset::Unit, PsiPreset::Harmonic}) {
      SpineKernel k = SpineKernel::build(m, preset);
      // f depends on the whole ancestral line
      PathFunctional f = [&](const std::vector<int>& h) {
        double v = 1;
        for (std::size_t i = 0; i < h.size(); ++i) v *= 1.0 + 0.3 * h[i] + 0.1 * static_cast<double>(i);
        return v;
      };
      for (int x = 0; x < static_cast<int>(m.typeCount()); ++x)
        for (int n = 0; n <= 3; ++n) {
          double direct = 0;
          forEachPopulation(m, x, n, [&](double p, const FlatPopulation& pop) {
            for (std::size_t i = 0; i < pop.nodes.size(); ++i) {
              if (pop.nodes[i].generation != n) continue;
              std::vector<int> hist;
              for (int j = static_cast<int>(i); j >= 0; j = pop.nodes[static_cast<std::size_t>(j)].parent)
                hist.insert(hist.begin(), pop.nodes[static_cast<std::size_t>(j)].type);
              direct += p * f(hist);
            }
          });
          EXPECT_NEAR(manyToOne(k, x, n, f), direct, 1e-12);
        }
    }
}
