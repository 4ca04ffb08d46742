#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace branchlab;

namespace {

TreeShape randomShape(std::mt19937_64& rng, int maxK, int maxHeight) {
  std::uniform_int_distribution<int> kd(1, maxK), ld(1, maxHeight);
  TreeShape s;
  const int k = kd(rng);
  for (int i = 0; i < k; ++i) s.l.push_back(k == 1 ? ld(rng) - 1 : ld(rng));
  for (int i = 0; i + 1 < k; ++i) {
    std::uniform_int_distribution<int> bd(0, std::min(s.l[i], s.l[i + 1]) - 1);
    s.b.push_back(bd(rng));
  }
  return s;
}

}  // namespace

TEST(Vertex, OrderAndAncestry) {
  Vertex a{1}, b{1, 2}, c{2};
  EXPECT_LT(Vertex{}, a);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_TRUE(a.isAncestorOf(b));
  EXPECT_TRUE(a.isAncestorOf(a));
  EXPECT_FALSE(b.isAncestorOf(a));
  EXPECT_FALSE(a.comparable(c));
  EXPECT_EQ(mrca(b, Vertex{1, 3, 1}), a);
  EXPECT_EQ(mrca(b, c), Vertex{});
  EXPECT_EQ(b.toString(), "(1,2)");
  EXPECT_EQ(b.parent(), a);
  EXPECT_THROW(Vertex{}.parent(), InvalidInput);
}

TEST(PlanarTree, ValidationRejectsBrokenSets) {
  EXPECT_THROW(PlanarTree::fromVertices({Vertex{}, Vertex{2}}), InvalidInput);  // gap in children
  EXPECT_THROW(PlanarTree::fromVertices({Vertex{}, Vertex{1, 1}}), InvalidInput);  // not prefix-closed
  EXPECT_NO_THROW(PlanarTree::fromVertices({Vertex{}, Vertex{1}, Vertex{2}}));
  EXPECT_THROW(PlanarTree::parse("(()"), InvalidInput);
}

TEST(PlanarTree, ParseRoundTripAndDerivedQuantities) {
  for (const auto& s : oracle::allTrees(4, 3)) {
    PlanarTree t = PlanarTree::parse(s);
    EXPECT_NO_THROW(t.validate());
    EXPECT_EQ(t.toString(), s);
    std::size_t leaves = 0;
    for (const auto& [v, d] : t.degrees()) leaves += d == 0;
    EXPECT_EQ(t.leafCount(), leaves);
  }
}

TEST(Shape, DecodeExamples) {
  PlanarTree p = decodeHeights({{1}, {}});
  EXPECT_EQ(p, PlanarTree::fromVertices({Vertex{}, Vertex{1}}));

  PlanarTree cherry = decodeHeights({{2, 2}, {0}});
  EXPECT_EQ(cherry, PlanarTree::fromVertices({Vertex{}, Vertex{1}, Vertex{1, 1}, Vertex{2}, Vertex{2, 1}}));
  ASSERT_EQ(cherry.branchPoints().size(), 1u);
  EXPECT_TRUE(cherry.branchPoints()[0].isRoot());

  TreeShape s{{3, 4, 2}, {1, 0}};
  PlanarTree t = decodeHeights(s);
  EXPECT_EQ(encodeHeights(t), s);
  std::set<std::size_t> gens;
  for (const auto& v : t.branchPoints()) gens.insert(v.generation());
  EXPECT_EQ(gens, (std::set<std::size_t>{0, 1}));
  const auto& L = t.leaves();
  ASSERT_EQ(L.size(), 3u);
  EXPECT_EQ(L[0].generation(), 3u);
  EXPECT_EQ(L[1].generation(), 4u);
  EXPECT_EQ(L[2].generation(), 2u);
  EXPECT_EQ(mrca(L[0], L[1]).generation(), 1u);
  EXPECT_EQ(mrca(L[1], L[2]).generation(), 0u);

  EXPECT_EQ(decodeHeights({{0}, {}}), PlanarTree());
  EXPECT_THROW(decodeHeights({{2, 2}, {2}}), InvalidInput);
  EXPECT_THROW(decodeHeights({{2, 2}, {}}), InvalidInput);
}

TEST(Shape, EncodeExamples) {
  EXPECT_EQ(encodeHeights(PlanarTree::path(3)), (TreeShape{{3}, {}}));
  EXPECT_EQ(encodeHeights(PlanarTree::parse("(()())")), (TreeShape{{1, 1}, {0}}));
}

// Exhaustive bijection on trees with at most 3 leaves and height at most 4.
TEST(Shape, ExhaustiveRoundTrip) {
  const auto trees = oracle::allTrees(4, 3);
  std::set<std::string> seen;
  for (const auto& s : trees) {
    PlanarTree t = PlanarTree::parse(s);
    TreeShape sh = encodeHeights(t);
    ASSERT_TRUE(sh.valid()) << s;
    EXPECT_EQ(decodeHeights(sh), t) << s;
    seen.insert(s);
  }
  EXPECT_EQ(seen.size(), trees.size());
  std::size_t shapes = 0;
  for (int k = 1; k <= 3; ++k)
    forEachShape(k, 4, [&](const TreeShape& sh) {
      ++shapes;
      PlanarTree t = decodeHeights(sh);
      EXPECT_EQ(encodeHeights(t), sh);
      EXPECT_TRUE(seen.count(t.toString())) << shapeToString(sh);
    });
  EXPECT_EQ(shapes, trees.size());
}

TEST(FirstBranch, Examples) {
  FirstBranch c = decomposeFirstBranch(PlanarTree::parse("(()())"));
  EXPECT_EQ(c.stem, 0);
  EXPECT_EQ(c.blocks, (std::vector<int>{1, 1}));
  ASSERT_EQ(c.subtrees.size(), 2u);
  EXPECT_EQ(c.subtrees[0], PlanarTree());
  EXPECT_EQ(composeFirstBranch(c.stem, c.subtrees), PlanarTree::parse("(()())"));

  PlanarTree cherry2 = decodeHeights({{2, 2}, {0}});
  FirstBranch c2 = decomposeFirstBranch(cherry2);
  EXPECT_EQ(c2.subtrees[0], PlanarTree::path(1));
  EXPECT_EQ(c2.subtrees[1], PlanarTree::path(1));

  FirstBranch star = decomposeFirstBranch(decodeHeights({{1, 1, 1}, {0, 0}}));
  EXPECT_EQ(star.stem, 0);
  EXPECT_EQ(star.blocks, (std::vector<int>{1, 1, 1}));
  for (const auto& s : star.subtrees) EXPECT_EQ(s.size(), 1u);

  EXPECT_THROW(decomposeFirstBranch(PlanarTree::path(3)), InvalidInput);
}

// Three subtrees at the first branch point, leaf partition {1,2},{3},{4,5}.
TEST(FirstBranch, ThreeSubtreesAtFirstBranchPoint) {
  PlanarTree t = decodeHeights({{4, 3, 2, 3, 3}, {2, 1, 1, 2}});
  FirstBranch f = decomposeFirstBranch(t);
  EXPECT_EQ(f.stem, 1);
  EXPECT_EQ(f.blocks, (std::vector<int>{2, 1, 2}));
  ASSERT_EQ(f.subtrees.size(), 3u);
  const Vertex w = mrca(t.leaves().front(), t.leaves().back());
  for (std::size_t i = 0; i < 3; ++i) {
    std::set<Vertex> expect;
    for (const auto& v : t.vertices())
      if (w.child(static_cast<int>(i + 1)).isAncestorOf(v)) {
        std::vector<int> tail(v.word().begin() + static_cast<long>(w.generation() + 1), v.word().end());
        expect.insert(Vertex(tail));
      }
    EXPECT_EQ(f.subtrees[i], PlanarTree::fromVertices(expect));
  }
}

TEST(FirstBranch, ExhaustiveRoundTrip) {
  for (const auto& s : oracle::allTrees(4, 3)) {
    PlanarTree t = PlanarTree::parse(s);
    if (t.leafCount() < 2) continue;
    FirstBranch f = decomposeFirstBranch(t);
    int sum = 0;
    for (int b : f.blocks) sum += b;
    EXPECT_EQ(sum, static_cast<int>(t.leafCount()));
    EXPECT_GE(f.blocks.size(), 2u);
    EXPECT_EQ(composeFirstBranch(f.stem, f.subtrees), t) << s;

    ShapeDecomposition d = decomposeShape(encodeHeights(t));
    EXPECT_EQ(d.stem, f.stem);
    EXPECT_EQ(d.blocks, f.blocks);
    for (std::size_t i = 0; i < d.parts.size(); ++i) EXPECT_EQ(decodeHeights(d.parts[i]), f.subtrees[i]);
    EXPECT_EQ(composeShape(d.stem, d.parts), encodeHeights(t));
  }
}

TEST(Spanned, Examples) {
  PlanarTree path = PlanarTree::path(3);
  SpannedTree s = subtreeSpanned(path, {Vertex{1}, Vertex{1}});
  EXPECT_FALSE(s.fullRank);
  EXPECT_EQ(s.tree, PlanarTree::path(1));

  PlanarTree cherry = PlanarTree::parse("(()())");
  SpannedTree c = subtreeSpanned(cherry, {Vertex{1}, Vertex{2}});
  EXPECT_TRUE(c.fullRank);
  EXPECT_EQ(c.tree, cherry);

  EXPECT_THROW(subtreeSpanned(cherry, {Vertex{3}}), InvalidInput);
}

TEST(Spanned, AgreesWithPrefixUnionOnRandomTuples) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 300; ++rep) {
    PlanarTree t = decodeHeights(randomShape(rng, 5, 5));
    const auto vs = t.vertices();
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    std::vector<Vertex> tuple{vs[pick(rng)], vs[pick(rng)], vs[pick(rng)]};
    SpannedTree s = subtreeSpanned(t, tuple);
    EXPECT_EQ(s.tree.toString(), oracle::prefixUnionString(tuple));
    EXPECT_EQ(s.fullRank, oracle::prefixUnionLeaves(tuple) == 3);
    for (std::size_t i = 0; i < tuple.size(); ++i) EXPECT_EQ(s.origin.at(s.image[i]), tuple[i]);
  }
}

TEST(Distance, Examples) {
  DistanceMatrix d = distanceMatrix(TreeShape{{3, 4}, {1}});
  EXPECT_EQ(d(0, 1), 3);
  EXPECT_EQ(d(0, 2), 4);
  EXPECT_EQ(d(1, 2), 5);
  for (int n = 1; n < 6; ++n)
    for (int m = 0; m < n; ++m) EXPECT_EQ(distanceMatrix(TreeShape{{n, n}, {m}})(1, 2), 2 * (n - m));
  DistanceMatrix printed = distanceMatrix(TreeShape{{3, 4}, {1}}, DistanceConvention::AsPrinted);
  EXPECT_EQ(printed(1, 2), 6);
}

TEST(Distance, MatchesGraphDistanceOnRandomShapes) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 1000; ++rep) {
    TreeShape s = randomShape(rng, 5, 6);
    DistanceMatrix d = distanceMatrix(s);
    ASSERT_TRUE(d.isValid());
    PlanarTree t = decodeHeights(s);
    std::vector<Vertex> pts{Vertex{}};
    for (const auto& v : t.leaves()) pts.push_back(v);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j)
        ASSERT_EQ(d(i, j), oracle::bfsDistance(t, pts[i], pts[j])) << shapeToString(s);
  }
}

TEST(Distance, ValidityChecks) {
  DistanceMatrix d(3);
  d.set(0, 1, 1);
  d.set(0, 2, 1);
  d.set(1, 2, 3);
  EXPECT_FALSE(d.isValid());
  d.set(1, 2, 2);
  EXPECT_TRUE(d.isValid());
  DistanceMatrix p = d.permuted({2, 0, 1});
  EXPECT_EQ(p(0, 1), d(2, 0));
  EXPECT_EQ(p(1, 2), d(0, 1));
}

TEST(Enumerate, CountsAndUniqueness) {
  EXPECT_EQ(enumerateShapes(1, 2).size(), 3u);
  std::uint64_t direct = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) direct += static_cast<std::uint64_t>(std::min(a, b));
  EXPECT_EQ(direct, 5u);
  EXPECT_EQ(enumerateShapes(2, 2).size(), direct);

  std::size_t trees3 = 0;
  for (const auto& s : oracle::allTrees(2, 3)) trees3 += PlanarTree::parse(s).leafCount() == 3;
  EXPECT_EQ(enumerateShapes(3, 2).size(), trees3);

  for (int k = 1; k <= 4; ++k)
    for (int R = 0; R <= 5; ++R) {
      auto all = enumerateShapes(k, R);
      std::set<std::pair<std::vector<int>, std::vector<int>>> uniq;
      for (const auto& s : all) {
        EXPECT_TRUE(s.valid());
        EXPECT_LE(s.height(), R);
        uniq.insert({s.l, s.b});
      }
      EXPECT_EQ(uniq.size(), all.size());
      EXPECT_EQ(countShapes(k, R), all.size()) << k << " " << R;
    }
}

TEST(Enumerate, RangesPartitionTheGrid) {
  std::vector<TreeShape> whole = enumerateShapes(3, 4), parts;
  for (int l1 = 0; l1 <= 4; ++l1)
    forEachShape(3, 4, [&](const TreeShape& s) { parts.push_back(s); }, ShapeRange{l1, l1});
  EXPECT_EQ(parts, whole);
}

TEST(Deficient, Examples) {
  EXPECT_EQ(countDeficientTuples(PlanarTree::path(2), 2), 9u);
  // Pairs from {root,(1),(2)} whose spanned tree has one leaf: all but ((1),(2)), ((2),(1)).
  EXPECT_EQ(countDeficientTuples(PlanarTree::parse("(()())"), 2), 7u);
  EXPECT_EQ(countDeficientTuples(PlanarTree::parse("((())())"), 1), 0u);
}

TEST(Deficient, MatchesEnumerationAndBound) {
  for (const auto& s : oracle::allTrees(4, 3)) {
    PlanarTree t = PlanarTree::parse(s);
    const auto vs = t.vertices();
    for (int k = 1; k <= 3; ++k) {
      std::uint64_t direct = 0;
      std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
      for (;;) {
        std::vector<Vertex> tuple;
        for (auto i : idx) tuple.push_back(vs[i]);
        direct += oracle::prefixUnionLeaves(tuple) < static_cast<std::size_t>(k);
        std::size_t p = 0;
        while (p < idx.size() && ++idx[p] == vs.size()) idx[p++] = 0;
        if (p == idx.size()) break;
      }
      EXPECT_EQ(countDeficientTuples(t, k), direct) << s << " k=" << k;
      EXPECT_LE(static_cast<double>(direct), deficientTupleBound(t, k));
    }
  }
}
