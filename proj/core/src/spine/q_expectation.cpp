#include "branchlab/spine/q_expectation.hpp"

#include "branchlab/errors.hpp"

namespace branchlab {

MatrixPowerCache::MatrixPowerCache(Eigen::MatrixXd base) : base_(std::move(base)) {
  if (base_.rows() != base_.cols()) throw InvalidInput("matrix power cache needs a square matrix");
  powers_.push_back(Eigen::MatrixXd::Identity(base_.rows(), base_.cols()));
}

const Eigen::MatrixXd& MatrixPowerCache::power(int n) const {
  if (n < 0) throw InvalidInput("negative matrix power");
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(powers_.size()) <= n) powers_.push_back(powers_.back() * base_);
  return powers_[static_cast<std::size_t>(n)];
}

int MatrixPowerCache::maxExponent() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<int>(powers_.size()) - 1;
}

namespace {

// Root, branch points and leaves of the decoded shape in preorder.
struct SkeletonNode {
  int depth = 0;
  int parent = -1;
  std::vector<int> kids;
  int leafIndex = -1;
  int branchIndex = -1;
};

void buildSkeleton(const TreeShape& s, int offset, int parent, std::vector<SkeletonNode>& nodes, int& leaves,
                   int& branches) {
  const int me = static_cast<int>(nodes.size());
  nodes.push_back({});
  nodes[static_cast<std::size_t>(me)].parent = parent;
  if (parent >= 0) nodes[static_cast<std::size_t>(parent)].kids.push_back(me);
  if (s.k() == 1) {
    nodes[static_cast<std::size_t>(me)].depth = offset + s.l[0];
    nodes[static_cast<std::size_t>(me)].leafIndex = leaves++;
    return;
  }
  const ShapeDecomposition d = decomposeShape(s);
  nodes[static_cast<std::size_t>(me)].depth = offset + d.stem;
  nodes[static_cast<std::size_t>(me)].branchIndex = branches++;
  for (const auto& part : d.parts) buildSkeleton(part, offset + d.stem + 1, me, nodes, leaves, branches);
}

}  // namespace

QEvaluator::QEvaluator(const SpineKernel& kernel, bool withBias)
    : kernel_(kernel), withBias_(withBias), cache_(kernel.segment()), plain_(kernel.transition()) {}

double QEvaluator::expectation(const TreeShape& shape, int x0, const Functional& f) const {
  if (!std::holds_alternative<ShapeFunctional>(f)) throw InteriorMarksRequired();
  return expectation(shape, x0, std::get<ShapeFunctional>(f));
}

double QEvaluator::expectation(const TreeShape& shape, int x0, const ShapeFunctional& f) const {
  shape.validate();
  const int E = static_cast<int>(kernel_.typeCount());
  if (x0 < 0 || x0 >= E) throw InvalidInput("unknown start type");

  std::vector<SkeletonNode> nodes;
  int nLeaves = 0, nBranches = 0;
  buildSkeleton(shape, 0, -1, nodes, nLeaves, nBranches);
  const MatrixPowerCache& seg = withBias_ ? cache_ : plain_;

  MarkedShape ms;
  ms.shape = shape;
  ms.leafTypes.assign(static_cast<std::size_t>(nLeaves), 0);
  ms.branchTypes.assign(static_cast<std::size_t>(nBranches), 0);
  std::vector<int> types(nodes.size(), 0);

  // Weight of a branch point z given the types of z and of the next skeleton nodes below
  // each of its children: sum over the children's own types y of
  // (tuple law at z)(y) * prod_i Seg^{L_i}(y_i, t_i).
  auto branchWeight = [&](const SkeletonNode& z, int tz) {
    const int d = static_cast<int>(z.kids.size());
    if (d > kernel_.maxDegree()) return 0.0;
    const std::vector<double>& table = withBias_ ? kernel_.chiMass(d, tz) : kernel_.chi(d, tz);
    double scale = 1;
    if (withBias_) {
      for (int i = 2; i <= d; ++i) scale *= i;
      scale = 1.0 / (scale * kernel_.psi(tz));
    }
    std::vector<const Eigen::MatrixXd*> mats;
    for (int c : z.kids) mats.push_back(&seg.power(nodes[static_cast<std::size_t>(c)].depth - z.depth - 1));
    double total = 0;
    for (std::size_t flat = 0; flat < table.size(); ++flat) {
      if (table[flat] == 0.0) continue;
      double w = table[flat];
      std::size_t rest = flat;
      for (int i = d - 1; i >= 0 && w != 0.0; --i) {
        const auto y = static_cast<Eigen::Index>(rest % static_cast<std::size_t>(E));
        rest /= static_cast<std::size_t>(E);
        w *= (*mats[static_cast<std::size_t>(i)])(y, types[static_cast<std::size_t>(z.kids[static_cast<std::size_t>(i)])]);
      }
      total += w;
    }
    return total * scale;
  };

  const Eigen::MatrixXd& rootSeg = seg.power(nodes[0].depth);
  double acc = 0;
  auto rec = [&](auto&& self, std::size_t j, double weight) -> void {
    if (j == nodes.size()) {
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].leafIndex >= 0) ms.leafTypes[static_cast<std::size_t>(nodes[i].leafIndex)] = types[i];
        if (nodes[i].branchIndex >= 0) ms.branchTypes[static_cast<std::size_t>(nodes[i].branchIndex)] = types[i];
      }
      const double fv = f(ms);
      if (fv != 0.0) acc += weight * fv;
      return;
    }
    const SkeletonNode& node = nodes[j];
    for (int t = 0; t < E; ++t) {
      double w = weight;
      if (node.parent < 0) w *= rootSeg(x0, t);
      if (node.leafIndex >= 0 && withBias_) w /= kernel_.psi(t);
      if (w == 0.0) continue;
      types[j] = t;
      if (node.parent >= 0) {
        const SkeletonNode& p = nodes[static_cast<std::size_t>(node.parent)];
        if (p.kids.back() == static_cast<int>(j)) w *= branchWeight(p, types[static_cast<std::size_t>(node.parent)]);
        if (w == 0.0) continue;
      }
      self(self, j + 1, w);
    }
  };
  rec(rec, 0, 1.0);
  return acc;
}

double qExpectation(const SpineKernel& kernel, const TreeShape& shape, int x0, const Functional& f, bool withBias) {
  QEvaluator q(kernel, withBias);
  return q.expectation(shape, x0, f);
}

}  // namespace branchlab
