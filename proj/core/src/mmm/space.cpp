#include "branchlab/mmm/space.hpp"

#include <algorithm>
#include <cmath>

#include "branchlab/errors.hpp"

namespace branchlab {

FiniteMmmSpace::FiniteMmmSpace(std::shared_ptr<const Metric> metric, std::size_t root, std::vector<double> mass,
                               std::vector<int> marks)
    : metric_(std::move(metric)), root_(root), mass_(std::move(mass)), marks_(std::move(marks)) {
  if (!metric_) throw InvalidInput("mmm-space needs a metric");
  if (mass_.size() != metric_->size() || marks_.size() != metric_->size())
    throw InvalidInput("mmm-space: mass/mark vectors must match the point count");
  if (root_ >= mass_.size()) throw InvalidInput("mmm-space: root out of range");
  for (double m : mass_)
    if (!(m >= 0)) throw InvalidInput("mmm-space: masses must be nonnegative");
}

double FiniteMmmSpace::totalMass() const {
  double s = 0;
  for (double m : mass_) s += m;
  return s;
}

std::vector<std::size_t> FiniteMmmSpace::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < mass_.size(); ++i)
    if (mass_[i] > 0) s.push_back(i);
  return s;
}

bool FiniteMmmSpace::isValid(double tol) const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(distance(i, i)) > tol) return false;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = distance(i, j);
      if (d < -tol || std::abs(d - distance(j, i)) > tol) return false;
      for (std::size_t m = 0; m < n; ++m)
        if (d > distance(i, m) + distance(m, j) + tol) return false;
    }
  }
  return true;
}

nlohmann::json FiniteMmmSpace::toJson() const {
  std::vector<double> d;
  d.reserve(size() * size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) d.push_back(distance(i, j));
  return {{"points", size()}, {"root", root_}, {"dist", d}, {"mass", mass_}, {"mark", marks_}};
}

FiniteMmmSpace FiniteMmmSpace::fromJson(const nlohmann::json& j) {
  for (const auto& [key, _] : j.items())
    if (key != "points" && key != "root" && key != "dist" && key != "mass" && key != "mark")
      throw InvalidInput("unknown mmm-space key '" + key + "'");
  const auto n = j.at("points").get<std::size_t>();
  auto metric = std::make_shared<DenseMetric>(n, j.at("dist").get<std::vector<double>>());
  return FiniteMmmSpace(metric, j.at("root").get<std::size_t>(), j.at("mass").get<std::vector<double>>(),
                        j.at("mark").get<std::vector<int>>());
}

namespace {

struct IndexedTree {
  std::vector<Vertex> vertices;
  std::shared_ptr<const TreeMetric> metric;
};

IndexedTree indexTree(const MarkedTree& tree, double edgeScale) {
  IndexedTree it;
  it.vertices = tree.tree.vertices();
  std::map<Vertex, int> index;
  for (std::size_t i = 0; i < it.vertices.size(); ++i) index[it.vertices[i]] = static_cast<int>(i);
  std::vector<int> parent(it.vertices.size(), -1);
  std::vector<double> depth(it.vertices.size(), 0.0);
  for (std::size_t i = 0; i < it.vertices.size(); ++i) {
    const Vertex& v = it.vertices[i];
    if (!v.isRoot()) parent[i] = index.at(v.parent());
    depth[i] = static_cast<double>(v.generation()) * edgeScale;
  }
  it.metric = std::make_shared<TreeMetric>(std::move(parent), std::move(depth));
  return it;
}

}  // namespace

FiniteMmmSpace treeToMmm(const MarkedTree& tree, double edgeScale, double massScale) {
  IndexedTree it = indexTree(tree, edgeScale);
  std::vector<int> marks;
  for (const auto& v : it.vertices) marks.push_back(tree.mark(v));
  return FiniteMmmSpace(it.metric, 0, std::vector<double>(it.vertices.size(), massScale), std::move(marks));
}

FiniteMmmSpace generationSlice(const MarkedTree& tree, int n, double edgeScale, double massScale) {
  IndexedTree it = indexTree(tree, edgeScale);
  std::vector<std::size_t> keep{0};
  std::vector<double> mass{0.0};
  std::vector<int> marks{tree.mark(it.vertices[0])};
  for (std::size_t i = 0; i < it.vertices.size(); ++i)
    if (static_cast<int>(it.vertices[i].generation()) == n && n > 0) {
      keep.push_back(i);
      mass.push_back(massScale);
      marks.push_back(tree.mark(it.vertices[i]));
    }
  if (n == 0) mass[0] = massScale;
  return FiniteMmmSpace(std::make_shared<SubsetMetric>(it.metric, std::move(keep)), 0, std::move(mass),
                        std::move(marks));
}

FiniteMmmSpace restrictBall(const FiniteMmmSpace& space, double R) {
  std::vector<std::size_t> keep;
  std::vector<double> mass;
  std::vector<int> marks;
  std::size_t root = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i != space.root() && !(space.distance(space.root(), i) <= R)) continue;
    if (i == space.root()) root = keep.size();
    keep.push_back(i);
    mass.push_back(space.mass(i));
    marks.push_back(space.mark(i));
  }
  return FiniteMmmSpace(std::make_shared<SubsetMetric>(space.metric(), std::move(keep)), root, std::move(mass),
                        std::move(marks));
}

double height(const FiniteMmmSpace& space) {
  double h = 0;
  for (auto i : space.support()) h = std::max(h, space.distance(space.root(), i));
  return h;
}

double lowerMass(const FiniteMmmSpace& space, double delta) {
  const auto supp = space.support();
  if (supp.empty()) return 0.0;
  double best = space.totalMass();
  for (auto i : supp) {
    double m = 0;
    for (auto j : supp)
      if (space.distance(i, j) <= delta) m += space.mass(j);
    best = std::min(best, m);
  }
  return best;
}

}  // namespace branchlab
