#include "branchlab/mmm/metric.hpp"

#include <algorithm>

#include "branchlab/errors.hpp"

namespace branchlab {

DenseMetric::DenseMetric(std::size_t n, std::vector<double> rowMajor) : n_(n), d_(std::move(rowMajor)) {
  if (d_.size() != n_ * n_) throw InvalidInput("dense metric needs n*n entries");
}

TreeMetric::TreeMetric(std::vector<int> parent, std::vector<double> depth)
    : parent_(std::move(parent)), depth_(std::move(depth)) {
  const std::size_t n = parent_.size();
  if (depth_.size() != n) throw InvalidInput("tree metric: parent and depth sizes differ");
  level_.assign(n, -1);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t u = v;
    while (level_[u] < 0) {
      stack.push_back(u);
      if (parent_[u] < 0) break;
      if (static_cast<std::size_t>(parent_[u]) >= n) throw InvalidInput("tree metric: parent out of range");
      u = static_cast<std::size_t>(parent_[u]);
      if (stack.size() > n) throw InvalidInput("tree metric: parent array has a cycle");
    }
    while (!stack.empty()) {
      const std::size_t w = stack.back();
      stack.pop_back();
      level_[w] = parent_[w] < 0 ? 0 : level_[static_cast<std::size_t>(parent_[w])] + 1;
    }
  }
  int maxLevel = 0;
  for (int l : level_) maxLevel = std::max(maxLevel, l);
  int logs = 1;
  while ((1 << logs) <= maxLevel) ++logs;
  up_.assign(static_cast<std::size_t>(logs), std::vector<int>(n));
  for (std::size_t v = 0; v < n; ++v) up_[0][v] = parent_[v] < 0 ? static_cast<int>(v) : parent_[v];
  for (std::size_t j = 1; j < up_.size(); ++j)
    for (std::size_t v = 0; v < n; ++v) up_[j][v] = up_[j - 1][static_cast<std::size_t>(up_[j - 1][v])];
}

std::size_t TreeMetric::lca(std::size_t a, std::size_t b) const {
  if (level_[a] < level_[b]) std::swap(a, b);
  int diff = level_[a] - level_[b];
  for (std::size_t j = 0; diff; ++j, diff >>= 1)
    if (diff & 1) a = static_cast<std::size_t>(up_[j][a]);
  if (a == b) return a;
  for (std::size_t j = up_.size(); j-- > 0;)
    if (up_[j][a] != up_[j][b]) {
      a = static_cast<std::size_t>(up_[j][a]);
      b = static_cast<std::size_t>(up_[j][b]);
    }
  if (parent_[a] < 0 || parent_[b] < 0) throw InvalidInput("tree metric: points lie in different components");
  return static_cast<std::size_t>(parent_[a]);
}

double TreeMetric::distance(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return depth_[i] + depth_[j] - 2.0 * depth_[lca(i, j)];
}

SubsetMetric::SubsetMetric(std::shared_ptr<const Metric> base, std::vector<std::size_t> points)
    : base_(std::move(base)), points_(std::move(points)) {
  for (auto p : points_)
    if (p >= base_->size()) throw InvalidInput("subset metric: point out of range");
}

}  // namespace branchlab
