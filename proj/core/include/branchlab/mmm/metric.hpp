#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace branchlab {

class Metric {
 public:
  virtual ~Metric() = default;
  virtual std::size_t size() const = 0;
  virtual double distance(std::size_t i, std::size_t j) const = 0;
};

// Explicit row-major matrix.
class DenseMetric : public Metric {
 public:
  DenseMetric(std::size_t n, std::vector<double> rowMajor);
  std::size_t size() const override { return n_; }
  double distance(std::size_t i, std::size_t j) const override { return d_[i * n_ + j]; }
  const std::vector<double>& data() const { return d_; }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

// Path metric of a rooted tree: d(u, v) = depth(u) + depth(v) - 2 depth(lca(u, v)),
// with lca by binary lifting. depth[] are weighted depths (nonincreasing towards the
// root); parent[root] = -1.
class TreeMetric : public Metric {
 public:
  TreeMetric(std::vector<int> parent, std::vector<double> depth);
  std::size_t size() const override { return parent_.size(); }
  double distance(std::size_t i, std::size_t j) const override;
  std::size_t lca(std::size_t i, std::size_t j) const;
  double depth(std::size_t i) const { return depth_[i]; }

 private:
  std::vector<int> parent_;
  std::vector<double> depth_;
  std::vector<int> level_;
  std::vector<std::vector<int>> up_;
};

// Restriction of another metric to a list of its points.
class SubsetMetric : public Metric {
 public:
  SubsetMetric(std::shared_ptr<const Metric> base, std::vector<std::size_t> points);
  std::size_t size() const override { return points_.size(); }
  double distance(std::size_t i, std::size_t j) const override {
    return base_->distance(points_[i], points_[j]);
  }

 private:
  std::shared_ptr<const Metric> base_;
  std::vector<std::size_t> points_;
};

}  // namespace branchlab
