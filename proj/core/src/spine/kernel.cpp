#include "branchlab/spine/kernel.hpp"

#include <cmath>

#include "branchlab/errors.hpp"
#include "branchlab/process/criticality.hpp"

namespace branchlab {

double elementarySymmetric(const std::vector<double>& values, int d) {
  if (d < 0) return 0;
  std::vector<double> e(static_cast<std::size_t>(d) + 1, 0.0);
  e[0] = 1;
  for (double v : values)
    for (int j = d; j >= 1; --j) e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j - 1)];
  return e[static_cast<std::size_t>(d)];
}

std::vector<double> psiVector(const Model& model, PsiPreset preset) {
  if (preset == PsiPreset::Unit) return std::vector<double>(model.typeCount(), 1.0);
  const Eigenpair ep = eigenpair(model);
  return std::vector<double>(ep.h.data(), ep.h.data() + ep.h.size());
}

SpineKernel SpineKernel::build(const Model& model, const std::vector<double>& psi) { return SpineKernel(model, psi); }

SpineKernel SpineKernel::build(const Model& model, PsiPreset preset) {
  return SpineKernel(model, psiVector(model, preset));
}

SpineKernel::SpineKernel(const Model& model, std::vector<double> psi) : model_(model), psi_(std::move(psi)) {
  const std::size_t n = model_.typeCount();
  if (psi_.size() != n) throw InvalidInput("psi must have one entry per type");
  for (double v : psi_)
    if (!(v > 0) || !std::isfinite(v)) throw InvalidInput("psi must be strictly positive");
  maxDegree_ = model_.maxBrood();
  const auto D = static_cast<std::size_t>(maxDegree_);

  m_.assign(D + 1, std::vector<double>(n, 0.0));
  chi_.assign(D + 1, std::vector<std::vector<double>>(n));
  chiMass_.assign(D + 1, std::vector<std::vector<double>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& a : model_.offspring(static_cast<int>(x))) {
      std::vector<double> w;
      for (int c : a.children) w.push_back(psi_[static_cast<std::size_t>(c)]);
      double fact = 1;
      for (std::size_t d = 0; d <= D; ++d) {
        if (d > 0) fact *= static_cast<double>(d);
        m_[d][x] += a.probability * fact * elementarySymmetric(w, static_cast<int>(d));
      }
    }
  }

  // Tuple tables by direct enumeration of ordered distinct index tuples.
  std::size_t size = 1;
  for (std::size_t d = 0; d <= D; ++d, size *= n) {
    for (std::size_t x = 0; x < n; ++x) {
      auto& mass = chiMass_[d][x];
      mass.assign(size, 0.0);
      for (const auto& a : model_.offspring(static_cast<int>(x))) {
        const auto& kids = a.children;
        if (kids.size() < d || a.probability == 0.0) continue;
        std::vector<int> idx;
        std::vector<bool> used(kids.size(), false);
        auto rec = [&](auto&& self, double weight, std::size_t flat) -> void {
          if (idx.size() == d) {
            mass[flat] += a.probability * weight;
            return;
          }
          for (std::size_t i = 0; i < kids.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            idx.push_back(static_cast<int>(i));
            const auto c = static_cast<std::size_t>(kids[i]);
            self(self, weight * psi_[c], flat * n + c);
            idx.pop_back();
            used[i] = false;
          }
        };
        rec(rec, 1.0, 0);
      }
      auto& law = chi_[d][x];
      law.assign(size, 0.0);
      if (m_[d][x] > 0)
        for (std::size_t t = 0; t < size; ++t) law[t] = mass[t] / m_[d][x];
    }
  }

  lambda_.assign(n, 0.0);
  transition_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) {
    lambda_[x] = D >= 1 ? m_[1][x] / psi_[x] : 0.0;
    if (D >= 1)
      for (std::size_t y = 0; y < n; ++y)
        transition_(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = chi_[1][x][y];
  }
  segment_ = Eigen::VectorXd::Map(lambda_.data(), static_cast<Eigen::Index>(n)).asDiagonal() * transition_;
}

double SpineKernel::m(int d, int x) const {
  if (d < 0) throw InvalidInput("negative moment order");
  if (d > maxDegree_) return 0.0;
  return m_[static_cast<std::size_t>(d)].at(static_cast<std::size_t>(x));
}

const std::vector<double>& SpineKernel::chi(int d, int x) const {
  if (d < 0 || d > maxDegree_) throw InvalidInput("chi order outside [0, max brood]");
  return chi_[static_cast<std::size_t>(d)].at(static_cast<std::size_t>(x));
}

const std::vector<double>& SpineKernel::chiMass(int d, int x) const {
  if (d < 0 || d > maxDegree_) throw InvalidInput("chi order outside [0, max brood]");
  return chiMass_[static_cast<std::size_t>(d)].at(static_cast<std::size_t>(x));
}

nlohmann::json SpineKernel::toJson() const {
  nlohmann::json j;
  j["types"] = model_.typeNames();
  j["psi"] = psi_;
  j["lambda"] = lambda_;
  j["m"] = m_;
  std::vector<std::vector<double>> p(typeCount());
  for (std::size_t x = 0; x < typeCount(); ++x)
    for (std::size_t y = 0; y < typeCount(); ++y)
      p[x].push_back(transition_(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)));
  j["transition"] = p;
  j["chi"] = chi_;
  return j;
}

double deltaBias(const SpineKernel& kernel, const MarkedTree& tree) {
  double v = 1;
  for (const auto& [vertex, d] : tree.tree.degrees()) {
    const int x = tree.mark(vertex);
    if (d == 0) {
      v /= kernel.psi(x);
    } else if (d == 1) {
      v *= kernel.lambda(x);
    } else {
      double fact = 1;
      for (int i = 2; i <= d; ++i) fact *= i;
      v *= kernel.m(d, x) / (fact * kernel.psi(x));
    }
  }
  return v;
}

}  // namespace branchlab
