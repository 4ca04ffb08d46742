#include "branchlab/process/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "branchlab/errors.hpp"

namespace branchlab {

Model::Model(std::vector<std::string> typeNames, std::vector<std::vector<OffspringAtom>> offspring)
    : names_(std::move(typeNames)), offspring_(std::move(offspring)) {
  if (names_.empty()) throw InvalidInput("model needs at least one type");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size())
    throw InvalidInput("duplicate type names");
  if (offspring_.size() != names_.size()) throw InvalidInput("offspring law missing for some type");
  const int n = static_cast<int>(names_.size());
  ordered_.resize(names_.size());
  for (std::size_t x = 0; x < offspring_.size(); ++x) {
    if (offspring_[x].empty()) throw InvalidInput("type " + names_[x] + " has an empty offspring law");
    double total = 0;
    for (const auto& a : offspring_[x]) {
      if (!(a.probability >= 0.0 && a.probability <= 1.0))
        throw InvalidInput("offspring probability outside [0,1] for type " + names_[x]);
      for (int c : a.children)
        if (c < 0 || c >= n) throw InvalidInput("unknown child type in law of " + names_[x]);
      total += a.probability;
      maxBrood_ = std::max(maxBrood_, static_cast<int>(a.children.size()));

      if (a.probability == 0.0) continue;
      std::vector<int> perm = a.children;
      std::sort(perm.begin(), perm.end());
      std::vector<std::vector<int>> perms;
      do perms.push_back(perm);
      while (std::next_permutation(perm.begin(), perm.end()));
      for (auto& p : perms)
        ordered_[x].push_back({a.probability / static_cast<double>(perms.size()), std::move(p)});
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw InvalidInput("offspring probabilities of type " + names_[x] + " sum to " + std::to_string(total));
  }
}

int Model::typeIndex(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidInput("unknown type '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

Model Model::fromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("model must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "types" && key != "offspring") throw InvalidInput("unknown model key '" + key + "'");
  if (!j.contains("types") || !j.contains("offspring")) throw InvalidInput("model needs 'types' and 'offspring'");
  std::vector<std::string> names;
  for (const auto& t : j.at("types")) {
    if (!t.is_string()) throw InvalidInput("type names must be strings");
    names.push_back(t.get<std::string>());
  }
  const auto& off = j.at("offspring");
  if (!off.is_object()) throw InvalidInput("'offspring' must be an object keyed by type");
  auto index = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw InvalidInput("unknown type '" + s + "'");
    return static_cast<int>(it - names.begin());
  };
  std::vector<std::vector<OffspringAtom>> laws(names.size());
  for (const auto& [key, atoms] : off.items()) {
    const int x = index(key);
    if (!atoms.is_array()) throw InvalidInput("offspring law of " + key + " must be an array");
    for (const auto& a : atoms) {
      if (!a.is_object()) throw InvalidInput("offspring atom must be an object");
      for (const auto& [ak, _] : a.items())
        if (ak != "prob" && ak != "children") throw InvalidInput("unknown offspring key '" + ak + "'");
      if (!a.contains("prob") || !a.at("prob").is_number()) throw InvalidInput("offspring atom needs numeric 'prob'");
      OffspringAtom atom;
      atom.probability = a.at("prob").get<double>();
      if (a.contains("children"))
        for (const auto& c : a.at("children")) {
          if (!c.is_string()) throw InvalidInput("children are type names");
          atom.children.push_back(index(c.get<std::string>()));
        }
      laws[static_cast<std::size_t>(x)].push_back(std::move(atom));
    }
  }
  return Model(std::move(names), std::move(laws));
}

Model Model::fromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open model file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("model file " + path + ": " + e.what());
  }
  return fromJson(j);
}

nlohmann::json Model::toJson() const {
  nlohmann::json j;
  j["types"] = names_;
  nlohmann::json off = nlohmann::json::object();
  for (std::size_t x = 0; x < names_.size(); ++x) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : offspring_[x]) {
      std::vector<std::string> kids;
      for (int c : a.children) kids.push_back(names_[static_cast<std::size_t>(c)]);
      atoms.push_back({{"prob", a.probability}, {"children", kids}});
    }
    off[names_[x]] = atoms;
  }
  j["offspring"] = off;
  return j;
}

namespace models {

Model binaryGaltonWatson() { return Model({"X"}, {{{0.5, {}}, {0.5, {0, 0}}}}); }

Model twoTypeSymmetric() {
  return Model({"A", "B"}, {{{0.5, {}}, {0.5, {0, 1}}}, {{0.5, {}}, {0.5, {0, 1}}}});
}

Model twoTypeAsymmetric() {
  return Model({"A", "B"}, {{{0.3, {}}, {0.4, {0}}, {0.3, {0, 1, 1}}}, {{0.5, {}}, {0.5, {0}}}});
}

Model deterministicChild() { return Model({"X"}, {{{1.0, {0}}}}); }

Model sterile() { return Model({"X"}, {{{1.0, {}}}}); }

Model subcriticalSingleChild() { return Model({"X"}, {{{0.5, {}}, {0.5, {0}}}}); }

}  // namespace models

}  // namespace branchlab
