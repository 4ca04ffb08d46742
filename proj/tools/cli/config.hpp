#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "branchlab/process/model.hpp"

namespace branchlab::cli {

// An experiment config: a JSON object whose keys are checked against the command's
// schema before anything runs.
class Config {
 public:
  static Config load(const std::string& path);

  const std::string& bytes() const { return bytes_; }
  std::uint64_t hash() const;

  // Throws InvalidInput naming the first key not in `allowed`.
  void allowOnly(std::initializer_list<const char*> allowed) const;
  bool has(const std::string& key) const { return j_.contains(key); }

  int integer(const std::string& key, std::optional<int> fallback = std::nullopt) const;
  double real(const std::string& key, std::optional<double> fallback = std::nullopt) const;
  bool boolean(const std::string& key, bool fallback) const;
  std::string string(const std::string& key, std::optional<std::string> fallback = std::nullopt) const;
  std::vector<int> integers(const std::string& key, std::optional<std::vector<int>> fallback = std::nullopt) const;
  std::vector<double> reals(const std::string& key, std::optional<std::vector<double>> fallback = std::nullopt) const;
  std::vector<std::string> strings(const std::string& key,
                                   std::optional<std::vector<std::string>> fallback = std::nullopt) const;
  const nlohmann::json& raw(const std::string& key) const;

  // "model": path relative to the config file, or an inline model object.
  Model model() const;

 private:
  nlohmann::json j_;
  std::string bytes_;
  std::string dir_;
};

}  // namespace branchlab::cli
