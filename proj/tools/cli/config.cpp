#include "config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "branchlab/errors.hpp"
#include "branchlab/io/serialize.hpp"

namespace branchlab::cli {

Config Config::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  Config c;
  c.bytes_ = ss.str();
  try {
    c.j_ = nlohmann::json::parse(c.bytes_);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("config " + path + ": " + e.what());
  }
  if (!c.j_.is_object()) throw InvalidInput("config must be a JSON object");
  c.dir_ = std::filesystem::path(path).parent_path().string();
  return c;
}

std::uint64_t Config::hash() const { return fnv1a64(bytes_); }

void Config::allowOnly(std::initializer_list<const char*> allowed) const {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j_.items())
    if (!ok.count(key)) throw InvalidInput("unknown config key '" + key + "'");
}

const nlohmann::json& Config::raw(const std::string& key) const {
  if (!j_.contains(key)) throw InvalidInput("config needs '" + key + "'");
  return j_.at(key);
}

namespace {

template <class T>
T as(const nlohmann::json& v, const std::string& key, const char* what) {
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput("config key '" + key + "' must be " + what);
  }
}

}  // namespace

int Config::integer(const std::string& key, std::optional<int> fallback) const {
  if (!has(key) && fallback) return *fallback;
  const auto& v = raw(key);
  if (!v.is_number_integer()) throw InvalidInput("config key '" + key + "' must be an integer");
  return v.get<int>();
}

double Config::real(const std::string& key, std::optional<double> fallback) const {
  if (!has(key) && fallback) return *fallback;
  const auto& v = raw(key);
  if (!v.is_number()) throw InvalidInput("config key '" + key + "' must be a number");
  return v.get<double>();
}

bool Config::boolean(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const auto& v = raw(key);
  if (!v.is_boolean()) throw InvalidInput("config key '" + key + "' must be true or false");
  return v.get<bool>();
}

std::string Config::string(const std::string& key, std::optional<std::string> fallback) const {
  if (!has(key) && fallback) return *fallback;
  const auto& v = raw(key);
  if (!v.is_string()) throw InvalidInput("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> Config::integers(const std::string& key, std::optional<std::vector<int>> fallback) const {
  if (!has(key) && fallback) return *fallback;
  const auto& v = raw(key);
  if (v.is_number_integer()) return {v.get<int>()};
  for (const auto& x : v)
    if (!x.is_number_integer()) throw InvalidInput("config key '" + key + "' must be a list of integers");
  return as<std::vector<int>>(v, key, "a list of integers");
}

std::vector<double> Config::reals(const std::string& key, std::optional<std::vector<double>> fallback) const {
  if (!has(key) && fallback) return *fallback;
  return as<std::vector<double>>(raw(key), key, "a list of numbers");
}

std::vector<std::string> Config::strings(const std::string& key,
                                         std::optional<std::vector<std::string>> fallback) const {
  if (!has(key) && fallback) return *fallback;
  const auto& v = raw(key);
  if (v.is_string()) return {v.get<std::string>()};
  return as<std::vector<std::string>>(v, key, "a list of strings");
}

Model Config::model() const {
  const auto& m = raw("model");
  if (m.is_object()) return Model::fromJson(m);
  if (!m.is_string()) throw InvalidInput("'model' must be a file path or a model object");
  std::filesystem::path p(m.get<std::string>());
  if (p.is_relative() && !dir_.empty()) p = std::filesystem::path(dir_) / p;
  return Model::fromFile(p.string());
}

}  // namespace branchlab::cli
