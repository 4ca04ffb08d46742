#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "branchlab/process/marked_tree.hpp"
#include "branchlab/process/model.hpp"
#include "branchlab/tree/tree_shape.hpp"

namespace branchlab {

nlohmann::json shapeToJson(const TreeShape& s);
TreeShape shapeFromJson(const nlohmann::json& j);

// Canonical tree string plus marks listed in lexicographic vertex order (type names).
struct TreeDump {
  std::string tree;
  std::vector<std::string> marks;
};
TreeDump dumpMarkedTree(const MarkedTree& t, const Model& model);
MarkedTree loadMarkedTree(const TreeDump& d, const Model& model);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace branchlab
