#include "branchlab/io/serialize.hpp"

#include "branchlab/errors.hpp"

namespace branchlab {

nlohmann::json shapeToJson(const TreeShape& s) { return {{"l", s.l}, {"b", s.b}}; }

TreeShape shapeFromJson(const nlohmann::json& j) {
  for (const auto& [key, _] : j.items())
    if (key != "l" && key != "b") throw InvalidInput("unknown shape key '" + key + "'");
  TreeShape s;
  s.l = j.at("l").get<std::vector<int>>();
  s.b = j.at("b").get<std::vector<int>>();
  s.validate();
  return s;
}

TreeDump dumpMarkedTree(const MarkedTree& t, const Model& model) {
  TreeDump d;
  d.tree = t.tree.toString();
  for (const auto& v : t.tree.vertices()) d.marks.push_back(model.typeName(t.mark(v)));
  return d;
}

MarkedTree loadMarkedTree(const TreeDump& d, const Model& model) {
  MarkedTree t;
  t.tree = PlanarTree::parse(d.tree);
  const auto vs = t.tree.vertices();
  if (vs.size() != d.marks.size()) throw InvalidInput("mark list does not match the tree size");
  for (std::size_t i = 0; i < vs.size(); ++i) t.marks[vs[i]] = model.typeIndex(d.marks[i]);
  return t;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace branchlab
