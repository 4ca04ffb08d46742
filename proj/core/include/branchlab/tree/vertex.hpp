#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace branchlab {

// Ulam-Harris word. The empty word is the root; (1,2) is the second child of the
// first child of the root. The defaulted ordering is the lexicographic order, in which
// an ancestor precedes all of its descendants.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> word);
  Vertex(std::initializer_list<int> word);

  const std::vector<int>& word() const { return word_; }
  std::size_t generation() const { return word_.size(); }
  bool isRoot() const { return word_.empty(); }

  Vertex child(int i) const;
  Vertex parent() const;
  Vertex prefix(std::size_t length) const;
  Vertex concat(const Vertex& tail) const;

  // Reflexive ancestry: w.isAncestorOf(w) is true.
  bool isAncestorOf(const Vertex& v) const;
  bool comparable(const Vertex& v) const { return isAncestorOf(v) || v.isAncestorOf(*this); }

  std::string toString() const;

  auto operator<=>(const Vertex&) const = default;
  bool operator==(const Vertex&) const = default;

 private:
  std::vector<int> word_;
};

// Longest common prefix v ∧ w.
Vertex mrca(const Vertex& v, const Vertex& w);

}  // namespace branchlab
