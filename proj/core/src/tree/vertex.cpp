#include "branchlab/tree/vertex.hpp"

#include <algorithm>

#include "branchlab/errors.hpp"

namespace branchlab {

Vertex::Vertex(std::vector<int> word) : word_(std::move(word)) {
  for (int i : word_)
    if (i < 1) throw InvalidInput("vertex words use positive child indices");
}

Vertex::Vertex(std::initializer_list<int> word) : Vertex(std::vector<int>(word)) {}

Vertex Vertex::child(int i) const {
  if (i < 1) throw InvalidInput("child index must be positive");
  Vertex c = *this;
  c.word_.push_back(i);
  return c;
}

Vertex Vertex::parent() const {
  if (isRoot()) throw InvalidInput("the root has no parent");
  Vertex p = *this;
  p.word_.pop_back();
  return p;
}

Vertex Vertex::prefix(std::size_t length) const {
  if (length > word_.size()) throw InvalidInput("prefix longer than word");
  Vertex p;
  p.word_.assign(word_.begin(), word_.begin() + static_cast<std::ptrdiff_t>(length));
  return p;
}

Vertex Vertex::concat(const Vertex& tail) const {
  Vertex v = *this;
  v.word_.insert(v.word_.end(), tail.word_.begin(), tail.word_.end());
  return v;
}

bool Vertex::isAncestorOf(const Vertex& v) const {
  return word_.size() <= v.word_.size() && std::equal(word_.begin(), word_.end(), v.word_.begin());
}

std::string Vertex::toString() const {
  std::string s = "(";
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word_[i]);
  }
  return s + ")";
}

Vertex mrca(const Vertex& v, const Vertex& w) {
  const auto& a = v.word();
  const auto& b = w.word();
  auto mm = std::mismatch(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(a.size(), b.size())), b.begin());
  return v.prefix(static_cast<std::size_t>(mm.first - a.begin()));
}

}  // namespace branchlab
