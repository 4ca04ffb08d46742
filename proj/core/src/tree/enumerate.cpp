#include "branchlab/tree/enumerate.hpp"

#include <algorithm>

#include "branchlab/errors.hpp"

namespace branchlab {

void forEachShape(int k, int R, const std::function<void(const TreeShape&)>& visit, ShapeRange range) {
  if (k < 1 || R < 0) throw InvalidInput("forEachShape needs k >= 1 and R >= 0");
  const int lo = std::max(range.l1Min, 0);
  const int hi = range.l1Max < 0 ? R : std::min(range.l1Max, R);
  TreeShape s;
  s.l.assign(static_cast<std::size_t>(k), 0);
  s.b.assign(static_cast<std::size_t>(k - 1), 0);
  // Position 2i is l_i, position 2i+1 is b_i.
  const int slots = 2 * k - 1;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == slots) {
      visit(s);
      return;
    }
    const std::size_t i = static_cast<std::size_t>(pos / 2);
    if (pos % 2 == 0) {
      const int from = pos == 0 ? lo : s.b[i - 1] + 1;
      const int to = pos == 0 ? hi : R;
      for (int l = from; l <= to; ++l) {
        s.l[i] = l;
        self(self, pos + 1);
      }
    } else {
      for (int b = 0; b < s.l[i]; ++b) {
        s.b[i] = b;
        self(self, pos + 1);
      }
    }
  };
  rec(rec, 0);
}

std::vector<TreeShape> enumerateShapes(int k, int R) {
  std::vector<TreeShape> out;
  forEachShape(k, R, [&](const TreeShape& s) { out.push_back(s); });
  return out;
}

std::uint64_t countShapes(int k, int R) {
  if (k < 1 || R < 0) throw InvalidInput("countShapes needs k >= 1 and R >= 0");
  std::vector<std::uint64_t> c(static_cast<std::size_t>(R) + 1, 1);
  for (int step = 1; step < k; ++step) {
    std::vector<std::uint64_t> next(c.size(), 0);
    for (int a = 0; a <= R; ++a)
      for (int b = 0; b <= R; ++b) next[static_cast<std::size_t>(b)] += c[static_cast<std::size_t>(a)] * static_cast<std::uint64_t>(std::min(a, b));
    c = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto x : c) total += x;
  return total;
}

}  // namespace branchlab
