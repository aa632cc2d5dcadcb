#include "crystalline/spinor.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystalline {

bool is_semistandard(const SpinorColumnPair& T) {
  if (static_cast<int>(T.left.size()) != T.a + T.c || static_cast<int>(T.right.size()) != T.b + T.c) return false;
  for (size_t i = 0; i + 1 < T.left.size(); ++i)
    if (T.left[i] >= T.left[i + 1]) return false;
  for (size_t i = 0; i + 1 < T.right.size(); ++i)
    if (T.right[i] >= T.right[i + 1]) return false;
  for (int k = 0; k < T.c; ++k)
    if (T.left[k] > T.right[T.b + k]) return false;
  for (int x : T.left)
    if (x < 1) return false;
  for (int x : T.right)
    if (x < 1) return false;
  return true;
}

int residue(const SpinorColumnPair& T) {
  const int top = std::min(T.a, T.b);
  int k = 0;
  while (k < top) {
    const int next = k + 1;
    // left row index i pairs with right row index i + b - next
    bool ok = true;
    for (int i = 0; i < T.c + next && ok; ++i) ok = T.left[i] <= T.right[i + T.b - next];
    if (!ok) break;
    k = next;
  }
  return k;
}

bool spinor_index_allowed(LieType t, int b, int c) {
  switch (t) {
    case LieType::C: return b == 0;
    case LieType::B: return true;
    case LieType::D: return b % 2 == 0 && c % 2 == 0;
  }
  return false;
}

int spinor_residue_bound(LieType t) { return t == LieType::D ? 1 : 0; }

void for_each_column_pair(int a, int b, int c, int max_entry,
                          const std::function<void(const SpinorColumnPair&)>& fn) {
  SpinorColumnPair T{a, b, c, std::vector<int>(a + c), std::vector<int>(b + c)};
  const int hl = a + c, hr = b + c;
  if (hl > max_entry || hr > max_entry) return;
  // fill the right column, then the left column under the row constraints
  auto fill_left = [&](auto&& self, int i, int lo) -> void {
    if (i == hl) {
      fn(T);
      return;
    }
    int hi = max_entry - (hl - 1 - i);
    if (i < c) hi = std::min(hi, T.right[b + i]);
    for (int x = lo; x <= hi; ++x) {
      T.left[i] = x;
      self(self, i + 1, x + 1);
    }
  };
  auto fill_right = [&](auto&& self, int i, int lo) -> void {
    if (i == hr) {
      fill_left(fill_left, 0, 1);
      return;
    }
    for (int x = lo; x <= max_entry - (hr - 1 - i); ++x) {
      T.right[i] = x;
      self(self, i + 1, x + 1);
    }
  };
  fill_right(fill_right, 0, 1);
}

void for_each_spinor_column(int a, LieType t, int max_degree, SpinorFamily family,
                            const std::function<void(const SpinorColumnPair&)>& fn) {
  if (family == SpinorFamily::BarredZero) {
    if (t != LieType::D || a != 0) throw std::invalid_argument("the barred family exists only for type D, a = 0");
    for (int b = 0; b <= max_degree; b += 2)
      for (int c = 0; b + 2 * (c + 1) <= max_degree; c += 2)
        for_each_column_pair(0, b, c + 1, max_degree, fn);
    return;
  }
  const int rb = spinor_residue_bound(t);
  for (int b = 0; a + b <= max_degree; ++b)
    for (int c = 0; a + b + 2 * c <= max_degree; ++c) {
      if (!spinor_index_allowed(t, b, c)) continue;
      for_each_column_pair(a, b, c, max_degree, [&](const SpinorColumnPair& T) {
        if (residue(T) <= rb) fn(T);
      });
    }
}

std::vector<SpinorColumnPair> enumerate_spinor_columns(int a, LieType t, int max_degree, SpinorFamily family) {
  std::vector<SpinorColumnPair> out;
  for_each_spinor_column(a, t, max_degree, family, [&](const SpinorColumnPair& T) { out.push_back(T); });
  return out;
}

bool dominant_content(const SpinorColumnPair& T, Partition& out) {
  int top = 0;
  for (int x : T.left) top = std::max(top, x);
  for (int x : T.right) top = std::max(top, x);
  std::vector<int> m(top, 0);
  for (int x : T.left) ++m[x - 1];
  for (int x : T.right) ++m[x - 1];
  for (int i = 0; i + 1 < top; ++i)
    if (m[i] < m[i + 1]) return false;
  out = Partition(m);
  return true;
}

}  // namespace crystalline
