#include "crystalline/tableau.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace crystalline {

bool letter_leq(Letter x, Letter y, LieType t) {
  if (t == LieType::D && x + y == 0 && std::abs(x) == 1) return false;
  return x <= y;
}

bool letter_less(Letter x, Letter y, LieType t) { return x != y && letter_leq(x, y, t); }

std::string letter_str(Letter x) { return std::to_string(x); }

std::vector<Letter> alphabet(LieType t, int n) {
  std::vector<Letter> a;
  for (int k = n; k >= 1; --k) a.push_back(-k);
  if (t == LieType::B) a.push_back(0);
  for (int k = 1; k <= n; ++k) a.push_back(k);
  return a;
}

bool column_step_ok(Letter x, Letter y, LieType t) {
  if (t == LieType::B && x == 0 && y == 0) return true;
  if (t == LieType::D && x + y == 0 && std::abs(x) == 1) return true;
  return letter_less(x, y, t);
}

bool row_step_ok(Letter x, Letter y, LieType t) {
  if (t == LieType::B && x == 0 && y == 0) return false;
  return letter_leq(x, y, t);
}

TableauShape::TableauShape(const Partition& p) : rows(p.parts()) {}

TableauShape::TableauShape(const GenPartition& g) {
  Partition a = g.abs_shape();
  rows = a.parts();
  colored = g.negative();
  if (colored) rows.resize(g.rank(), 0);
}

int TableauShape::cells() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

std::vector<int> TableauShape::column_heights() const {
  std::vector<int> h(num_columns(), 0);
  for (int r : rows)
    for (int j = 0; j < r; ++j) ++h[j];
  return h;
}

std::vector<int> TableauShape::signed_parts() const {
  std::vector<int> p = rows;
  if (colored && !p.empty()) p.back() = -p.back();
  return p;
}

std::string TableauShape::str() const {
  std::string s;
  auto p = signed_parts();
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

KNTableau::KNTableau(TableauShape shape, LieType type, int rank, std::vector<Column> columns)
    : shape_(std::move(shape)), type_(type), rank_(rank), columns_(std::move(columns)) {
  auto h = shape_.column_heights();
  if (h.size() != columns_.size()) throw std::invalid_argument("column count does not match shape");
  for (size_t j = 0; j < h.size(); ++j)
    if (static_cast<int>(columns_[j].size()) != h[j])
      throw std::invalid_argument("column height does not match shape");
}

KNTableau KNTableau::from_rows(TableauShape shape, LieType type, int rank,
                               const std::vector<std::vector<Letter>>& rows) {
  std::vector<Column> cols(shape.num_columns());
  if (rows.size() != shape.rows.size()) throw std::invalid_argument("row count does not match shape");
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape.rows[i])
      throw std::invalid_argument("row length does not match shape");
    for (size_t j = 0; j < rows[i].size(); ++j) cols[j].push_back(rows[i][j]);
  }
  return KNTableau(std::move(shape), type, rank, std::move(cols));
}

std::vector<std::vector<Letter>> KNTableau::rows() const {
  std::vector<std::vector<Letter>> r(shape_.num_rows());
  for (const auto& c : columns_)
    for (size_t i = 0; i < c.size(); ++i) r[i].push_back(c[i]);
  return r;
}

std::vector<Letter> KNTableau::reading_word(ReadingOrder order) const {
  std::vector<Letter> w;
  if (order == ReadingOrder::RightToLeftTopDown) {
    for (auto it = columns_.rbegin(); it != columns_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  } else {
    for (const auto& c : columns_) w.insert(w.end(), c.rbegin(), c.rend());
  }
  return w;
}

KNTableau KNTableau::with_word(const std::vector<Letter>& word, ReadingOrder order) const {
  KNTableau out = *this;
  size_t k = 0;
  if (order == ReadingOrder::RightToLeftTopDown) {
    for (auto it = out.columns_.rbegin(); it != out.columns_.rend(); ++it)
      for (auto& x : *it) x = word.at(k++);
  } else {
    for (auto& c : out.columns_)
      for (auto it = c.rbegin(); it != c.rend(); ++it) *it = word.at(k++);
  }
  return out;
}

std::vector<int> letter_weight(Letter x, int n) {
  std::vector<int> w(n, 0);
  if (x > 0) w[x - 1] += 1;
  if (x < 0) w[-x - 1] -= 1;
  return w;
}

std::vector<int> KNTableau::weight() const {
  std::vector<int> w(rank_, 0);
  for (const auto& c : columns_)
    for (Letter x : c) {
      if (x > 0) ++w[x - 1];
      if (x < 0) --w[-x - 1];
    }
  return w;
}

std::string KNTableau::str() const {
  if (columns_.empty()) return "()";
  std::string s;
  auto r = rows();
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) s += '/';
    for (size_t j = 0; j < r[i].size(); ++j) s += (j ? "," : "") + letter_str(r[i][j]);
    if (shape_.colored && i + 1 == r.size()) s += '*';
  }
  return s;
}

bool n_admissible(const Column& col, int n, LieType t) {
  for (Letter x : col) {
    if (std::abs(x) > n || (x == 0 && t != LieType::B))
      throw std::invalid_argument("letter " + letter_str(x) + " outside the alphabet");
  }
  if (static_cast<int>(col.size()) > n) return false;
  for (int z = 1; z <= n; ++z) {
    int count = 0;
    for (Letter x : col)
      if (x <= -z || x >= z) ++count;
    if (count > n - z + 1) return false;
  }
  return true;
}

namespace {

int pos(const Column& c, Letter x) {
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] == x) return static_cast<int>(i) + 1;
  return 0;
}

Letter cell(const Column& c, int row) {
  return row >= 1 && row <= static_cast<int>(c.size()) ? c[row - 1] : 1 << 20;
}

KnReport fail(std::string clause, std::string detail) { return KnReport{false, std::move(clause), std::move(detail)}; }

bool in_set(Letter x, std::initializer_list<Letter> s) { return std::find(s.begin(), s.end(), x) != s.end(); }

}  // namespace

KnReport kn_check_column(const Column& col, const TableauShape& shape, int col_index, LieType t,
                         int n, const KnOptions& opts) {
  for (size_t i = 0; i + 1 < col.size(); ++i)
    if (!column_step_ok(col[i], col[i + 1], t))
      return fail("semistandard", "column " + std::to_string(col_index) + " not increasing at row " +
                                      std::to_string(i + 1));
  if (!n_admissible(col, n, t)) return fail("admissible", "column " + std::to_string(col_index));
  if (t == LieType::D && static_cast<int>(col.size()) == n) {
    const bool colored = shape.colored;
    for (int k = 1; k <= n; ++k) {
      Letter x = col[k - 1];
      if (std::abs(x) != 1) continue;
      bool bar = x < 0;
      bool need_even;
      if (opts.parity == FullColumnParity::RowIndex) {
        // 1 sits in odd rows, 1̄ in even rows; reversed for a colored shape
        need_even = bar != colored;
        if ((k % 2 == 0) != need_even)
          return fail(colored ? "(d-2)" : "(d-1)", "column " + std::to_string(col_index) + " row " + std::to_string(k));
      } else {
        need_even = bar != colored;
        if (((n - k) % 2 == 0) != need_even)
          return fail(colored ? "(d-2)" : "(d-1)", "column " + std::to_string(col_index) + " row " + std::to_string(k));
      }
    }
  }
  return {};
}

KnReport kn_check_pair(const Column& L, const Column& R, LieType t, int n, const KnOptions& opts) {
  for (size_t i = 0; i < R.size(); ++i)
    if (!row_step_ok(L[i], R[i], t)) return fail("semistandard", "row " + std::to_string(i + 1));

  const int bmin = (t == LieType::C) ? 1 : 2;
  const std::string c1 = t == LieType::C ? "(c-1)" : t == LieType::B ? "(b-1)" : "(d-3)";
  for (int a = bmin; a <= n; ++a) {
    const int p = pos(L, -a);
    if (!p) continue;
    const int sR = pos(R, a);
    for (int b = bmin; b <= a; ++b) {
      // pattern: ā, b̄, b in column j and a in column j+1
      int q = pos(L, -b), r = pos(L, b);
      if (q && r && sR && p <= q && q < r && r <= sR && (q - p) + (sR - r) >= a - b)
        return fail(c1, "first pattern a=" + std::to_string(a) + " b=" + std::to_string(b));
      // pattern: ā in column j, b̄, b, a in column j+1
      q = pos(R, -b);
      r = pos(R, b);
      int s = sR;
      if (opts.second_pattern_literal) s = (a == b) ? r : 0;
      if (q && r && s && p <= q && q < r && r <= s && (q - p) + (s - r) >= a - b)
        return fail(c1, "second pattern a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
  }

  if (t == LieType::B) {
    for (int a = 2; a <= n; ++a) {
      int p = pos(L, -a), s = pos(R, a);
      if (!p || !s || p >= s) continue;
      for (int q = p; q + 1 <= s; ++q) {
        bool hit = (in_set(cell(L, q), {1, 0, -1}) && in_set(cell(L, q + 1), {1, 0, -1})) ||
                   (in_set(cell(R, q), {1, 0, -1}) && in_set(cell(R, q + 1), {1, 0, -1}));
        if (hit && (q - p) + (s - q - 1) >= a - 1) return fail("(b-2)", "a=" + std::to_string(a));
      }
    }
    for (size_t p = 0; p < L.size(); ++p)
      for (size_t q = p + 1; q < R.size(); ++q)
        if (in_set(L[p], {-1, 0}) && in_set(R[q], {0, 1})) return fail("(b-3)", "rows " + std::to_string(p + 1));
  }

  if (t == LieType::D) {
    for (int a = 2; a <= n; ++a) {
      int p = pos(L, -a), s = pos(R, a);
      if (!p || !s || p >= s) continue;
      for (int q = p; q + 1 <= s; ++q) {
        Letter l0 = cell(L, q), l1 = cell(L, q + 1), r0 = cell(R, q), r1 = cell(R, q + 1);
        bool hit = (in_set(l0, {1, -1}) && in_set(l1, {1, -1}) && l0 != l1) ||
                   (in_set(r0, {1, -1}) && in_set(r1, {1, -1}) && r0 != r1);
        if (hit && (q - p) + (s - q - 1) >= a - 1) return fail("(d-4)", "a=" + std::to_string(a));
      }
      for (int q = p; q <= s; ++q)
        for (int r = q + 1; r <= s; ++r) {
          Letter x = cell(R, q), y = cell(L, r);
          if (!in_set(x, {1, -1}) || !in_set(y, {1, -1})) continue;
          // as printed: s-q+1 even for equal letters, odd for distinct ones;
          // the crystal itself is cut out by r-q odd for equal, even for distinct
          bool parity_hit = opts.d6_literal ? ((x == y) ? (s - q + 1) % 2 == 0 : (s - q + 1) % 2 == 1)
                                            : ((x == y) ? (r - q) % 2 == 1 : (r - q) % 2 == 0);
          if (parity_hit && s - p >= a - 1) return fail("(d-6)", "a=" + std::to_string(a));
        }
    }
    for (size_t p = 0; p < L.size(); ++p)
      for (size_t q = p + 1; q < R.size(); ++q)
        if (in_set(L[p], {-1, 1}) && in_set(R[q], {-1, 1})) return fail("(d-5)", "rows " + std::to_string(p + 1));
  }
  return {};
}

KnReport kn_validate(const KNTableau& T, const KnOptions& opts) {
  const auto& cols = T.columns();
  for (size_t j = 0; j < cols.size(); ++j) {
    auto r = kn_check_column(cols[j], T.shape(), static_cast<int>(j) + 1, T.type(), T.rank(), opts);
    if (!r) return r;
  }
  for (size_t j = 0; j + 1 < cols.size(); ++j) {
    auto r = kn_check_pair(cols[j], cols[j + 1], T.type(), T.rank(), opts);
    if (!r) {
      r.detail = "columns " + std::to_string(j + 1) + "," + std::to_string(j + 2) + ": " + r.detail;
      return r;
    }
  }
  return {};
}

KNTableau t_lambda(const TableauShape& shape, LieType t, int n) {
  if (shape.num_rows() > n) throw std::invalid_argument("shape too tall for rank " + std::to_string(n));
  if (shape.colored && (t != LieType::D || shape.num_rows() != n))
    throw std::invalid_argument("negative last part needs type D and a full-length shape");
  auto h = shape.column_heights();
  const int neg = shape.colored ? shape.rows.back() : 0;
  std::vector<Column> cols;
  for (int j = 0; j < static_cast<int>(h.size()); ++j) {
    Column c;
    for (int i = 1; i <= h[j]; ++i) {
      if (j < neg) c.push_back(i == 1 ? -n : i - 1);
      else c.push_back(i);
    }
    cols.push_back(c);
  }
  return KNTableau(shape, t, n, cols);
}

static void gen_columns(int height, LieType t, const std::vector<Letter>& alph, Column& cur,
                        std::vector<Column>& out) {
  if (static_cast<int>(cur.size()) == height) {
    out.push_back(cur);
    return;
  }
  for (Letter y : alph) {
    if (!cur.empty() && !column_step_ok(cur.back(), y, t)) continue;
    cur.push_back(y);
    gen_columns(height, t, alph, cur, out);
    cur.pop_back();
  }
}

std::vector<Column> admissible_columns(int height, LieType t, int n) {
  std::vector<Column> all, out;
  if (height > n) return out;
  Column cur;
  gen_columns(height, t, alphabet(t, n), cur, all);
  for (auto& c : all)
    if (n_admissible(c, n, t)) out.push_back(std::move(c));
  return out;
}

std::vector<KNTableau> enumerate_kn(const TableauShape& shape, LieType t, int n, const KnOptions& opts,
                                    std::size_t cap) {
  if (shape.num_rows() > n) throw std::invalid_argument("shape too tall for rank " + std::to_string(n));
  auto heights = shape.column_heights();
  std::map<int, std::vector<Column>> by_height;
  for (int h : heights) {
    if (by_height.count(h)) continue;
    std::vector<Column> ok;
    for (auto& c : admissible_columns(h, t, n))
      if (kn_check_column(c, shape, 0, t, n, opts)) ok.push_back(std::move(c));
    by_height[h] = std::move(ok);
  }
  std::vector<KNTableau> out;
  std::vector<Column> cur;
  auto rec = [&](auto&& self, size_t j) -> void {
    if (j == heights.size()) {
      if (out.size() >= cap) throw ResourceCapExceeded("KN enumeration exceeded cap");
      out.emplace_back(shape, t, n, cur);
      return;
    }
    for (const Column& c : by_height[heights[j]]) {
      if (j > 0 && !kn_check_pair(cur.back(), c, t, n, opts)) continue;
      cur.push_back(c);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace crystalline
