#include "crystalline/crystal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace crystalline {

namespace {
constexpr int kNone = 1 << 20;
}

LetterCrystal::LetterCrystal(LieType t, int n) : type_(t), n_(n) {
  if (n < 1 || (t == LieType::D && n < 2)) throw std::invalid_argument("rank too small for type");
  const int slots = 2 * n + 1;
  f_.assign(n, std::vector<int>(slots, kNone));
  e_ = f_;
  auto arrow = [&](int i, Letter from, Letter to) {
    f_[i][slot(from)] = to;
    e_[i][slot(to)] = from;
  };
  for (int i = 1; i < n; ++i) {
    arrow(i, i, i + 1);
    arrow(i, -(i + 1), -i);
  }
  switch (t) {
    case LieType::C: arrow(0, -1, 1); break;
    case LieType::B:
      arrow(0, -1, 0);
      arrow(0, 0, 1);
      break;
    case LieType::D:
      arrow(0, -2, 1);
      arrow(0, -1, 2);
      break;
  }
  eps_.assign(n, std::vector<int>(slots, 0));
  phi_ = eps_;
  for (int i = 0; i < n; ++i)
    for (Letter x = -n; x <= n; ++x) {
      int k = 0;
      for (int y = x; e_[i][slot(y)] != kNone; y = e_[i][slot(y)]) ++k;
      eps_[i][slot(x)] = k;
      k = 0;
      for (int y = x; f_[i][slot(y)] != kNone; y = f_[i][slot(y)]) ++k;
      phi_[i][slot(x)] = k;
    }
}

void LetterCrystal::check_index(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("crystal index " + std::to_string(i) + " out of range");
}

std::optional<Letter> LetterCrystal::f(Letter x, int i) const {
  check_index(i);
  int y = f_[i][slot(x)];
  if (y == kNone) return std::nullopt;
  return y;
}

std::optional<Letter> LetterCrystal::e(Letter x, int i) const {
  check_index(i);
  int y = e_[i][slot(x)];
  if (y == kNone) return std::nullopt;
  return y;
}

int LetterCrystal::epsilon(Letter x, int i) const { return eps_[i][slot(x)]; }
int LetterCrystal::phi(Letter x, int i) const { return phi_[i][slot(x)]; }

std::vector<int> LetterCrystal::simple_root(int i) const {
  check_index(i);
  std::vector<int> a(n_, 0);
  if (i >= 1) {
    a[i - 1] = 1;
    a[i] = -1;
    return a;
  }
  switch (type_) {
    case LieType::C: a[0] = -2; break;
    case LieType::B: a[0] = -1; break;
    case LieType::D:
      a[0] = -1;
      a[1] = -1;
      break;
  }
  return a;
}

int LetterCrystal::pairing(const std::vector<int>& wt, int i) const {
  check_index(i);
  if (i >= 1) return wt[i - 1] - wt[i];
  switch (type_) {
    case LieType::C: return -wt[0];
    case LieType::B: return -2 * wt[0];
    case LieType::D: return -wt[0] - wt[1];
  }
  return 0;
}

namespace {

// ε and φ of each suffix word[k..].
void suffix_strings(const LetterCrystal& L, const std::vector<Letter>& w, int i, std::vector<int>& se,
                    std::vector<int>& sp) {
  const size_t N = w.size();
  se.assign(N + 1, 0);
  sp.assign(N + 1, 0);
  for (size_t k = N; k-- > 0;) {
    int e1 = L.epsilon(w[k], i), p1 = L.phi(w[k], i);
    int e2 = se[k + 1], p2 = sp[k + 1];
    se[k] = std::max(e1, e2 - (p1 - e1));
    sp[k] = std::max(p1 + (p2 - e2), p2);
  }
}

}  // namespace

std::optional<std::vector<Letter>> tensor_f(const LetterCrystal& L, const std::vector<Letter>& word, int i) {
  if (i < 0 || i >= L.rank()) throw std::out_of_range("crystal index out of range");
  std::vector<int> se, sp;
  suffix_strings(L, word, i, se, sp);
  for (size_t k = 0; k < word.size(); ++k) {
    if (L.phi(word[k], i) > se[k + 1]) {
      auto out = word;
      out[k] = *L.f(word[k], i);
      return out;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Letter>> tensor_e(const LetterCrystal& L, const std::vector<Letter>& word, int i) {
  if (i < 0 || i >= L.rank()) throw std::out_of_range("crystal index out of range");
  std::vector<int> se, sp;
  suffix_strings(L, word, i, se, sp);
  for (size_t k = 0; k < word.size(); ++k) {
    if (L.phi(word[k], i) >= se[k + 1]) {
      auto y = L.e(word[k], i);
      if (!y) return std::nullopt;
      auto out = word;
      out[k] = *y;
      return out;
    }
  }
  return std::nullopt;
}

int tensor_epsilon(const LetterCrystal& L, const std::vector<Letter>& word, int i) {
  std::vector<int> se, sp;
  suffix_strings(L, word, i, se, sp);
  return se[0];
}

int tensor_phi(const LetterCrystal& L, const std::vector<Letter>& word, int i) {
  std::vector<int> se, sp;
  suffix_strings(L, word, i, se, sp);
  return sp[0];
}

std::optional<KNTableau> tableau_op(const KNTableau& T, Op op, int i, const CrystalOptions& opts) {
  LetterCrystal L(T.type(), T.rank());
  auto w = T.reading_word(opts.order);
  auto r = op == Op::F ? tensor_f(L, w, i) : tensor_e(L, w, i);
  if (!r) return std::nullopt;
  KNTableau out = T.with_word(*r, opts.order);
  if (opts.check_closure) {
    auto rep = kn_validate(out, opts.kn);
    if (!rep) throw std::logic_error("operator left the KN set: " + out.str() + " " + rep.clause + " " + rep.detail);
  }
  return out;
}

KNTableau climb_to_source(KNTableau T, const CrystalOptions& opts) {
  LetterCrystal L(T.type(), T.rank());
  auto w = T.reading_word(opts.order);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < T.rank(); ++i)
      while (auto r = tensor_e(L, w, i)) {
        w = *r;
        moved = true;
      }
  }
  return T.with_word(w, opts.order);
}

std::vector<int> CrystalGraph::sources() const {
  std::vector<int> s;
  for (size_t v = 0; v < vertices.size(); ++v)
    if (std::all_of(e_arrow[v].begin(), e_arrow[v].end(), [](int x) { return x < 0; }))
      s.push_back(static_cast<int>(v));
  return s;
}

std::size_t CrystalGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& row : f_arrow)
    for (int x : row) c += x >= 0;
  return c;
}

int CrystalGraph::index_of(const KNTableau& T) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), T);
  if (it == vertices.end() || !(*it == T)) return -1;
  return static_cast<int>(it - vertices.begin());
}

CrystalGraph build_graph(const KNTableau& seed, const CrystalOptions& opts, std::size_t cap) {
  const int n = seed.rank();
  LetterCrystal L(seed.type(), n);
  std::map<std::vector<Letter>, int> seen;
  std::vector<std::vector<Letter>> words;
  std::deque<int> queue;
  auto visit = [&](const std::vector<Letter>& w) {
    auto [it, inserted] = seen.emplace(w, static_cast<int>(words.size()));
    if (inserted) {
      if (words.size() >= cap) throw ResourceCapExceeded("crystal graph exceeded vertex cap");
      words.push_back(w);
      queue.push_back(it->second);
    }
    return it->second;
  };
  visit(seed.reading_word(opts.order));
  std::vector<std::vector<int>> f_raw, e_raw;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (static_cast<int>(f_raw.size()) <= v) {
      f_raw.resize(v + 1);
      e_raw.resize(v + 1);
    }
    f_raw[v].assign(n, -1);
    e_raw[v].assign(n, -1);
    for (int i = 0; i < n; ++i) {
      auto wf = tensor_f(L, words[v], i);
      if (wf) f_raw[v][i] = visit(*wf);
      auto we = tensor_e(L, words[v], i);
      if (we) e_raw[v][i] = visit(*we);
    }
  }
  // canonical order by tableau
  CrystalGraph g;
  g.type = seed.type();
  g.rank = n;
  const size_t V = words.size();
  std::vector<KNTableau> tabs;
  tabs.reserve(V);
  for (const auto& w : words) {
    tabs.push_back(seed.with_word(w, opts.order));
    if (opts.check_closure) {
      auto rep = kn_validate(tabs.back(), opts.kn);
      if (!rep)
        throw std::logic_error("operator left the KN set: " + tabs.back().str() + " " + rep.clause + " " + rep.detail);
    }
  }
  std::vector<int> order(V);
  for (size_t k = 0; k < V; ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return tabs[a] < tabs[b]; });
  std::vector<int> rank_of(V);
  for (size_t k = 0; k < V; ++k) rank_of[order[k]] = static_cast<int>(k);
  g.vertices.reserve(V);
  g.f_arrow.assign(V, std::vector<int>(n, -1));
  g.e_arrow = g.f_arrow;
  for (size_t k = 0; k < V; ++k) {
    int old = order[k];
    g.vertices.push_back(tabs[old]);
    for (int i = 0; i < n; ++i) {
      if (f_raw[old][i] >= 0) g.f_arrow[k][i] = rank_of[f_raw[old][i]];
      if (e_raw[old][i] >= 0) g.e_arrow[k][i] = rank_of[e_raw[old][i]];
    }
  }
  return g;
}

WeightMultiset highest_weights_of_tensor(const std::vector<KNTableau>& left, const std::vector<KNTableau>& right,
                                         const CrystalOptions& opts) {
  WeightMultiset out;
  if (left.empty() || right.empty()) return out;
  const int n = left.front().rank();
  LetterCrystal L(left.front().type(), n);
  for (const auto& a : left) {
    auto wa = a.reading_word(opts.order);
    // a ⊗ b can only be killed by every ẽ_i when a is
    bool source = true;
    for (int i = 0; i < n && source; ++i) source = tensor_epsilon(L, wa, i) == 0;
    if (!source) continue;
    auto wt_a = a.weight();
    for (const auto& b : right) {
      auto w = wa;
      auto wb = b.reading_word(opts.order);
      w.insert(w.end(), wb.begin(), wb.end());
      bool killed = true;
      for (int i = 0; i < n && killed; ++i) killed = !tensor_e(L, w, i).has_value();
      if (!killed) continue;
      auto wt = wt_a;
      auto wt_b = b.weight();
      for (int k = 0; k < n; ++k) wt[k] += wt_b[k];
      ++out[wt];
    }
  }
  return out;
}

WeightMultiset highest_weights_with_source(const KNTableau& source, const TableauShape& shape,
                                           const CrystalOptions& opts, std::size_t cap) {
  const LieType t = source.type();
  const int n = source.rank();
  LetterCrystal L(t, n);
  WeightMultiset out;
  auto wa = source.reading_word(opts.order);
  std::vector<int> bound(n);
  for (int i = 0; i < n; ++i) {
    if (tensor_epsilon(L, wa, i) != 0) return out;
    bound[i] = tensor_phi(L, wa, i);
  }
  if (opts.order != ReadingOrder::RightToLeftTopDown) {
    // the prefix pruning below follows the column-by-column reading order
    auto all = enumerate_kn(shape, t, n, opts.kn, cap);
    return highest_weights_of_tensor({source}, all, opts);
  }
  if (shape.num_rows() > n) throw std::invalid_argument("shape too tall for rank " + std::to_string(n));
  const auto heights = shape.column_heights();
  const int ncols = static_cast<int>(heights.size());
  const auto letters = alphabet(t, n);
  std::vector<Column> cols(ncols);
  std::vector<int> eps(n, 0), phi(n, 0);
  std::size_t visited = 0;
  // columns from the right, each top to bottom: exactly the reading word
  auto place = [&](auto&& self, int j, int row) -> void {
    if (++visited > cap) throw ResourceCapExceeded("highest weight search exceeded cap");
    Column& col = cols[j];
    if (row == heights[j]) {
      if (!n_admissible(col, n, t) || !kn_check_column(col, shape, 0, t, n, opts.kn)) return;
      if (j + 1 < ncols && !kn_check_pair(col, cols[j + 1], t, n, opts.kn)) return;
      if (j == 0) {
        std::vector<int> wt = source.weight();
        for (const Column& c : cols)
          for (Letter x : c) {
            auto w = letter_weight(x, n);
            for (int k = 0; k < n; ++k) wt[k] += w[k];
          }
        ++out[wt];
        return;
      }
      self(self, j - 1, 0);
      return;
    }
    for (Letter x : letters) {
      if (row > 0 && !column_step_ok(col[row - 1], x, t)) continue;
      const auto se = eps, sp = phi;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const int ex = L.epsilon(x, i), px = L.phi(x, i);
        eps[i] = std::max(se[i], ex - sp[i] + se[i]);
        phi[i] = std::max(sp[i] + px - ex, px);
        ok = eps[i] <= bound[i];
      }
      if (ok) {
        col.push_back(x);
        self(self, j, row + 1);
        col.pop_back();
      }
      eps = se;
      phi = sp;
    }
  };
  if (ncols == 0) {
    ++out[source.weight()];
    return out;
  }
  place(place, ncols - 1, 0);
  return out;
}

WeightMultiset hw_decompose_tensor(const CrystalGraph& A, const CrystalGraph& B, const CrystalOptions& opts) {
  if (A.type != B.type || A.rank != B.rank) throw std::invalid_argument("tensor factors differ in type or rank");
  return highest_weights_of_tensor(A.vertices, B.vertices, opts);
}

int factor_level_tail(const Factor& f) {
  if (auto g = std::get_if<GShape>(&f)) return -g->ell;
  return 0;
}

TableauShape factor_model_shape(const Factor& f, int n) {
  if (auto g = std::get_if<GShape>(&f)) return TableauShape(rho_n(*g, n));
  const Partition& p = std::get<Partition>(f);
  if (p.length() > n) throw std::invalid_argument("partition too long for rank");
  return TableauShape(p);
}

namespace {

int factor_first_part(const Factor& f) {
  if (auto g = std::get_if<GShape>(&f)) return g->lam.at(0);
  return std::get<Partition>(f).at(0);
}

int factor_size(const Factor& f) {
  if (auto g = std::get_if<GShape>(&f)) return g->lam.size() + g->ell;
  return std::get<Partition>(f).size();
}

}  // namespace

std::map<BasisLabel, long> decomposition_at_rank(const Factor& left, const Factor& right, LieType t, int n,
                                                 const StabilizationPolicy& policy) {
  TableauShape ls = factor_model_shape(left, n), rs = factor_model_shape(right, n);
  KNTableau source = climb_to_source(t_lambda(ls, t, n), policy.crystal);
  WeightMultiset hw;
  if (policy.enumerate_by_bfs)
    hw = highest_weights_of_tensor({source}, build_graph(t_lambda(rs, t, n), policy.crystal, policy.cap).vertices,
                                   policy.crystal);
  else if (!policy.prune_partners)
    hw = highest_weights_of_tensor({source}, enumerate_kn(rs, t, n, policy.crystal.kn, policy.cap), policy.crystal);
  else
    hw = highest_weights_with_source(source, rs, policy.crystal, policy.cap);
  const int tail = factor_level_tail(left) + factor_level_tail(right);
  std::map<BasisLabel, long> out;
  for (const auto& [wt, mult] : hw) {
    BasisLabel b = label_of_weight(wt, tail, t);
    if (policy.max_width >= 0 && b.kappa && b.kappa->lam.at(0) > policy.max_width) continue;
    out[b] += mult;
  }
  return out;
}

StabilizedDecomposition stabilized_decomposition(const Factor& left, const Factor& right, LieType t,
                                                 const StabilizationPolicy& policy) {
  int n = policy.n_start;
  if (n <= 0) {
    n = std::max(factor_first_part(left), factor_first_part(right)) + factor_size(left) + factor_size(right) + 2;
    if (policy.max_width >= 0)
      n = std::max(n, policy.max_width - factor_level_tail(left) - factor_level_tail(right) + 2);
  }
  if (t == LieType::D) n = std::max(n, 2);
  auto prev = decomposition_at_rank(left, right, t, n, policy);
  for (int k = 0; k <= policy.max_escalations; ++k) {
    auto next = decomposition_at_rank(left, right, t, n + 1, policy);
    if (next == prev) return {prev, n};
    prev = std::move(next);
    ++n;
  }
  throw StabilizationFailure("tensor decomposition did not stabilize up to rank " + std::to_string(n));
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (size_t v = 0; v < g.vertices.size(); ++v)
    os << "  v" << v << " [label=\"" << g.vertices[v].str() << "\"];\n";
  for (size_t v = 0; v < g.vertices.size(); ++v)
    for (int i = 0; i < g.rank; ++i)
      if (g.f_arrow[v][i] >= 0) os << "  v" << v << " -> v" << g.f_arrow[v][i] << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace crystalline
