#include "crystalline/schur.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace crystalline {

SchurSeries SchurSeries::one(Truncation tr) { return schur(Partition(), tr); }

SchurSeries SchurSeries::schur(const Partition& p, Truncation tr, Coeff c) {
  SchurSeries s(tr);
  s.add(p, c);
  return s;
}

Coeff SchurSeries::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void SchurSeries::add(const Partition& p, Coeff c) {
  if (c == 0 || !tr_.keeps(p)) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

void SchurSeries::check(const SchurSeries& o) const {
  if (!(tr_ == o.tr_))
    throw std::invalid_argument("cutoff mismatch: " + std::to_string(tr_.max_degree) + " vs " +
                                std::to_string(o.tr_.max_degree));
}

SchurSeries& SchurSeries::operator+=(const SchurSeries& o) {
  check(o);
  for (auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

SchurSeries& SchurSeries::operator-=(const SchurSeries& o) {
  check(o);
  for (auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

SchurSeries SchurSeries::operator+(const SchurSeries& o) const { return SchurSeries(*this) += o; }
SchurSeries SchurSeries::operator-(const SchurSeries& o) const { return SchurSeries(*this) -= o; }

SchurSeries SchurSeries::operator*(const SchurSeries& o) const {
  check(o);
  SchurSeries r(tr_);
  for (auto& [a, ca] : terms_)
    for (auto& [b, cb] : o.terms_) {
      if (a.size() + b.size() > tr_.max_degree) continue;
      for (auto& [nu, c] : lr_product(a, b, tr_.max_rows)) r.add(nu, ca * cb * c);
    }
  return r;
}

SchurSeries SchurSeries::operator*(Coeff c) const {
  SchurSeries r(tr_);
  for (auto& [p, v] : terms_) r.add(p, v * c);
  return r;
}

SchurSeries SchurSeries::divided_by(Coeff c) const {
  SchurSeries r(tr_);
  for (auto& [p, v] : terms_) {
    if (v % c != 0)
      throw std::domain_error("coefficient of s(" + p.str() + ") is " + std::to_string(v) + ", not divisible by " +
                              std::to_string(c));
    r.add(p, v / c);
  }
  return r;
}

SchurSeries SchurSeries::degree_part(int d) const {
  SchurSeries r(tr_);
  for (auto& [p, v] : terms_)
    if (p.size() == d) r.add(p, v);
  return r;
}

SchurSeries SchurSeries::truncated(Truncation tr) const {
  SchurSeries r(tr);
  for (auto& [p, v] : terms_) r.add(p, v);
  return r;
}

std::string SchurSeries::str() const {
  if (terms_.empty()) return "0";
  // by degree, then reverse lexicographic inside a degree
  std::vector<std::pair<Partition, Coeff>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](auto& x, auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [p, c] : v) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << "s(" << p.str() << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson products

namespace {

struct LrSearch {
  const std::vector<int>& mu;
  int max_rows;
  std::vector<int> shape;
  // count[k][r]: copies of letter k+1 in row r
  std::vector<std::vector<int>> count;
  std::map<Partition, Coeff> out;

  void letter(int k) {
    if (k == static_cast<int>(mu.size())) {
      std::vector<int> s;
      for (int x : shape)
        if (x > 0) s.push_back(x);
      ++out[Partition(s)];
      return;
    }
    const std::vector<int> old = shape;
    count[k].assign(old.size() + 1, 0);
    strip(k, 0, mu[k], 0, 0, old);
    shape = old;
  }

  // Row r of the strip for letter k; cum_k counts letter k in rows < r and
  // cum_prev letter k-1 in rows < r.
  void strip(int k, int r, int remaining, int cum_k, int cum_prev, const std::vector<int>& old) {
    const int rows = static_cast<int>(old.size());
    if (remaining == 0) {
      letter(k + 1);
      return;
    }
    if (r > rows) return;
    if (max_rows >= 0 && r >= max_rows) return;
    const int here = r < rows ? old[r] : 0;
    int top = remaining;
    if (r > 0) top = std::min(top, old[r - 1] - here);
    if (k > 0) top = std::min(top, cum_prev - cum_k);
    const int prev_here = (k > 0 && r < static_cast<int>(count[k - 1].size())) ? count[k - 1][r] : 0;
    for (int a = top; a >= 0; --a) {
      if (r == rows && a > 0) shape.push_back(a);
      else if (r < rows) shape[r] = here + a;
      count[k][r] = a;
      strip(k, r + 1, remaining - a, cum_k + a, cum_prev + prev_here, old);
      if (r == rows && a > 0) shape.pop_back();
    }
    count[k][r] = 0;
    if (r < rows) shape[r] = here;
  }
};

std::mutex lr_mutex;
std::map<std::tuple<Partition, Partition, int>, std::map<Partition, Coeff>> lr_memo;

std::mutex kostka_mutex;
std::map<std::pair<Partition, std::vector<int>>, Coeff> kostka_memo;

std::mutex poly_mutex;
std::map<std::pair<Partition, int>, LaurentPoly> poly_memo;

}  // namespace

const std::map<Partition, Coeff>& lr_product(const Partition& lam, const Partition& mu, int max_rows) {
  const bool swap = mu.size() > lam.size() || (mu.size() == lam.size() && mu > lam);
  const Partition& big = swap ? mu : lam;
  const Partition& small = swap ? lam : mu;
  auto key = std::make_tuple(big, small, max_rows);
  {
    std::lock_guard<std::mutex> g(lr_mutex);
    if (auto it = lr_memo.find(key); it != lr_memo.end()) return it->second;
  }
  LrSearch s{small.parts(), max_rows, big.parts(), std::vector<std::vector<int>>(small.length()), {}};
  if (max_rows < 0 || big.length() <= max_rows) s.letter(0);
  std::lock_guard<std::mutex> g(lr_mutex);
  // std::map nodes are stable, so the reference outlives later insertions
  return lr_memo.emplace(key, std::move(s.out)).first->second;
}

Coeff lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu) {
  if (nu.size() != lam.size() + mu.size()) return 0;
  const auto& m = lr_product(lam, mu, -1);
  auto it = m.find(nu);
  return it == m.end() ? 0 : it->second;
}

Coeff kostka(const Partition& lam, const std::vector<int>& content) {
  int total = 0;
  for (int x : content) {
    if (x < 0) return 0;
    total += x;
  }
  if (total != lam.size()) return 0;
  if (content.empty()) return lam.empty() ? 1 : 0;
  auto key = std::make_pair(lam, content);
  {
    std::lock_guard<std::mutex> g(kostka_mutex);
    if (auto it = kostka_memo.find(key); it != kostka_memo.end()) return it->second;
  }
  // the largest letter fills a horizontal strip λ/ρ
  std::vector<int> rest(content.begin(), content.end() - 1);
  const int k = content.back();
  Coeff acc = 0;
  std::vector<int> rho = lam.parts();
  auto rec = [&](auto&& self, int r, int remaining) -> void {
    if (r == lam.length()) {
      if (remaining == 0) {
        std::vector<int> p;
        for (int x : rho)
          if (x > 0) p.push_back(x);
        acc += kostka(Partition(p), rest);
      }
      return;
    }
    const int below = lam.at(r + 1);
    const int top = std::min(remaining, lam.at(r) - below);
    for (int a = 0; a <= top; ++a) {
      rho[r] = lam.at(r) - a;
      self(self, r + 1, remaining - a);
    }
    rho[r] = lam.at(r);
  };
  rec(rec, 0, k);
  std::lock_guard<std::mutex> g(kostka_mutex);
  kostka_memo[key] = acc;
  return acc;
}

SchurSeries schur_from_monomials(const std::map<Partition, Coeff>& dominant, Truncation tr) {
  SchurSeries out(tr);
  std::map<Partition, Coeff> rem = dominant;
  int top = 0;
  for (auto& [p, c] : dominant) top = std::max(top, p.size());
  for (int d = 0; d <= top; ++d) {
    const auto parts = partitions_of(d);  // largest first; dominance-compatible
    for (size_t i = 0; i < parts.size(); ++i) {
      auto it = rem.find(parts[i]);
      if (it == rem.end() || it->second == 0) continue;
      const Coeff c = it->second;
      out.add(parts[i], c);
      for (size_t j = i; j < parts.size(); ++j) {
        Coeff k = kostka(parts[i], parts[j].parts());
        if (k != 0) rem[parts[j]] -= c * k;
      }
    }
  }
  for (auto& [p, c] : rem)
    if (c != 0) throw std::logic_error("monomial data is not symmetric at " + p.str());
  return out;
}

// ---------------------------------------------------------------------------
// E series and determinants

SchurSeries e_series(int r, Truncation tr) {
  SchurSeries s(tr);
  if (r >= 0) s.add(Partition(std::vector<int>(r, 1)), 1);
  return s;
}

SchurSeries cap_e(int r, Truncation tr) {
  SchurSeries s(tr);
  for (int i = std::max(0, -r); 2 * i + r <= tr.max_degree; ++i) s += e_series(i, tr) * e_series(r + i, tr);
  return s;
}

SchurSeries cap_e(int r, Flavor f, Truncation tr) {
  switch (f) {
    case Flavor::Plain: return cap_e(r, tr);
    case Flavor::Prime: return cap_e(r, tr) - cap_e(r + 2, tr);
    case Flavor::DoublePrime: return cap_e(r, tr) + cap_e(r + 1, tr);
  }
  return SchurSeries(tr);
}

SchurSeries sign_product_series(Truncation tr) {
  SchurSeries a(tr), b(tr);
  for (int i = 0; i <= tr.max_degree; ++i) {
    a += e_series(i, tr);
    b += e_series(i, tr) * (i % 2 ? -1 : 1);
  }
  return a * b;
}

namespace {

SchurSeries series_determinant(const std::vector<std::vector<SchurSeries>>& m, Truncation tr) {
  const int size = static_cast<int>(m.size());
  std::unordered_map<unsigned, SchurSeries> memo;
  auto rec = [&](auto&& self, int row, unsigned mask) -> SchurSeries {
    if (row == size) return SchurSeries::one(tr);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    SchurSeries acc(tr);
    int sign = 1;
    for (int j = 0; j < size; ++j) {
      if (!(mask >> j & 1u)) continue;
      if (!m[row][j].is_zero()) {
        SchurSeries term = m[row][j] * self(self, row + 1, mask & ~(1u << j));
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, (1u << size) - 1);
}

}  // namespace

SchurSeries jt_determinant(const Partition& lam, int ell, Flavor f, Truncation tr) {
  if (ell < 0 || lam.length() > ell)
    throw std::invalid_argument("shape (" + lam.str() + ") does not fit " + std::to_string(ell) + " rows");
  std::map<int, SchurSeries> cache;
  auto E = [&](int r) -> const SchurSeries& {
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, cap_e(r, f, tr)).first;
    return it->second;
  };
  std::vector<std::vector<SchurSeries>> m(ell, std::vector<SchurSeries>(ell, SchurSeries(tr)));
  for (int i = 1; i <= ell; ++i) {
    const int r = lam.at(ell - i) + i - 1;
    for (int j = 1; j <= ell; ++j) {
      m[i - 1][j - 1] = E(r + j - 1);
      if (j != 1) m[i - 1][j - 1] += E(r - j + 1);
    }
  }
  return series_determinant(m, tr);
}

SchurSeries s_g_series(const GShape& s, Truncation tr) {
  switch (s.type) {
    case LieType::C: return jt_determinant(s.lam, s.ell, Flavor::Prime, tr);
    case LieType::B: return jt_determinant(s.lam, s.ell, Flavor::DoublePrime, tr);
    case LieType::D: break;
  }
  const int t = s.t();
  if (t == s.ell) return jt_determinant(s.lam, s.ell, Flavor::Plain, tr);
  Partition base = s.lam;
  int sign = 1;
  if (t > s.ell) {
    std::vector<int> mu(s.lam.parts().begin(), s.lam.parts().begin() + (2 * s.ell - t));
    base = Partition(mu);
    sign = -1;
  }
  SchurSeries twice = jt_determinant(base, s.ell, Flavor::Plain, tr) +
                      sign_product_series(tr) * jt_determinant(base, s.ell - 1, Flavor::Prime, tr) * sign;
  return twice.divided_by(2);
}

SchurSeries spinor_char(int a, LieType t, Truncation tr, SpinorFamily family) {
  SchurSeries s(tr);
  const int D = tr.max_degree;
  auto col_pair = [&](int x, int y) {
    std::vector<int> p;
    if (x > 0) p.push_back(x);
    if (y > 0) p.push_back(y);
    s.add(conjugate(Partition(p)), 1);
  };
  if (family == SpinorFamily::BarredZero) {
    if (t != LieType::D || a != 0) throw std::invalid_argument("the barred family exists only for type D, a = 0");
    for (int b = 0; 2 * b + 2 <= D; ++b)
      for (int c = 0; 2 * b + 4 * c + 2 <= D; ++c) col_pair(2 * b + 2 * c + 1, 2 * c + 1);
    return s;
  }
  if (a < 0) throw std::invalid_argument("negative spinor index");
  switch (t) {
    case LieType::C:
      for (int c = 0; a + 2 * c <= D; ++c) col_pair(a + c, c);
      break;
    case LieType::B:
      for (int b = 0; a + b <= D; ++b)
        for (int c = 0; a + b + 2 * c <= D; ++c) col_pair(a + b + c, c);
      break;
    case LieType::D:
      if (a == 0) {
        for (int b = 0; 2 * b <= D; ++b)
          for (int c = 0; 2 * b + 4 * c <= D; ++c) col_pair(2 * b + 2 * c, 2 * c);
      } else {
        for (int b = 0; a + 2 * b <= D; ++b)
          for (int c = 0; a + 2 * b + 2 * c <= D; ++c) col_pair(a + 2 * b + c, c);
      }
      break;
  }
  return s;
}

SchurSeries spinor_char_enumerated(int a, LieType t, int max_degree, SpinorFamily family) {
  std::map<Partition, Coeff> dom;
  for_each_spinor_column(a, t, max_degree, family, [&](const SpinorColumnPair& T) {
    Partition p;
    if (dominant_content(T, p)) ++dom[p];
  });
  return schur_from_monomials(dom, Truncation{max_degree, -1});
}

const LaurentPoly& schur_polynomial(const Partition& lam, int n) {
  auto key = std::make_pair(lam, n);
  {
    std::lock_guard<std::mutex> g(poly_mutex);
    if (auto it = poly_memo.find(key); it != poly_memo.end()) return it->second;
  }
  LaurentPoly p(n);
  if (lam.length() <= n) {
    for (const Partition& beta : partitions_of(lam.size(), 1 << 20, n)) {
      const Coeff k = kostka(lam, beta.parts());
      if (k == 0) continue;
      std::vector<int> e(n, 0);
      for (int i = 0; i < beta.length(); ++i) e[i] = beta.at(i);
      std::sort(e.begin(), e.end());
      do p.add(e, k);
      while (std::next_permutation(e.begin(), e.end()));
    }
  }
  std::lock_guard<std::mutex> g(poly_mutex);
  return poly_memo.emplace(key, std::move(p)).first->second;
}

LaurentPoly laurent_specialize(const SchurSeries& f, int t_power, int n) {
  LaurentPoly out(n);
  for (auto& [lam, c] : f.terms()) {
    if (lam.length() > n) continue;
    out += schur_polynomial(lam, n) * c;
  }
  return out.shifted(std::vector<int>(n, -t_power));
}

}  // namespace crystalline
