#include "crystalline/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace crystalline {

LaurentPoly LaurentPoly::constant(int n, Coeff c) {
  LaurentPoly p(n);
  p.add(Exponent(n, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, Coeff c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add(e, c);
  return p;
}

Coeff LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(const Exponent& e, Coeff c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

void LaurentPoly::check(const LaurentPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check(o);
  for (auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check(o);
  for (auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const { return LaurentPoly(*this) += o; }
LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return LaurentPoly(*this) -= o; }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check(o);
  LaurentPoly r(n_);
  Exponent e(n_);
  for (auto& [a, ca] : terms_)
    for (auto& [b, cb] : o.terms_) {
      for (int i = 0; i < n_; ++i) e[i] = a[i] + b[i];
      r.add(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(Coeff c) const {
  LaurentPoly r(n_);
  for (auto& [e, v] : terms_) r.add(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::divided_by(Coeff c) const {
  LaurentPoly r(n_);
  for (auto& [e, v] : terms_) {
    if (v % c != 0) throw std::domain_error("coefficient " + std::to_string(v) + " not divisible by " + std::to_string(c));
    r.add(e, v / c);
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  if (static_cast<int>(s.size()) != n_) throw std::invalid_argument("exponent length mismatch");
  LaurentPoly r(n_);
  for (auto& [e, v] : terms_) {
    Exponent f = e;
    for (int i = 0; i < n_; ++i) f[i] += s[i];
    r.add(f, v);
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending exponent order reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff a = c < 0 ? -c : c;
    bool unit = true;
    for (int x : e) unit = unit && x == 0;
    if (a != 1 || unit) os << a;
    bool star = a != 1;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      star = true;
      os << "x" << i + 1;
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

// Coefficients of u^r in Π (1 + v u) over the listed variables v.
LaurentPoly elementary_from_vars(int r, int n, const std::vector<LaurentPoly::Exponent>& vars) {
  if (r < 0 || r > static_cast<int>(vars.size())) return LaurentPoly(n);
  std::vector<LaurentPoly> level(r + 1, LaurentPoly(n));
  level[0] = LaurentPoly::constant(n, 1);
  for (auto& v : vars)
    for (int k = r; k >= 1; --k) level[k] += level[k - 1].shifted(v);
  return level[r];
}

}  // namespace

LaurentPoly e_pm(int r, int n, bool with_one) {
  std::vector<LaurentPoly::Exponent> vars;
  for (int i = 0; i < n; ++i) {
    LaurentPoly::Exponent e(n, 0);
    e[i] = 1;
    vars.push_back(e);
    e[i] = -1;
    vars.push_back(e);
  }
  if (with_one) vars.push_back(LaurentPoly::Exponent(n, 0));
  return elementary_from_vars(r, n, vars);
}

LaurentPoly e_plain(int r, int n) {
  std::vector<LaurentPoly::Exponent> vars;
  for (int i = 0; i < n; ++i) {
    LaurentPoly::Exponent e(n, 0);
    e[i] = 1;
    vars.push_back(e);
  }
  return elementary_from_vars(r, n, vars);
}

LaurentPoly sinh_product(int n) {
  LaurentPoly p = LaurentPoly::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    LaurentPoly f(n);
    LaurentPoly::Exponent e(n, 0);
    e[i] = 1;
    f.add(e, 1);
    e[i] = -1;
    f.add(e, -1);
    p = p * f;
  }
  return p;
}

LaurentPoly det_power(int n, int k) { return LaurentPoly::monomial(LaurentPoly::Exponent(n, k)); }

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m, int n_vars) {
  const int size = static_cast<int>(m.size());
  if (size == 0) return LaurentPoly::constant(n_vars, 1);
  if (size > 20) throw std::invalid_argument("determinant too large");
  std::unordered_map<unsigned, LaurentPoly> memo;
  // minor on rows row..size-1 and the columns in mask
  auto rec = [&](auto&& self, int row, unsigned mask) -> LaurentPoly {
    if (row == size) return LaurentPoly::constant(n_vars, 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    LaurentPoly acc(n_vars);
    int sign = 1;
    for (int j = 0; j < size; ++j) {
      if (!(mask >> j & 1u)) continue;
      if (!m[row][j].is_zero()) {
        LaurentPoly term = m[row][j] * self(self, row + 1, mask & ~(1u << j));
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

}  // namespace crystalline
