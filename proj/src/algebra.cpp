#include "crystalline/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace crystalline {

std::string AMonomial::str() const {
  std::vector<std::string> f;
  for (int i : z) f.push_back("z" + std::to_string(i));
  for (int a : h) f.push_back(a == kHbar0 ? "hbar0" : "h" + std::to_string(a));
  if (f.empty()) return "1";
  std::string s = f[0];
  for (size_t i = 1; i < f.size(); ++i) s += "*" + f[i];
  return s;
}

AElement AElement::one(LieType t) { return monomial(t, AMonomial{}); }

AElement AElement::h(LieType t, int a) {
  if (a < 0) throw std::invalid_argument("h index must be nonnegative");
  return monomial(t, AMonomial{{}, {a}});
}

AElement AElement::hbar0() { return monomial(LieType::D, AMonomial{{}, {kHbar0}}); }

AElement AElement::z(LieType t, int b) {
  if (b < 0) throw std::invalid_argument("z index must be nonnegative");
  if (b == 0) return one(t);
  return monomial(t, AMonomial{{b}, {}});
}

AElement AElement::monomial(LieType t, const AMonomial& m, Coeff c) {
  AElement x(t);
  x.add(m, c);
  return x;
}

Coeff AElement::coeff(const AMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void AElement::add(const AMonomial& m0, Coeff c) {
  if (c == 0) return;
  AMonomial m;
  for (int i : m0.z)
    if (i != 0) m.z.push_back(i);
  m.h = m0.h;
  if (type_ != LieType::D)
    for (int a : m.h)
      if (a == kHbar0) throw std::invalid_argument("hbar0 exists only in type D");
  std::sort(m.z.begin(), m.z.end());
  std::sort(m.h.begin(), m.h.end());
  auto [it, fresh] = terms_.emplace(std::move(m), c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

void AElement::check(const AElement& o) const {
  if (type_ != o.type_) throw std::invalid_argument("type mismatch");
}

AElement AElement::operator+(const AElement& o) const {
  check(o);
  AElement r = *this;
  for (auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

AElement AElement::operator-(const AElement& o) const { return *this + o * -1; }

AElement AElement::operator*(Coeff c) const {
  AElement r(type_);
  for (auto& [m, v] : terms_) r.add(m, v * c);
  return r;
}

AElement AElement::divided_by(Coeff c) const {
  AElement r(type_);
  for (auto& [m, v] : terms_) {
    if (v % c != 0) throw std::domain_error("coefficient of " + m.str() + " is not divisible by " + std::to_string(c));
    r.add(m, v / c);
  }
  return r;
}

std::string AElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<AMonomial, Coeff>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](auto& x, auto& y) {
    if (x.first.z.size() != y.first.z.size()) return x.first.z.size() > y.first.z.size();
    return x.first < y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : v) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff a = c < 0 ? -c : c;
    const bool unit = m.z.empty() && m.h.empty();
    if (unit) os << a;
    else {
      if (a != 1) os << a << "*";
      os << m.str();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// δ tables and normal ordering

namespace {

// h̄_a = h_a for a >= 1
int hbar(int a) { return a == 0 ? kHbar0 : a; }

using HMono = std::vector<int>;
using ZMono = std::vector<int>;

struct Memo {
  std::mutex m;
  std::map<std::tuple<LieType, int, HMono>, AElement> delta;
  std::map<std::tuple<LieType, HMono, ZMono>, AElement> push;
};
Memo& memo() {
  static Memo instance;
  return instance;
}

const AElement& push(LieType t, const HMono& H, const ZMono& Z);

// δ_n of an h-monomial, by Leibniz on the first factor. Results live in the
// memo, whose nodes are never moved.
const AElement& delta_mono(LieType t, int n, const HMono& H) {
  auto key = std::make_tuple(t, n, H);
  {
    std::lock_guard<std::mutex> g(memo().m);
    if (auto it = memo().delta.find(key); it != memo().delta.end()) return it->second;
  }
  if (H.empty()) {
    std::lock_guard<std::mutex> g(memo().m);
    return memo().delta.emplace(key, AElement(t)).first->second;
  }
  const int a = H[0];
  const HMono rest(H.begin() + 1, H.end());
  AElement out(t);
  // δ(h_a)·H'
  const AElement dh = delta_h(t, n, a);
  for (auto& [m, c] : dh.terms()) {
    AMonomial mm = m;
    mm.h.insert(mm.h.end(), rest.begin(), rest.end());
    out.add(mm, c);
  }
  // h_a·δ(H')
  for (auto& [m, c] : delta_mono(t, n, rest).terms())
    for (auto& [p, d] : push(t, {a}, m.z).terms()) {
      AMonomial mm = p;
      mm.h.insert(mm.h.end(), m.h.begin(), m.h.end());
      out.add(mm, c * d);
    }
  std::lock_guard<std::mutex> g(memo().m);
  return memo().delta.emplace(key, std::move(out)).first->second;
}

// H·Z in normal form.
const AElement& push(LieType t, const HMono& H, const ZMono& Z) {
  auto key = std::make_tuple(t, H, Z);
  {
    std::lock_guard<std::mutex> g(memo().m);
    if (auto it = memo().push.find(key); it != memo().push.end()) return it->second;
  }
  if (Z.empty() || H.empty()) {
    std::lock_guard<std::mutex> g(memo().m);
    return memo().push.emplace(key, AElement::monomial(t, AMonomial{Z, H})).first->second;
  }
  const int k = Z[0];
  const ZMono rest(Z.begin() + 1, Z.end());
  // H·z_k = z_k·H + δ_k(H), then continue with the remaining z's
  AElement step = AElement::monomial(t, AMonomial{{k}, H}) + delta_mono(t, k, H);
  AElement out(t);
  for (auto& [m, c] : step.terms())
    for (auto& [p, d] : push(t, m.h, rest).terms()) {
      AMonomial mm = p;
      mm.z.insert(mm.z.end(), m.z.begin(), m.z.end());
      out.add(mm, c * d);
    }
  std::lock_guard<std::mutex> g(memo().m);
  return memo().push.emplace(key, std::move(out)).first->second;
}

}  // namespace

AElement delta_h(LieType t, int n, int a) {
  if (n < 1) throw std::invalid_argument("δ_n needs n >= 1");
  AElement out(t);
  auto term = [&](int i, int hv) { out.add(AMonomial{{i}, {hv}}, 1); };
  const int b = n;
  switch (t) {
    case LieType::C:
      for (int i = 0; i <= n - 1; ++i)
        for (int j = 0; j <= std::min(a, n - i); ++j) term(i, a + n - i - 2 * j);
      break;
    case LieType::B:
      for (int i = 0; i <= n - 1; ++i) {
        for (int j = 0; j <= std::min(a, b - i); ++j) term(i, a + b - i - 2 * j);
        if (b - i > a)
          for (int k = 1; k <= b - i - a; ++k) term(i, b - i - a - k);
      }
      break;
    case LieType::D:
      if (a == 0 || a == kHbar0) {
        for (int i = 0; i <= n - 1; ++i)
          for (int j = 0; j <= (n - i) / 2; ++j) term(i, a == 0 ? b - i - 2 * j : hbar(b - i - 2 * j));
      } else {
        for (int i = 0; i <= n - 1; ++i) {
          for (int j = 0; j <= std::min((a + b - i) / 2, b - i); ++j) term(i, a + b - i - 2 * j);
          if (b - i >= a)
            for (int k = 0; k <= (b - i - a) / 2; ++k) term(i, hbar(b - i - a - 2 * k));
        }
      }
      break;
  }
  return out;
}

AElement delta(int n, const AElement& x) {
  AElement out(x.type());
  for (auto& [m, c] : x.terms()) {
    for (int k : m.z)
      if (k >= n) throw std::invalid_argument("δ_" + std::to_string(n) + " is not defined on z" + std::to_string(k));
    // δ(Z·H) = Z·δ(H) since δ kills the z's
    for (auto& [p, d] : delta_mono(x.type(), n, m.h).terms()) {
      AMonomial mm = p;
      mm.z.insert(mm.z.end(), m.z.begin(), m.z.end());
      out.add(mm, c * d);
    }
  }
  return out;
}

AElement AElement::operator*(const AElement& o) const {
  check(o);
  AElement r(type_);
  for (auto& [a, ca] : terms_)
    for (auto& [b, cb] : o.terms_)
      for (auto& [p, d] : push(type_, a.h, b.z).terms()) {
        AMonomial mm = p;
        mm.z.insert(mm.z.end(), a.z.begin(), a.z.end());
        mm.h.insert(mm.h.end(), b.h.begin(), b.h.end());
        r.add(mm, ca * cb * d);
      }
  return r;
}

AElement a_normalize(const std::vector<AElement>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  AElement acc = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Ψ

namespace {

AElement det(const std::vector<std::vector<AElement>>& m, LieType t) {
  const int size = static_cast<int>(m.size());
  std::unordered_map<unsigned, AElement> memo;
  auto rec = [&](auto&& self, int row, unsigned mask) -> AElement {
    if (row == size) return AElement::one(t);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    AElement acc(t);
    int sign = 1;
    for (int j = 0; j < size; ++j) {
      if (!(mask >> j & 1u)) continue;
      if (!m[row][j].is_zero()) acc = acc + m[row][j] * self(self, row + 1, mask & ~(1u << j)) * sign;
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, (1u << size) - 1);
}

// Image of E^◇_r under ch H_a ↦ E-series, extended to negative r through
// E_{-r} = E_r. In type D, E_0 is the image of h_0 + h̄_0.
AElement e_image(LieType t, int r, bool prime) {
  switch (t) {
    case LieType::C:
      // E'_r
      if (r >= 0) return AElement::h(t, r);
      if (r == -1) return AElement(t);
      return AElement::h(t, -r - 2) * -1;
    case LieType::B:
      // E''_r
      return AElement::h(t, r >= 0 ? r : -r - 1);
    case LieType::D: {
      auto E = [&](int k) { return k == 0 ? AElement::h(t, 0) + AElement::hbar0() : AElement::h(t, std::abs(k)); };
      return prime ? E(r) - E(r + 2) : E(r);
    }
  }
  return AElement(t);
}

AElement jt(LieType t, const Partition& lam, int ell, bool prime) {
  std::vector<std::vector<AElement>> m(ell, std::vector<AElement>(ell, AElement(t)));
  for (int i = 1; i <= ell; ++i) {
    const int r = lam.at(ell - i) + i - 1;
    for (int j = 1; j <= ell; ++j) {
      m[i - 1][j - 1] = e_image(t, r + j - 1, prime);
      if (j != 1) m[i - 1][j - 1] = m[i - 1][j - 1] + e_image(t, r - j + 1, prime);
    }
  }
  return det(m, t);
}

}  // namespace

AElement psi_zero(LieType t, const Partition& mu) {
  // s_μ = det(e_{μ'_i - i + j})
  const Partition c = conjugate(mu);
  const int size = c.length();
  std::vector<std::vector<AElement>> m(size, std::vector<AElement>(size, AElement(t)));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      const int r = c.at(i) - i + j;
      if (r >= 0) m[i][j] = AElement::z(t, r);
    }
  return det(m, t);
}

AElement psi_plus(const GShape& k) {
  const LieType t = k.type;
  if (t != LieType::D) return jt(t, k.lam, k.ell, false);
  const int len = k.t();
  if (len == k.ell) return jt(t, k.lam, k.ell, false);
  Partition base = k.lam;
  int sign = 1;
  if (len > k.ell) {
    base = Partition(std::vector<int>(k.lam.parts().begin(), k.lam.parts().begin() + (2 * k.ell - len)));
    sign = -1;
  }
  const AElement P = AElement::h(t, 0) - AElement::hbar0();
  AElement twice = jt(t, base, k.ell, false) + P * jt(t, base, k.ell - 1, true) * sign;
  return twice.divided_by(2);
}

AElement psi(const GrothElement& f) {
  AElement out(f.type());
  for (auto& [b, c] : f.terms()) {
    AElement term = psi_zero(f.type(), b.mu);
    if (b.kappa) term = term * psi_plus(*b.kappa);
    out = out + term * c;
  }
  return out;
}

}  // namespace crystalline
