#include "crystalline/weight.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace crystalline {

Weight::Weight(std::map<int, int> exceptions, int tail) : tail_(tail) {
  for (auto [i, m] : exceptions) {
    if (i < 1) throw std::invalid_argument("weight indices are 1-based");
    if (m != tail_) exceptions_[i] = m;
  }
}

Weight Weight::from_prefix(const std::vector<int>& coords, int tail) {
  std::map<int, int> ex;
  for (size_t i = 0; i < coords.size(); ++i) ex[static_cast<int>(i) + 1] = coords[i];
  return Weight(std::move(ex), tail);
}

Weight Weight::epsilon(int i, int coeff) { return Weight({{i, coeff}}, 0); }

int Weight::operator[](int i) const {
  auto it = exceptions_.find(i);
  return it == exceptions_.end() ? tail_ : it->second;
}

int Weight::support_bound() const { return exceptions_.empty() ? 0 : exceptions_.rbegin()->first; }

std::vector<int> Weight::prefix(int n) const {
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = (*this)[i];
  return v;
}

Weight Weight::operator+(const Weight& o) const {
  std::map<int, int> ex;
  int hi = std::max(support_bound(), o.support_bound());
  for (int i = 1; i <= hi; ++i) ex[i] = (*this)[i] + o[i];
  return Weight(std::move(ex), tail_ + o.tail_);
}

Weight Weight::operator-(const Weight& o) const {
  std::map<int, int> ex;
  int hi = std::max(support_bound(), o.support_bound());
  for (int i = 1; i <= hi; ++i) ex[i] = (*this)[i] - o[i];
  return Weight(std::move(ex), tail_ - o.tail_);
}

std::string Weight::str() const {
  std::string s = "(";
  for (int i = 1; i <= support_bound(); ++i) s += std::to_string((*this)[i]) + ",";
  return s + std::to_string(tail_) + ",...)";
}

int level(const Weight& w, LieType t) { return -2 * w.tail() / eps_g(t); }

bool is_dominant(const Weight& w, LieType t) {
  for (int i = 1; i <= w.support_bound(); ++i)
    if (w[i] - w[i + 1] < 0) return false;
  switch (t) {
    case LieType::C: return -w[1] >= 0;
    case LieType::B: return -2 * w[1] >= 0;
    case LieType::D: return -w[1] - w[2] >= 0;
  }
  return false;
}

bool GShape::valid(LieType type, const Partition& lam, int ell) {
  if (ell < 1) return false;
  if (type != LieType::D) return lam.length() <= ell;
  Partition c = conjugate(lam);
  return c.at(0) + c.at(1) <= 2 * ell;
}

GShape::GShape(LieType type_, Partition lam_, int ell_) : type(type_), lam(std::move(lam_)), ell(ell_) {
  if (!valid(type, lam, ell))
    throw std::invalid_argument("shape (" + lam.str() + ")@" + std::to_string(ell) +
                                " is not admissible for type " + type_letter(type));
}

std::string GShape::str() const { return lam.str() + "@" + std::to_string(ell); }

Weight pi_weight(const GShape& s) {
  Partition c = conjugate(s.lam);
  std::vector<int> m(c.length());
  for (int i = 0; i < c.length(); ++i) m[i] = c.at(i) - s.ell;
  return Weight::from_prefix(m, -s.ell);
}

GShape shape_of_dominant(const Weight& w, LieType t) {
  if (!is_dominant(w, t) || w.tail() >= 0)
    throw std::invalid_argument("not a dominant weight of positive level: " + w.str());
  const int ell = -w.tail();
  std::vector<int> cols;
  for (int i = 1; i <= w.support_bound(); ++i) cols.push_back(w[i] + ell);
  return GShape(t, conjugate(Partition(cols)), ell);
}

Partition orbit_representative(const Weight& w) {
  if (w.tail() != 0) throw std::invalid_argument("orbit representative needs a level-zero weight");
  std::vector<int> v;
  for (auto [i, m] : w.exceptions()) v.push_back(std::abs(m));
  std::sort(v.rbegin(), v.rend());
  return Partition(v);
}

WeightDecomposition decompose_weight(const Weight& w, LieType t) {
  const int c = w.tail();
  if (c > 0) throw std::invalid_argument("negative level");
  std::vector<int> upper, lower;
  int flips = 0;
  bool zero_available = (c == 0);
  for (auto [i, v] : w.exceptions()) {
    int target = -std::abs(v);
    if (v > 0) ++flips;
    if (target == 0) zero_available = true;
    if (target > c) upper.push_back(target);
    else if (target < c) lower.push_back(target);
  }
  std::sort(upper.rbegin(), upper.rend());
  std::sort(lower.rbegin(), lower.rend());
  if (t == LieType::D && flips % 2 == 1 && !zero_available) {
    // sign changes come in pairs: the entry nearest zero keeps a positive sign
    if (!upper.empty()) upper[0] = -upper[0];
    else upper.push_back(-c);
  }
  std::vector<int> nu = upper, zero(upper.size(), 0);
  for (int x : lower) {
    nu.push_back(x);
    zero.push_back(x - c);
  }
  WeightDecomposition d;
  d.nu = Weight::from_prefix(nu, c);
  d.zero_part = Weight::from_prefix(zero, 0);
  d.dominant_part = Weight::from_prefix(upper, c);
  return d;
}

GenPartition rho_n(const GShape& s, int n) {
  if (s.lam.at(0) > n) throw std::invalid_argument("rho_n needs λ1 <= n");
  Weight p = pi_weight(s);
  std::vector<int> mags;
  int negatives = 0;
  bool has_zero = false;
  for (int i = 1; i <= n; ++i) {
    mags.push_back(std::abs(p[i]));
    if (p[i] < 0) ++negatives;
    if (p[i] == 0) has_zero = true;
  }
  std::sort(mags.rbegin(), mags.rend());
  if (s.type == LieType::D && !has_zero && negatives % 2 == 1) mags.back() = -mags.back();
  return GenPartition(mags);
}

GenPartition rho_n_formula(const GShape& s, int n) {
  if (s.lam.at(0) > n) throw std::invalid_argument("rho_n needs λ1 <= n");
  const int t = s.t(), ell = s.ell;
  if (t <= ell) {
    std::vector<int> comp(ell);
    for (int i = 0; i < ell; ++i) comp[i] = n - s.lam.at(ell - 1 - i);
    Partition rho = conjugate(Partition(comp));
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = rho.at(i);
    return GenPartition(v);
  }
  std::vector<int> head;
  for (int i = 0; i < 2 * ell - t; ++i) head.push_back(s.lam.at(i));
  for (int i = 0; i < t - ell; ++i) head.push_back(1);
  GenPartition inner = rho_n_formula(GShape(s.type, Partition(head), ell), n);
  std::vector<int> v(inner.parts().begin(), inner.parts().end() - 1);
  v.push_back(ell - t);
  return GenPartition(v);
}

Weight fuse_zero_dominant(const Weight& lz, const Weight& mu, LieType t) {
  if (lz.tail() != 0) throw std::invalid_argument("first argument must have level zero");
  if (!is_dominant(mu, t)) throw std::invalid_argument("second argument must be dominant");
  int p = 0;
  while (mu[p + 1] != mu.tail()) ++p;
  const std::vector<int> dagger = orbit_representative(lz).parts();
  const int r = static_cast<int>(dagger.size());
  std::map<int, int> shift;
  for (int i = 1; i <= r; ++i) shift[p + i] = -dagger[r - i];
  return mu + Weight(shift, 0);
}

std::string BasisLabel::str() const {
  if (mu.empty() && !kappa) return "1";
  std::string s;
  if (!mu.empty()) s = "w:" + mu.str();
  if (kappa) s += (s.empty() ? "" : " * ") + std::string("pi:") + kappa->str();
  return s;
}

BasisLabel label_of_weight(const std::vector<int>& rank_n_weight, int tail, LieType t) {
  WeightDecomposition d = decompose_weight(Weight::from_prefix(rank_n_weight, tail), t);
  BasisLabel b;
  b.mu = orbit_representative(d.zero_part);
  if (tail != 0) b.kappa = shape_of_dominant(d.dominant_part, t);
  return b;
}

}  // namespace crystalline
