#include "crystalline/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystalline {

LaurentPoly sigma_det(const Partition& mu, int n, bool prime, bool with_one) {
  const int size = std::max(n, mu.length());
  auto entry = [&](int r) {
    LaurentPoly e = e_pm(r, n, with_one);
    if (prime) e -= e_pm(r - 2, n, with_one);
    return e;
  };
  std::vector<std::vector<LaurentPoly>> m(size, std::vector<LaurentPoly>(size, LaurentPoly(n)));
  for (int i = 1; i <= size; ++i) {
    const int r = mu.at(i - 1) - i + 1;
    for (int j = 1; j <= size; ++j) {
      m[i - 1][j - 1] = entry(r + j - 1);
      if (j != 1) m[i - 1][j - 1] += entry(r - j + 1);
    }
  }
  return determinant(m, n);
}

namespace {

Partition minus_column(const Partition& lam, int n) {
  std::vector<int> p;
  for (int i = 0; i < n; ++i)
    if (lam.at(i) - 1 > 0) p.push_back(lam.at(i) - 1);
  return Partition(p);
}

LaurentPoly d_half_sum(const Partition& mu, int n, int sign) {
  LaurentPoly twice = sigma_det(conjugate(mu), n, false) +
                      sigma_det(conjugate(minus_column(mu, n)), n, true) * sinh_product(n) * sign;
  return twice.divided_by(2);
}

}  // namespace

LaurentPoly sigma_char(const Partition& lam, LieType t, int n) {
  if (lam.length() > n) throw std::invalid_argument("shape (" + lam.str() + ") does not fit rank " + std::to_string(n));
  switch (t) {
    case LieType::C: return sigma_det(conjugate(lam), n, true);
    case LieType::B: return sigma_det(conjugate(lam), n, false, true);
    case LieType::D:
      if (lam.length() < n) return sigma_det(conjugate(lam), n, false);
      return d_half_sum(lam, n, 1);
  }
  return LaurentPoly(n);
}

LaurentPoly sigma_char(const GenPartition& lam, LieType t, int n) {
  if (lam.rank() != n) throw std::invalid_argument("generalized partition " + lam.str() + " has the wrong rank");
  if (!lam.negative()) return sigma_char(lam.abs_shape(), t, n);
  if (t != LieType::D) throw std::invalid_argument("a negative last part needs type D");
  return d_half_sum(lam.abs_shape(), n, -1);
}

LaurentPoly kn_character(const TableauShape& shape, LieType t, int n, std::size_t cap) {
  LaurentPoly out(n);
  for (const KNTableau& T : enumerate_kn(shape, t, n, {}, cap)) out.add(T.weight(), 1);
  return out;
}

}  // namespace crystalline
