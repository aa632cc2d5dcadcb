#pragma once

#include <map>
#include <string>
#include <vector>

#include "crystalline/laurent.hpp"
#include "crystalline/partition.hpp"
#include "crystalline/spinor.hpp"
#include "crystalline/weight.hpp"

namespace crystalline {

// Degree cutoff plus an optional bound on the number of rows. Dropping every
// s_λ with ℓ(λ) > max_rows is the ring map to symmetric polynomials in
// max_rows variables, so it commutes with all operations below.
struct Truncation {
  int max_degree = 0;
  int max_rows = -1;  // -1: unbounded

  bool keeps(const Partition& p) const {
    return p.size() <= max_degree && (max_rows < 0 || p.length() <= max_rows);
  }
  bool operator==(const Truncation&) const = default;
};

class SchurSeries {
 public:
  explicit SchurSeries(Truncation tr = {}) : tr_(tr) {}
  static SchurSeries one(Truncation tr);
  static SchurSeries schur(const Partition& p, Truncation tr, Coeff c = 1);

  const Truncation& truncation() const { return tr_; }
  int cutoff() const { return tr_.max_degree; }
  const std::map<Partition, Coeff>& terms() const { return terms_; }
  Coeff coeff(const Partition& p) const;
  bool is_zero() const { return terms_.empty(); }

  // Terms outside the truncation are dropped silently.
  void add(const Partition& p, Coeff c);
  SchurSeries& operator+=(const SchurSeries& o);
  SchurSeries& operator-=(const SchurSeries& o);
  SchurSeries operator+(const SchurSeries& o) const;
  SchurSeries operator-(const SchurSeries& o) const;
  SchurSeries operator*(const SchurSeries& o) const;
  SchurSeries operator*(Coeff c) const;
  SchurSeries divided_by(Coeff c) const;
  SchurSeries degree_part(int d) const;
  SchurSeries truncated(Truncation tr) const;

  bool operator==(const SchurSeries& o) const { return tr_ == o.tr_ && terms_ == o.terms_; }
  std::string str() const;  // "s(2) + s(1,1) - 2*s()"

 private:
  void check(const SchurSeries& o) const;
  Truncation tr_;
  std::map<Partition, Coeff> terms_;
};

// s_λ·s_μ by the lattice-word rule, keeping ν with at most max_rows rows.
// Memoized and safe to call concurrently.
const std::map<Partition, Coeff>& lr_product(const Partition& lam, const Partition& mu, int max_rows = -1);
Coeff lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu);

// Number of semistandard tableaux of shape λ and content β.
Coeff kostka(const Partition& lam, const std::vector<int>& content);

// Schur expansion of a symmetric function given by its coefficients on the
// monomials x^β for partitions β.
SchurSeries schur_from_monomials(const std::map<Partition, Coeff>& dominant, Truncation tr);

SchurSeries e_series(int r, Truncation tr);
SchurSeries cap_e(int r, Truncation tr);

enum class Flavor { Plain, Prime, DoublePrime };
// E_r, E'_r = E_r - E_{r+2}, E''_r = E_r + E_{r+1}
SchurSeries cap_e(int r, Flavor f, Truncation tr);
// (Σ e_i)(Σ (-1)^i e_i)
SchurSeries sign_product_series(Truncation tr);

// det(E^◇_{r_i+(j-1)} + [j≠1] E^◇_{r_i-(j-1)}), r_i = λ_{ℓ-i+1} + i - 1.
SchurSeries jt_determinant(const Partition& lam, int ell, Flavor f, Truncation tr);
// S^g_{(λ,ℓ)}; the type-D half sums are formed exactly and halved afterwards.
SchurSeries s_g_series(const GShape& s, Truncation tr);

// Schur-sum form of the spinor character without the factor t.
SchurSeries spinor_char(int a, LieType t, Truncation tr, SpinorFamily family = SpinorFamily::Standard);
// Weight generating function of the enumerated spinor columns, without t.
SchurSeries spinor_char_enumerated(int a, LieType t, int max_degree,
                                   SpinorFamily family = SpinorFamily::Standard);

// s_λ(x_1..x_n).
const LaurentPoly& schur_polynomial(const Partition& lam, int n);
// Σ c_λ s_λ(x_1..x_n) · (x_1...x_n)^{-t_power}.
LaurentPoly laurent_specialize(const SchurSeries& f, int t_power, int n);

}  // namespace crystalline
