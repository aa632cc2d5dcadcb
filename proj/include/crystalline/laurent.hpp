#pragma once

#include <map>
#include <string>
#include <vector>

#include "crystalline/partition.hpp"

namespace crystalline {

// Integer Laurent polynomial in x_1..x_n.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;

  explicit LaurentPoly(int n = 0) : n_(n) {}
  static LaurentPoly constant(int n, Coeff c);
  static LaurentPoly monomial(const Exponent& e, Coeff c = 1);

  int nvars() const { return n_; }
  const std::map<Exponent, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(const Exponent& e) const;

  void add(const Exponent& e, Coeff c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(Coeff c) const;
  // Exact division of every coefficient; throws std::domain_error otherwise.
  LaurentPoly divided_by(Coeff c) const;
  // Multiply by x^e.
  LaurentPoly shifted(const Exponent& e) const;

  bool operator==(const LaurentPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  std::string str() const;

 private:
  void check(const LaurentPoly& o) const;
  int n_;
  std::map<Exponent, Coeff> terms_;
};

// Elementary symmetric polynomial e_r in x_1..x_n, x_1^{-1}..x_n^{-1} and
// optionally the extra variable 1; zero for r < 0.
LaurentPoly e_pm(int r, int n, bool with_one = false);
// e_r(x_1..x_n) as a polynomial.
LaurentPoly e_plain(int r, int n);
// Π (x_i - x_i^{-1}).
LaurentPoly sinh_product(int n);
// (x_1...x_n)^k
LaurentPoly det_power(int n, int k);

// Determinant by Laplace expansion with memoized minors.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m, int n_vars);

}  // namespace crystalline
