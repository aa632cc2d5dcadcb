#pragma once

#include <map>
#include <string>
#include <vector>

#include "crystalline/grothendieck.hpp"

namespace crystalline {

// h-variable index: a >= 0 for h_a, kHbar0 for h̄_0 (type D).
inline constexpr int kHbar0 = -1;

// z_{i_1}···z_{i_k} · h-monomial, both sorted; z_0 = 1 never appears.
struct AMonomial {
  std::vector<int> z;
  std::vector<int> h;

  auto operator<=>(const AMonomial&) const = default;
  bool operator==(const AMonomial&) const = default;
  std::string str() const;  // "z1*h0", "hbar0", "1"
};

// Element of the algebra in normal form: every z to the left of every h.
// Products normal-order h·z_n = z_n·h + δ_n(h).
class AElement {
 public:
  explicit AElement(LieType t = LieType::C) : type_(t) {}
  static AElement one(LieType t);
  static AElement h(LieType t, int a);
  static AElement hbar0();
  static AElement z(LieType t, int b);
  static AElement monomial(LieType t, const AMonomial& m, Coeff c = 1);

  LieType type() const { return type_; }
  const std::map<AMonomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(const AMonomial& m) const;

  void add(const AMonomial& m, Coeff c);
  AElement operator+(const AElement& o) const;
  AElement operator-(const AElement& o) const;
  AElement operator*(const AElement& o) const;
  AElement operator*(Coeff c) const;
  AElement divided_by(Coeff c) const;
  bool operator==(const AElement& o) const { return type_ == o.type_ && terms_ == o.terms_; }

  // Terms with more z's first, e.g. "z1*h0 + h1".
  std::string str() const;

 private:
  void check(const AElement& o) const;
  LieType type_;
  std::map<AMonomial, Coeff> terms_;
};

// δ_n on the subalgebra generated by the h's and z_1..z_{n-1}; throws
// std::invalid_argument when a z_k with k >= n occurs.
AElement delta(int n, const AElement& x);
// δ_n(h_a) from the type tables (b read as n); a = kHbar0 for h̄_0.
AElement delta_h(LieType t, int n, int a);

// Product of a sequence, evaluated left to right.
AElement a_normalize(const std::vector<AElement>& factors);

// Images of basis classes: [B(ϖ_μ)] goes to s_μ written in z_i = e_i, and
// [B(Π(κ))] to the Jacobi-Trudi determinant in the h's.
AElement psi_zero(LieType t, const Partition& mu);
AElement psi_plus(const GShape& kappa);
AElement psi(const GrothElement& f);

}  // namespace crystalline
