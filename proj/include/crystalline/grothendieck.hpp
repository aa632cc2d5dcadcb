#pragma once

#include <climits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "crystalline/crystal.hpp"
#include "crystalline/weight.hpp"

namespace crystalline {

// Products of positive-level classes are infinite sums. A GrothElement keeps
// the terms whose dominant part has first row at most width(); those terms
// are exact, everything wider is dropped.
inline constexpr int kExactWidth = INT_MAX / 4;

class GrothElement {
 public:
  explicit GrothElement(LieType t = LieType::C, int width = kExactWidth) : type_(t), width_(width) {}
  static GrothElement basis(LieType t, const BasisLabel& b, Coeff c = 1, int width = kExactWidth);
  static GrothElement unit(LieType t, int width = kExactWidth);
  // [B(Π_a)], and [B(Π̄_0)] in type D
  static GrothElement h(LieType t, int a, int width = kExactWidth);
  static GrothElement hbar0(int width = kExactWidth);
  // [B(ϖ_μ)]; z(b) is the single column (1^b)
  static GrothElement w(LieType t, const Partition& mu, int width = kExactWidth);
  static GrothElement z(LieType t, int b, int width = kExactWidth);
  static GrothElement pi(const GShape& s, int width = kExactWidth);

  LieType type() const { return type_; }
  int width() const { return width_; }
  const std::map<BasisLabel, Coeff>& terms() const { return terms_; }
  Coeff coeff(const BasisLabel& b) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const BasisLabel& b, Coeff c);
  // Lowers the width, dropping the terms that became inexact.
  GrothElement with_width(int width) const;

  GrothElement operator+(const GrothElement& o) const;
  GrothElement operator-(const GrothElement& o) const;
  GrothElement operator*(Coeff c) const;
  bool operator==(const GrothElement& o) const { return type_ == o.type_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  LieType type_;
  int width_;
  std::map<BasisLabel, Coeff> terms_;
};

int label_width(const BasisLabel& b);

struct GrothOptions {
  StabilizationPolicy policy;
};

// The four generator-level products.
GrothElement mul_zero_zero(LieType t, const Partition& mu, const Partition& nu);
GrothElement mul_zero_posi(const Partition& mu, const GShape& kappa);
GrothElement mul_posi_posi(const GShape& k1, const GShape& k2, int width, const GrothOptions& opts = {});
GrothElement mul_posi_zero(const GShape& kappa, const Partition& nu, int width, const GrothOptions& opts = {});

// Bilinear product. Mixed basis elements are multiplied along
// ϖ_μ·((Π(κ)·ϖ_μ')·Π(κ')). The result's width is min(W_g, W_f - m) where m
// bounds |μ'| over the terms of g, because multiplying by B(ϖ_μ') lowers the
// first row of a dominant part by at most |μ'|.
GrothElement groth_mul(const GrothElement& f, const GrothElement& g, const GrothOptions& opts = {});

// Line-oriented memo of structure constants: "C 2 1,1 | 1,1@2 | 1".
class StructureConstantCache {
 public:
  std::optional<Coeff> lookup(const std::string& key) const;
  void store(const std::string& key, Coeff value);
  // Returns the number of records read; malformed lines throw std::runtime_error.
  std::size_t load(const std::string& path);
  void save(const std::string& path) const;
  std::size_t size() const;

  static std::string key(LieType t, int ell, const std::vector<int>& mu, const GShape& target);

 private:
  mutable std::mutex mu_;
  std::map<std::string, Coeff> table_;
};

// Factors H_{μ_1}···H_{μ_m}, or H_{μ_1}···H_{μ_{2m-t}}·H̄_0^{t-m} when ℓ(μ) = t > m.
std::vector<GShape> structure_factors(LieType t, const std::vector<int>& mu, int m);
// Coefficient of H(target) in that product; zero when the levels differ.
Coeff structure_constant(LieType t, const std::vector<int>& mu, int m, const GShape& target,
                         StructureConstantCache* cache = nullptr, const GrothOptions& opts = {});

}  // namespace crystalline
