#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crystalline/partition.hpp"

namespace crystalline {

// Σ m_i ε_i with m_i = tail for all but finitely many i (1-based).
class Weight {
 public:
  Weight() = default;
  Weight(std::map<int, int> exceptions, int tail);
  static Weight from_prefix(const std::vector<int>& coords, int tail);
  static Weight epsilon(int i, int coeff = 1);

  int operator[](int i) const;
  int tail() const { return tail_; }
  const std::map<int, int>& exceptions() const { return exceptions_; }
  // Largest exceptional index, 0 if none.
  int support_bound() const;
  std::vector<int> prefix(int n) const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

  std::string str() const;

 private:
  std::map<int, int> exceptions_;
  int tail_ = 0;
};

int level(const Weight& w, LieType t);
bool is_dominant(const Weight& w, LieType t);

struct GShape {
  LieType type = LieType::C;
  Partition lam;
  int ell = 1;

  GShape() = default;
  // Throws std::invalid_argument when (lam, ell) lies outside the shape set of the type.
  GShape(LieType type, Partition lam, int ell);
  static bool valid(LieType type, const Partition& lam, int ell);

  // ℓ(λ) for the dominant part; exceeds ell only in type D.
  int t() const { return lam.length(); }
  std::string str() const;  // "3,3,2,1@4"

  auto operator<=>(const GShape&) const = default;
  bool operator==(const GShape&) const = default;
};

Weight pi_weight(const GShape& s);
// Inverse of pi_weight on dominant weights of positive level.
GShape shape_of_dominant(const Weight& w, LieType t);

Partition orbit_representative(const Weight& w);

struct WeightDecomposition {
  Weight nu;
  Weight zero_part;
  Weight dominant_part;
};
WeightDecomposition decompose_weight(const Weight& w, LieType t);

// Π(λ,ℓ) restricted to the first n coordinates, as a rank-n dominant
// representative (a generalized partition in type D).
GenPartition rho_n(const GShape& s, int n);
// The complementation formula taken literally: conjugate of (n-λ_ℓ,...,n-λ_1),
// with last part ℓ-t when t > ℓ. Agrees with rho_n except in type D at odd n.
GenPartition rho_n_formula(const GShape& s, int n);

// Weight of B(ϖ_{lz†}) ⊗ B(mu) placed below the tail of mu, so that
// fuse_zero_dominant(decompose.zero_part, decompose.dominant_part) == decompose.nu.
Weight fuse_zero_dominant(const Weight& lz, const Weight& mu, LieType t);

// Basis label [B(ϖ_μ)]·[B(Π(κ))] of the Grothendieck ring.
struct BasisLabel {
  Partition mu;
  std::optional<GShape> kappa;

  auto operator<=>(const BasisLabel&) const = default;
  bool operator==(const BasisLabel&) const = default;
  std::string str() const;
};

// Infinite-rank label of a rank-n highest weight, padded with the given tail.
BasisLabel label_of_weight(const std::vector<int>& rank_n_weight, int tail, LieType t);

}  // namespace crystalline
