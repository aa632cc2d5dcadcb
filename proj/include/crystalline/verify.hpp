#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crystalline/grothendieck.hpp"
#include "crystalline/partition.hpp"
#include "crystalline/weight.hpp"

namespace crystalline {

// One checked instance of an identity.
struct CheckResult {
  std::string label;
  bool pass = false;
  std::string detail;  // counterexample dump on failure
};

struct Report {
  std::string identity;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::size_t failures() const;
  // Runs fn, recording an exception as a failure of this instance.
  void run(const std::string& label, const std::function<CheckResult()>& fn);
};

// Stratified characters of SST(λ(a,b,c)) by residue against s_{(a+b+c-k,c+k)'},
// for a,b,c <= abc_max and a+b+2c <= degree.
Report verify_residue_character(int abc_max, int degree);

// Spinor characters from enumeration against their E-expansions and Schur sums.
Report verify_e_expansion(const std::vector<LieType>& types, int a_lo, int a_hi, int degree);

// e_{n-r}(x^{±1}), e'_{n-r}(x^{±1}), e_{n-r}(x^{±1},1) against (x_1...x_n)^{-1}
// times E_r, E'_r, E''_r in n variables, for r in [-n, 3n].
Report verify_laurent_equations(int n_lo, int n_hi);

// laurent(t^ℓ S^g) = σ(ρ_n) = enumerated KN character.
Report verify_jt_character(const GShape& s, int n);
Report verify_jt_character_sweep(const std::vector<LieType>& types, int lam1_max, int ell_max, int n_max);

// Enumerated KN character against the σ determinant.
Report verify_kn_character(const std::vector<LieType>& types, int size_max, int n_max);

// The displayed direct sum for B(Π_a) ⊗ B(ϖ_b) (or B(Π̄_0) ⊗ B(ϖ_b)).
GrothElement displayed_tensor_decomposition(LieType t, int a, int b, bool barred = false);
// Rank-stabilized crystal decomposition against the displayed sum.
Report verify_tensor_decomp(const std::vector<LieType>& types, int a_lo, int a_hi, int b_lo, int b_hi);
// Ψ(H_a · [B(ϖ_b)]) against the normal form of h_a z_b.
Report verify_psi(const std::vector<LieType>& types, int a_lo, int a_hi, int b_lo, int b_hi);

// Diagonal structure constants, vanishing across levels, the finiteness
// bound μ ⊆ (λ_1^ℓ) and the ℓ = 2 Jacobi-Trudi identity.
Report verify_dominance_lemma(const std::vector<LieType>& types, StructureConstantCache* cache = nullptr);

// (f·g)·h = f·(g·h) on random triples of small basis elements; the seed is
// recorded in the report label.
Report verify_associativity(const std::vector<LieType>& types, int count, unsigned long long seed);

std::vector<std::string> identity_names();

}  // namespace crystalline
