#pragma once

#include <variant>

#include "crystalline/laurent.hpp"
#include "crystalline/partition.hpp"
#include "crystalline/tableau.hpp"

namespace crystalline {

// σ^◇_μ(x^{±1}) with entries e_r(x^{±1}) (plain), e_r - e_{r-2} (prime) or
// e_r(x^{±1},1) (with_one). Rows past ℓ(μ) are unit triangular, so the
// determinant is taken over max(n, ℓ(μ)) rows.
LaurentPoly sigma_det(const Partition& mu, int n, bool prime, bool with_one = false);

// Character of the rank-n highest weight crystal of the given shape, from the
// determinant formulas.
LaurentPoly sigma_char(const Partition& lam, LieType t, int n);
LaurentPoly sigma_char(const GenPartition& lam, LieType t, int n);

// Σ x^{wt T} over the enumerated KN tableaux.
LaurentPoly kn_character(const TableauShape& shape, LieType t, int n, std::size_t cap = 1'000'000);

}  // namespace crystalline
