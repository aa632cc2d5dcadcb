#pragma once

#include <functional>
#include <map>
#include <vector>

#include "crystalline/partition.hpp"

namespace crystalline {

// A filling of λ(a,b,c) = (2^{b+c},1^a)/(1^b). The left column occupies rows
// b+1..b+c+a, the right column rows 1..b+c.
struct SpinorColumnPair {
  int a = 0, b = 0, c = 0;
  std::vector<int> left, right;

  int cells() const { return static_cast<int>(left.size() + right.size()); }
  bool operator==(const SpinorColumnPair&) const = default;
};

bool is_semistandard(const SpinorColumnPair& T);
// Largest k <= min(a,b) such that moving the right column down k rows keeps
// the filling semistandard.
int residue(const SpinorColumnPair& T);

bool spinor_index_allowed(LieType t, int b, int c);
int spinor_residue_bound(LieType t);

// All semistandard fillings of λ(a,b,c) with entries in 1..max_entry.
void for_each_column_pair(int a, int b, int c, int max_entry,
                          const std::function<void(const SpinorColumnPair&)>& fn);

enum class SpinorFamily {
  Standard,   // T(a)
  BarredZero  // the companion set T̄(0) of type D
};

// Elements of the spinor model with at most max_degree cells and entries
// bounded by max_degree.
void for_each_spinor_column(int a, LieType t, int max_degree, SpinorFamily family,
                            const std::function<void(const SpinorColumnPair&)>& fn);
std::vector<SpinorColumnPair> enumerate_spinor_columns(int a, LieType t, int max_degree,
                                                       SpinorFamily family = SpinorFamily::Standard);

// Content of a filling as a partition, or nullopt-like empty flag when the
// multiplicities are not weakly decreasing in the entry.
bool dominant_content(const SpinorColumnPair& T, Partition& out);

}  // namespace crystalline
