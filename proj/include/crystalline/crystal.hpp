#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crystalline/tableau.hpp"
#include "crystalline/weight.hpp"

namespace crystalline {

class LetterCrystal {
 public:
  LetterCrystal(LieType t, int n);

  LieType type() const { return type_; }
  int rank() const { return n_; }

  std::optional<Letter> f(Letter x, int i) const;
  std::optional<Letter> e(Letter x, int i) const;
  int epsilon(Letter x, int i) const;
  int phi(Letter x, int i) const;

  std::vector<int> simple_root(int i) const;
  // ⟨wt, α_i^∨⟩
  int pairing(const std::vector<int>& wt, int i) const;

 private:
  void check_index(int i) const;
  int slot(Letter x) const { return x + n_; }

  LieType type_;
  int n_;
  // [i][slot] -> target letter, or sentinel when undefined
  std::vector<std::vector<int>> f_, e_, eps_, phi_;
};

std::optional<std::vector<Letter>> tensor_f(const LetterCrystal& L, const std::vector<Letter>& word, int i);
std::optional<std::vector<Letter>> tensor_e(const LetterCrystal& L, const std::vector<Letter>& word, int i);
int tensor_epsilon(const LetterCrystal& L, const std::vector<Letter>& word, int i);
int tensor_phi(const LetterCrystal& L, const std::vector<Letter>& word, int i);

struct CrystalOptions {
  ReadingOrder order = ReadingOrder::RightToLeftTopDown;
  // Validate every produced tableau and throw std::logic_error on failure.
  bool check_closure = false;
  KnOptions kn;
};

enum class Op { E, F };

std::optional<KNTableau> tableau_op(const KNTableau& T, Op op, int i, const CrystalOptions& opts = {});
// Apply raising operators until none applies.
KNTableau climb_to_source(KNTableau T, const CrystalOptions& opts = {});

struct CrystalGraph {
  LieType type = LieType::C;
  int rank = 0;
  std::vector<KNTableau> vertices;
  // f_arrow[v][i] is the index of f̃_i v, or -1.
  std::vector<std::vector<int>> f_arrow, e_arrow;

  std::vector<int> sources() const;
  std::size_t edge_count() const;
  int index_of(const KNTableau& T) const;
};

CrystalGraph build_graph(const KNTableau& seed, const CrystalOptions& opts = {},
                         std::size_t cap = 1'000'000);

using WeightMultiset = std::map<std::vector<int>, long>;

// Weights of the elements a ⊗ b (a from left, b from right) killed by every ẽ_i.
WeightMultiset highest_weights_of_tensor(const std::vector<KNTableau>& left,
                                         const std::vector<KNTableau>& right,
                                         const CrystalOptions& opts = {});
// Same for a single left element, searching the right factor's KN tableaux
// with reading-word prefixes pruned by ε_i(prefix) <= φ_i(source).
WeightMultiset highest_weights_with_source(const KNTableau& source, const TableauShape& shape,
                                           const CrystalOptions& opts = {}, std::size_t cap = 1'000'000);
WeightMultiset hw_decompose_tensor(const CrystalGraph& A, const CrystalGraph& B,
                                   const CrystalOptions& opts = {});

// A tensor factor: B(ϖ_μ) for a partition, B(Π(κ)) for a shape.
using Factor = std::variant<Partition, GShape>;
int factor_level_tail(const Factor& f);
TableauShape factor_model_shape(const Factor& f, int n);

class StabilizationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StabilizationPolicy {
  int n_start = 0;  // 0 selects the automatic start rank
  int max_escalations = 2;
  int max_width = -1;  // keep only dominant parts with λ1 <= max_width (-1: keep all)
  bool enumerate_by_bfs = false;
  // search only right factors that can complete a highest weight element
  bool prune_partners = true;
  std::size_t cap = 1'000'000;
  CrystalOptions crystal;
};

struct StabilizedDecomposition {
  std::map<BasisLabel, long> terms;
  int rank = 0;
};

std::map<BasisLabel, long> decomposition_at_rank(const Factor& left, const Factor& right, LieType t, int n,
                                                 const StabilizationPolicy& policy = {});
StabilizedDecomposition stabilized_decomposition(const Factor& left, const Factor& right, LieType t,
                                                 const StabilizationPolicy& policy = {});

std::string to_dot(const CrystalGraph& g);

}  // namespace crystalline
