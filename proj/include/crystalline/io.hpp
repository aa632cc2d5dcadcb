#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crystalline/algebra.hpp"
#include "crystalline/crystal.hpp"
#include "crystalline/grothendieck.hpp"
#include "crystalline/laurent.hpp"
#include "crystalline/schur.hpp"
#include "crystalline/tableau.hpp"

namespace crystalline {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "3,1" or "" (empty). Whitespace is ignored.
std::vector<int> parse_int_list(std::string_view s);
Partition parse_partition(std::string_view s);
// "4,3,1,-1": a leading '-' on the last part makes a generalized partition,
// which then has exactly as many parts as the rank.
TableauShape parse_tableau_shape(std::string_view s, int rank);
// "3,3,2,1@4", also "1:1" for ((1),1).
GShape parse_gshape(std::string_view s, LieType t);
// "0..4" or "3"
std::pair<int, int> parse_range(std::string_view s);

// Sum of products of tokens: h:a, hbar:0, z:b, pi:shape@ell, w:partition,
// an integer, or 1. Example: "h:1 * h:3 - 2 * h:2 * h:0".
struct ExprTerm {
  Coeff coeff = 1;
  std::vector<std::string> factors;  // validated tokens in order
};
std::vector<ExprTerm> parse_expression(std::string_view s);

// Basis-side value; products of two positive-level classes are kept up to
// the given width.
GrothElement eval_groth(const std::vector<ExprTerm>& e, LieType t, int width, const GrothOptions& opts = {});
// Algebra-side value in normal form.
AElement eval_algebra(const std::vector<ExprTerm>& e, LieType t);
// True when some product has two or more positive-level factors.
bool needs_width(const std::vector<ExprTerm>& e);

using json = nlohmann::json;

json to_json(const Partition& p);
json to_json(const Weight& w);
json to_json(const GShape& s);
json to_json(const KNTableau& T);
json to_json(const SchurSeries& f, int t_power = 0);
json to_json(const LaurentPoly& p);
json to_json(const AElement& a);
json to_json(const GrothElement& g);
json to_json(const CrystalGraph& g);

}  // namespace crystalline
