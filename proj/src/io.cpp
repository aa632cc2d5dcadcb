#include "crystalline/io.hpp"

#include <cctype>
#include <charconv>

namespace crystalline {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

int to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view s0) {
  const std::string s = strip(s0);
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(to_int(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Partition parse_partition(std::string_view s) {
  auto parts = parse_int_list(s);
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  try {
    return Partition(parts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad partition '") + std::string(s) + "': " + e.what());
  }
}

TableauShape parse_tableau_shape(std::string_view s, int rank) {
  auto parts = parse_int_list(s);
  if (!parts.empty() && parts.back() < 0) {
    if (static_cast<int>(parts.size()) != rank)
      throw ParseError("a negative last part needs exactly rank-many parts");
    try {
      return TableauShape(GenPartition(parts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad generalized partition: ") + e.what());
    }
  }
  return TableauShape(parse_partition(s));
}

GShape parse_gshape(std::string_view s0, LieType t) {
  const std::string s = strip(s0);
  auto at = s.find('@');
  if (at == std::string::npos) at = s.find(':');
  if (at == std::string::npos) throw ParseError("shape '" + s + "' needs an @ell suffix");
  Partition lam = parse_partition(std::string_view(s).substr(0, at));
  const int ell = to_int(std::string_view(s).substr(at + 1));
  if (ell < 1 || !GShape::valid(t, lam, ell))
    throw ParseError("(" + lam.str() + ")@" + std::to_string(ell) + " is not a shape of type " + type_letter(t));
  return GShape(t, lam, ell);
}

std::pair<int, int> parse_range(std::string_view s0) {
  const std::string s = strip(s0);
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = to_int(s);
    return {v, v};
  }
  int lo = to_int(std::string_view(s).substr(0, dots)), hi = to_int(std::string_view(s).substr(dots + 2));
  if (lo > hi) throw ParseError("empty range " + s);
  return {lo, hi};
}

// ---------------------------------------------------------------------------

namespace {

bool is_number(const std::string& tok) {
  return !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void check_token(const std::string& tok) {
  if (is_number(tok)) return;
  auto colon = tok.find(':');
  if (colon == std::string::npos) throw ParseError("unknown token '" + tok + "'");
  const std::string head = tok.substr(0, colon), arg = tok.substr(colon + 1);
  if (head == "h" || head == "z") {
    if (to_int(arg) < 0) throw ParseError("negative index in '" + tok + "'");
  } else if (head == "hbar") {
    if (to_int(arg) != 0) throw ParseError("only hbar:0 is a generator");
  } else if (head == "w") {
    parse_partition(arg);
  } else if (head == "pi") {
    if (arg.find('@') == std::string::npos) throw ParseError("pi:shape needs an @ell suffix");
  } else {
    throw ParseError("unknown token '" + tok + "'");
  }
}

bool positive_token(const std::string& tok) { return tok.rfind("h:", 0) == 0 || tok.rfind("hbar:", 0) == 0 || tok.rfind("pi:", 0) == 0; }

}  // namespace

std::vector<ExprTerm> parse_expression(std::string_view s0) {
  const std::string s = strip(s0);
  if (s.empty()) throw ParseError("empty expression");
  std::vector<ExprTerm> out;
  std::size_t i = 0;
  int sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    ++i;
  }
  while (true) {
    // one product up to the next top-level + or -
    std::size_t j = i;
    // no token contains a sign, so every + or - separates products
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string prod = s.substr(i, j - i);
    if (prod.empty()) throw ParseError("missing operand in '" + s + "'");
    ExprTerm term;
    term.coeff = sign;
    std::size_t k = 0;
    while (true) {
      auto star = prod.find('*', k);
      std::string tok = prod.substr(k, star == std::string::npos ? std::string::npos : star - k);
      if (tok.empty()) throw ParseError("missing factor in '" + prod + "'");
      check_token(tok);
      if (is_number(tok)) term.coeff *= std::stoll(tok);
      else term.factors.push_back(tok);
      if (star == std::string::npos) break;
      k = star + 1;
    }
    out.push_back(term);
    if (j >= s.size()) break;
    sign = s[j] == '-' ? -1 : 1;
    i = j + 1;
  }
  return out;
}

bool needs_width(const std::vector<ExprTerm>& e) {
  for (const auto& t : e)
    if (std::count_if(t.factors.begin(), t.factors.end(), positive_token) >= 2) return true;
  return false;
}

namespace {

GrothElement groth_atom(const std::string& tok, LieType t, int width) {
  const std::string head = tok.substr(0, tok.find(':')), arg = tok.substr(tok.find(':') + 1);
  if (head == "h") return GrothElement::h(t, to_int(arg), width);
  if (head == "hbar") {
    if (t != LieType::D) throw ParseError("hbar:0 exists only in type D");
    return GrothElement::hbar0(width);
  }
  if (head == "z") return GrothElement::z(t, to_int(arg), width);
  if (head == "w") return GrothElement::w(t, parse_partition(arg), width);
  return GrothElement::pi(parse_gshape(arg, t), width);
}

AElement algebra_atom(const std::string& tok, LieType t) {
  const std::string head = tok.substr(0, tok.find(':')), arg = tok.substr(tok.find(':') + 1);
  if (head == "h") return AElement::h(t, to_int(arg));
  if (head == "hbar") {
    if (t != LieType::D) throw ParseError("hbar:0 exists only in type D");
    return AElement::hbar0();
  }
  if (head == "z") return AElement::z(t, to_int(arg));
  if (head == "w") return psi_zero(t, parse_partition(arg));
  return psi_plus(parse_gshape(arg, t));
}

}  // namespace

GrothElement eval_groth(const std::vector<ExprTerm>& e, LieType t, int width, const GrothOptions& opts) {
  GrothElement total(t, width);
  for (const auto& term : e) {
    GrothElement acc = GrothElement::unit(t, width);
    for (const auto& tok : term.factors) acc = groth_mul(acc, groth_atom(tok, t, width), opts);
    total = total + acc * term.coeff;
  }
  return total;
}

AElement eval_algebra(const std::vector<ExprTerm>& e, LieType t) {
  AElement total(t);
  for (const auto& term : e) {
    AElement acc = AElement::one(t);
    for (const auto& tok : term.factors) acc = acc * algebra_atom(tok, t);
    total = total + acc * term.coeff;
  }
  return total;
}

// ---------------------------------------------------------------------------

json to_json(const Partition& p) { return p.parts(); }

json to_json(const Weight& w) {
  json ex = json::object();
  for (auto& [i, m] : w.exceptions()) ex[std::to_string(i)] = m;
  return {{"tail", w.tail()}, {"exceptions", ex}};
}

json to_json(const GShape& s) {
  return {{"type", std::string(1, type_letter(s.type))}, {"lam", s.lam.parts()}, {"ell", s.ell}};
}

json to_json(const KNTableau& T) {
  json rows = json::array();
  auto r = T.rows();
  for (std::size_t i = 0; i < r.size(); ++i) {
    json row = json::array();
    const bool colored = T.shape().colored && i + 1 == r.size();
    for (Letter x : r[i]) row.push_back(letter_str(x) + (colored ? "*" : ""));
    rows.push_back(row);
  }
  return {{"shape", T.shape().signed_parts()}, {"rows", rows}};
}

json to_json(const SchurSeries& f, int t_power) {
  json terms = json::array();
  for (auto& [p, c] : f.terms()) terms.push_back({{"partition", p.parts()}, {"coeff", c}});
  return {{"cutoff", f.cutoff()}, {"t_power", t_power}, {"terms", terms}};
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coeff", c}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

json to_json(const AElement& a) {
  json terms = json::array();
  for (auto& [m, c] : a.terms()) {
    json h = json::array();
    for (int x : m.h) h.push_back(x == kHbar0 ? json("hbar0") : json(x));
    terms.push_back({{"z", m.z}, {"h", h}, {"coeff", c}});
  }
  return terms;
}

json to_json(const GrothElement& g) {
  json terms = json::array();
  for (auto& [b, c] : g.terms()) {
    json t = {{"mu", b.mu.parts()}, {"coeff", c}};
    t["kappa"] = b.kappa ? to_json(*b.kappa) : json(nullptr);
    terms.push_back(t);
  }
  json out = {{"type", std::string(1, type_letter(g.type()))}, {"terms", terms}};
  if (g.width() < kExactWidth) out["width"] = g.width();
  return out;
}

json to_json(const CrystalGraph& g) {
  json vs = json::array(), es = json::array();
  for (const auto& v : g.vertices) vs.push_back(to_json(v));
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (int i = 0; i < g.rank; ++i)
      if (g.f_arrow[v][i] >= 0) es.push_back({{"from", v}, {"to", g.f_arrow[v][i]}, {"i", i}});
  return {{"type", std::string(1, type_letter(g.type))}, {"rank", g.rank}, {"vertices", vs}, {"edges", es}};
}

}  // namespace crystalline
