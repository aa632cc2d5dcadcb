#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crystalline/crystal.hpp"
#include "crystalline/io.hpp"
#include "crystalline/verify.hpp"

using namespace crystalline;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string type = "c";
  std::string format;
  unsigned long long seed = 1;
  std::size_t max_vertices = 1'000'000;
  int max_degree = 10;
  int max_rank = 6;
};

std::vector<LieType> parse_types(const std::string& s) {
  if (s == "all") return {LieType::B, LieType::C, LieType::D};
  try {
    return {parse_lie_type(s)};
  } catch (const std::exception&) {
    throw ParseError("unknown type '" + s + "' (expected b, c, d or all)");
  }
}

LieType single_type(const std::string& s) {
  auto ts = parse_types(s);
  if (ts.size() != 1) throw ParseError("this command needs a single type");
  return ts[0];
}

void check_rank(int n, const Common& c) {
  if (n < 1) throw ParseError("rank must be positive");
  if (n > c.max_rank) throw CapError("rank " + std::to_string(n) + " exceeds --max-rank " + std::to_string(c.max_rank));
}

void check_degree(int d, const Common& c) {
  if (d < 0) throw ParseError("degree must be nonnegative");
  if (d > c.max_degree)
    throw CapError("degree " + std::to_string(d) + " exceeds --max-degree " + std::to_string(c.max_degree));
}

std::string csv_word(const std::vector<std::vector<Letter>>& rows) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "/";
    for (std::size_t j = 0; j < rows[i].size(); ++j) s += (j ? " " : "") + letter_str(rows[i][j]);
  }
  return s;
}

std::string csv_weight(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::string shape;
  int rank = 2;
  int spinor = -1;
  bool barred = false;
  int degree = 6;
};

int cmd_enumerate(const Common& c, const EnumerateArgs& a) {
  const LieType t = single_type(c.type);
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  if (fmt == "dot") throw ParseError("enumerate writes json or csv");
  if (a.spinor >= 0) {
    check_degree(a.degree, c);
    if (a.barred && (t != LieType::D || a.spinor != 0)) throw ParseError("--barred needs type d and --spinor 0");
    auto cols = enumerate_spinor_columns(a.spinor, t, a.degree, a.barred ? SpinorFamily::BarredZero : SpinorFamily::Standard);
    if (cols.size() > c.max_vertices) throw CapError("spinor enumeration exceeded --max-vertices");
    if (fmt == "json") {
      json out = json::array();
      for (auto& T : cols)
        out.push_back({{"a", T.a}, {"b", T.b}, {"c", T.c}, {"left", T.left}, {"right", T.right}, {"residue", residue(T)}});
      std::cout << out.dump(1) << "\n";
    } else {
      std::cout << "index,a,b,c,left,right,residue\n";
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const auto& T = cols[i];
        std::cout << i << "," << T.a << "," << T.b << "," << T.c << "," << csv_weight(T.left) << ","
                  << csv_weight(T.right) << "," << residue(T) << "\n";
      }
    }
    return kExitOk;
  }
  check_rank(a.rank, c);
  const TableauShape shape = parse_tableau_shape(a.shape, a.rank);
  if (shape.num_rows() > a.rank) throw ParseError("shape " + shape.str() + " does not fit rank " + std::to_string(a.rank));
  auto tabs = enumerate_kn(shape, t, a.rank, {}, c.max_vertices);
  if (fmt == "json") {
    json out = json::array();
    for (auto& T : tabs) out.push_back(to_json(T));
    std::cout << out.dump(1) << "\n";
  } else {
    std::cout << "index,shape,weight,rows\n";
    for (std::size_t i = 0; i < tabs.size(); ++i)
      std::cout << i << ",\"" << shape.str() << "\"," << csv_weight(tabs[i].weight()) << "," << csv_word(tabs[i].rows()) << "\n";
  }
  return kExitOk;
}

struct GraphArgs {
  std::string shape;
  int rank = 2;
};

int cmd_graph(const Common& c, const GraphArgs& a) {
  const LieType t = single_type(c.type);
  check_rank(a.rank, c);
  const TableauShape shape = parse_tableau_shape(a.shape, a.rank);
  if (shape.num_rows() > a.rank) throw ParseError("shape " + shape.str() + " does not fit rank " + std::to_string(a.rank));
  CrystalGraph g = build_graph(t_lambda(shape, t, a.rank), {}, c.max_vertices);
  const std::string fmt = c.format.empty() ? "dot" : c.format;
  if (fmt == "dot") {
    std::cout << to_dot(g);
  } else if (fmt == "json") {
    std::cout << to_json(g).dump(1) << "\n";
  } else {
    std::cout << "from,to,i\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      for (int i = 0; i < g.rank; ++i)
        if (g.f_arrow[v][i] >= 0) std::cout << v << "," << g.f_arrow[v][i] << "," << i << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  std::string a = "0..2", b = "0..2";
  std::string ranks;
  std::string shape;
  int degree = -1;
  int abc = 3;
  int lam1 = 2, ell = 2, size = 4;
  int count = 20;
};

std::unique_ptr<StructureConstantCache> open_cache() {
  auto cache = std::make_unique<StructureConstantCache>();
  if (const char* p = std::getenv("CRYSTALLINE_CACHE"); p && *p) {
    try {
      cache->load(p);
    } catch (const std::runtime_error& e) {
      throw ParseError(e.what());
    }
  }
  return cache;
}

void close_cache(const StructureConstantCache& cache) {
  if (const char* p = std::getenv("CRYSTALLINE_CACHE"); p && *p) cache.save(p);
}

int cmd_verify(const Common& c, const VerifyArgs& v) {
  const auto names = identity_names();
  if (std::find(names.begin(), names.end(), v.identity) == names.end()) {
    std::string list;
    for (auto& n : names) list += " " + n;
    throw ParseError("unknown identity '" + v.identity + "'; known:" + list);
  }
  const std::vector<LieType> types = parse_types(c.type);
  auto [a_lo, a_hi] = parse_range(v.a);
  auto [b_lo, b_hi] = parse_range(v.b);
  auto rank_range = [&](int lo, int hi) {
    auto r = v.ranks.empty() ? std::pair{lo, hi} : parse_range(v.ranks);
    check_rank(r.second, c);
    return r;
  };
  auto degree = [&](int dflt) {
    const int d = v.degree < 0 ? dflt : v.degree;
    check_degree(d, c);
    return d;
  };

  Report rep;
  if (v.identity == "residue-character") {
    rep = verify_residue_character(v.abc, degree(8));
  } else if (v.identity == "e-expansion") {
    rep = verify_e_expansion(types, a_lo, a_hi, degree(10));
  } else if (v.identity == "laurent-bridge") {
    auto [lo, hi] = rank_range(1, 4);
    rep = verify_laurent_equations(lo, hi);
  } else if (v.identity == "jt-character") {
    if (!v.shape.empty()) {
      auto [lo, hi] = rank_range(3, 3);
      rep.identity = "jt-character";
      for (LieType t : types) {
        const GShape s = parse_gshape(v.shape, t);
        if (s.lam.at(0) > hi) throw ParseError("rank must be at least the first row of " + s.str());
        for (int n = std::max(lo, s.lam.at(0)); n <= hi; ++n) {
          Report r = verify_jt_character(s, n);
          rep.checks.insert(rep.checks.end(), r.checks.begin(), r.checks.end());
        }
      }
    } else {
      rep = verify_jt_character_sweep(types, v.lam1, v.ell, rank_range(1, 4).second);
    }
  } else if (v.identity == "kn-character") {
    rep = verify_kn_character(types, v.size, rank_range(1, 3).second);
  } else if (v.identity == "tensor-decomp") {
    rep = verify_tensor_decomp(types, a_lo, a_hi, b_lo, b_hi);
  } else if (v.identity == "psi") {
    rep = verify_psi(types, a_lo, a_hi, b_lo, b_hi);
  } else if (v.identity == "dominance-lemma") {
    auto cache = open_cache();
    rep = verify_dominance_lemma(types, cache.get());
    close_cache(*cache);
  } else if (v.identity == "associativity") {
    rep = verify_associativity(types, v.count, c.seed);
  }

  if (c.format == "json") {
    json checks = json::array();
    for (auto& k : rep.checks) checks.push_back({{"label", k.label}, {"pass", k.pass}, {"detail", k.detail}});
    std::cout << json{{"identity", rep.identity}, {"pass", rep.all_pass()}, {"checks", checks}}.dump(1) << "\n";
  } else if (c.format == "csv") {
    std::cout << "identity,label,pass\n";
    for (auto& k : rep.checks) std::cout << rep.identity << ",\"" << k.label << "\"," << (k.pass ? "PASS" : "FAIL") << "\n";
  } else {
    for (auto& k : rep.checks) {
      std::cout << (k.pass ? "PASS " : "FAIL ") << k.label << "\n";
      if (!k.pass) std::cout << "    " << k.detail << "\n";
    }
    std::cout << (rep.all_pass() ? "PASS " : "FAIL ") << rep.identity << ": "
              << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " instances\n";
  }
  return rep.all_pass() ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------

struct GrothArgs {
  std::string expr;
  std::string side = "K";
  int width = -1;
  std::string mu, target;
  int level = -1;
};

int cmd_groth(const Common& c, const GrothArgs& g) {
  const LieType t = single_type(c.type);
  if (!g.target.empty()) {
    // structure constant K^{(μ,m)}_{target}
    const GShape target = parse_gshape(g.target, t);
    const int m = g.level > 0 ? g.level : target.ell;
    auto cache = open_cache();
    const Coeff k = structure_constant(t, parse_int_list(g.mu), m, target, cache.get());
    close_cache(*cache);
    if (c.format == "json") std::cout << json{{"mu", parse_int_list(g.mu)}, {"level", m}, {"target", to_json(target)}, {"coeff", k}}.dump() << "\n";
    else std::cout << k << "\n";
    return kExitOk;
  }
  if (g.expr.empty()) throw ParseError("groth needs an expression or --target");
  const auto e = parse_expression(g.expr);
  std::string side = g.side;
  for (auto& ch : side) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (side != "K" && side != "A" && side != "BOTH") throw ParseError("--side takes K, A or both");
  json out = json::object();
  std::ostringstream text;
  if (side != "A") {
    int width = g.width;
    if (width < 0 && needs_width(e)) {
      width = 4;
      std::cerr << "note: products of positive-level classes are infinite; keeping terms with first row <= " << width
                << " (set --width)\n";
    }
    GrothElement k = eval_groth(e, t, width < 0 ? kExactWidth : width);
    out["K"] = to_json(k);
    text << (side == "BOTH" ? "K: " : "") << k.str() << "\n";
  }
  if (side != "K") {
    AElement a = eval_algebra(e, t);
    out["A"] = to_json(a);
    text << (side == "BOTH" ? "A: " : "") << a.str() << "\n";
  }
  if (c.format == "json") std::cout << out.dump(1) << "\n";
  else std::cout << text.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystals of classical type: KN tableaux, characters and the Grothendieck ring"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", common.type, "b, c or d (verify also accepts all)")->capture_default_str();
    sub->add_option("--format", common.format, "json, csv or dot");
    sub->add_option("--seed", common.seed, "seed for randomized suites")->capture_default_str();
    sub->add_option("--max-vertices", common.max_vertices, "vertex cap")->capture_default_str();
    sub->add_option("--max-degree", common.max_degree, "degree cap")->capture_default_str();
    sub->add_option("--max-rank", common.max_rank, "rank cap")->capture_default_str();
  };

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "list KN tableaux or spinor columns");
  add_common(en);
  en->add_option("--shape", ea.shape, "parts like 2,1 or 1,-1; empty for the empty shape");
  en->add_option("--rank", ea.rank, "rank n")->capture_default_str();
  en->add_option("--spinor", ea.spinor, "list spinor columns T(a) instead");
  en->add_flag("--barred", ea.barred, "with --spinor 0 in type d: the barred family");
  en->add_option("--degree", ea.degree, "cell bound for spinor columns")->capture_default_str();

  GraphArgs ga;
  auto* gr = app.add_subcommand("graph", "crystal graph of a KN shape");
  add_common(gr);
  gr->add_option("--shape", ga.shape, "parts like 2,1");
  gr->add_option("--rank", ga.rank, "rank n")->capture_default_str();

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "check an identity instance by instance");
  add_common(ve);
  ve->add_option("identity", va.identity, "residue-character, e-expansion, laurent-bridge, jt-character, tensor-decomp, psi, dominance-lemma, kn-character, associativity")
      ->required();
  ve->add_option("--a", va.a, "range like 0..4")->capture_default_str();
  ve->add_option("--b", va.b, "range like 0..2")->capture_default_str();
  ve->add_option("--rank", va.ranks, "rank or range of ranks");
  ve->add_option("--shape", va.shape, "shape like 1,1@2 or 1:1");
  ve->add_option("--degree", va.degree, "degree cutoff");
  ve->add_option("--abc", va.abc, "bound on a, b, c for residue-character")->capture_default_str();
  ve->add_option("--lam1", va.lam1, "bound on the first row for the jt-character sweep")->capture_default_str();
  ve->add_option("--ell", va.ell, "bound on the level for the jt-character sweep")->capture_default_str();
  ve->add_option("--size", va.size, "bound on |shape| for kn-character")->capture_default_str();
  ve->add_option("--count", va.count, "number of random triples for associativity")->capture_default_str();

  GrothArgs gg;
  auto* gt = app.add_subcommand("groth", "evaluate an expression in the Grothendieck ring");
  add_common(gt);
  gt->add_option("expr", gg.expr, "e.g. \"h:0 * z:1\"");
  gt->add_option("--side", gg.side, "K (basis), A (normal form) or both")->capture_default_str();
  gt->add_option("--width", gg.width, "keep dominant parts with first row <= width");
  gt->add_option("--mu", gg.mu, "with --target: the factors H_mu1...H_mum");
  gt->add_option("--level", gg.level, "with --target: number of factors m");
  gt->add_option("--target", gg.target, "print the structure constant of this shape");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (!common.format.empty() && common.format != "json" && common.format != "csv" && common.format != "dot")
      throw ParseError("--format takes json, csv or dot");
    if (*en) return cmd_enumerate(common, ea);
    if (*gr) return cmd_graph(common, ga);
    if (*ve) return cmd_verify(common, va);
    if (*gt) return cmd_groth(common, gg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitOk;
}
