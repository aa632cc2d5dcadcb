#include "crystalline/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "crystalline/algebra.hpp"
#include "crystalline/characters.hpp"
#include "crystalline/schur.hpp"
#include "crystalline/spinor.hpp"

namespace crystalline {

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });
}

void Report::run(const std::string& label, const std::function<CheckResult()>& fn) {
  try {
    CheckResult r = fn();
    r.label = label;
    checks.push_back(std::move(r));
  } catch (const std::exception& e) {
    checks.push_back({label, false, std::string("exception: ") + e.what()});
  }
}

namespace {

template <class T>
CheckResult compare(const T& got, const T& want) {
  if (got == want) return {"", true, ""};
  return {"", false, "got " + got.str() + "\n    want " + want.str()};
}

std::string tname(LieType t) { return std::string(1, type_letter(t)); }

Partition column(int b) { return Partition(std::vector<int>(b, 1)); }

}  // namespace

Report verify_residue_character(int abc_max, int degree) {
  Report rep{"residue-character", {}};
  const Truncation tr{degree, -1};
  for (int a = 0; a <= abc_max; ++a)
    for (int b = 0; b <= abc_max; ++b)
      for (int c = 0; c <= abc_max; ++c) {
        const int cells = a + b + 2 * c;
        if (cells > degree) continue;
        std::ostringstream label;
        label << "a=" << a << " b=" << b << " c=" << c;
        rep.run(label.str(), [&] {
          std::map<int, std::map<Partition, Coeff>> strata;
          for_each_column_pair(a, b, c, std::max(cells, 1), [&](const SpinorColumnPair& T) {
            Partition p;
            if (dominant_content(T, p)) ++strata[residue(T)][p];
          });
          std::ostringstream bad;
          for (auto& [k, dom] : strata)
            if (k < 0 || k > std::min(a, b)) bad << " residue " << k << " out of range;";
          for (int k = 0; k <= std::min(a, b); ++k) {
            SchurSeries got = schur_from_monomials(strata[k], tr);
            SchurSeries want = SchurSeries::schur(conjugate(Partition{a + b + c - k, c + k}), tr);
            if (!(got == want)) bad << " k=" << k << ": got " << got.str() << ", want " << want.str() << ";";
          }
          return CheckResult{"", bad.str().empty(), bad.str()};
        });
      }
  return rep;
}

Report verify_e_expansion(const std::vector<LieType>& types, int a_lo, int a_hi, int degree) {
  Report rep{"e-expansion", {}};
  const Truncation tr{degree, -1};
  for (LieType t : types)
    for (int a = std::max(a_lo, 0); a <= a_hi; ++a) {
      if (t == LieType::D && a == 0) continue;
      const std::string label = tname(t) + " a=" + std::to_string(a);
      rep.run(label + " E-form", [&] {
        SchurSeries want = t == LieType::C   ? cap_e(a, tr) - cap_e(a + 2, tr)
                           : t == LieType::B ? cap_e(a, tr) + cap_e(a + 1, tr)
                                             : cap_e(a, tr);
        return compare(spinor_char_enumerated(a, t, degree), want);
      });
      rep.run(label + " Schur-sum form", [&] { return compare(spinor_char_enumerated(a, t, degree), spinor_char(a, t, tr)); });
    }
  const bool with_d = std::find(types.begin(), types.end(), LieType::D) != types.end();
  if (with_d && a_lo <= 0) {
    rep.run("D a=0 sum", [&] {
      return compare(spinor_char_enumerated(0, LieType::D, degree) +
                         spinor_char_enumerated(0, LieType::D, degree, SpinorFamily::BarredZero),
                     cap_e(0, tr));
    });
    rep.run("D a=0 difference", [&] {
      return compare(spinor_char_enumerated(0, LieType::D, degree) -
                         spinor_char_enumerated(0, LieType::D, degree, SpinorFamily::BarredZero),
                     sign_product_series(tr));
    });
    rep.run("D a=0 Schur-sum forms", [&] {
      CheckResult r = compare(spinor_char_enumerated(0, LieType::D, degree), spinor_char(0, LieType::D, tr));
      if (!r.pass) return r;
      return compare(spinor_char_enumerated(0, LieType::D, degree, SpinorFamily::BarredZero),
                     spinor_char(0, LieType::D, tr, SpinorFamily::BarredZero));
    });
  }
  return rep;
}

Report verify_laurent_equations(int n_lo, int n_hi) {
  Report rep{"laurent-bridge", {}};
  for (int n = std::max(n_lo, 1); n <= n_hi; ++n)
    for (int r = -n; r <= 3 * n; ++r) {
      // E_r in n variables: rows beyond n vanish and degrees stay below 2n.
      const Truncation tn{2 * n, n};
      const std::string label = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      rep.run(label + " plain", [&] { return compare(laurent_specialize(cap_e(r, tn), 1, n), e_pm(n - r, n)); });
      rep.run(label + " prime", [&] {
        return compare(laurent_specialize(cap_e(r, Flavor::Prime, tn), 1, n), e_pm(n - r, n) - e_pm(n - r - 2, n));
      });
      rep.run(label + " with one", [&] {
        return compare(laurent_specialize(cap_e(r, Flavor::DoublePrime, tn), 1, n), e_pm(n - r, n, true));
      });
    }
  return rep;
}

namespace {

CheckResult jt_instance(const GShape& s, int n) {
  const GenPartition rho = rho_n(s, n);
  const LaurentPoly series = laurent_specialize(s_g_series(s, Truncation{2 * n * s.ell, n}), s.ell, n);
  const LaurentPoly det = sigma_char(rho, s.type, n);
  const LaurentPoly kn = kn_character(TableauShape(rho), s.type, n);
  std::string bad;
  if (!(series == det)) bad += "series " + series.str() + " != determinant " + det.str() + "; ";
  if (!(det == kn)) bad += "determinant " + det.str() + " != enumerated " + kn.str() + " (rho " + rho.str() + ")";
  return {"", bad.empty(), bad};
}

}  // namespace

Report verify_jt_character(const GShape& s, int n) {
  Report rep{"jt-character", {}};
  rep.run(tname(s.type) + " " + s.str() + " n=" + std::to_string(n), [&] { return jt_instance(s, n); });
  return rep;
}

Report verify_jt_character_sweep(const std::vector<LieType>& types, int lam1_max, int ell_max, int n_max) {
  Report rep{"jt-character", {}};
  for (LieType t : types)
    for (int ell = 1; ell <= ell_max; ++ell)
      for (const Partition& lam : partitions_up_to(lam1_max * 2 * ell, lam1_max, 2 * ell)) {
        if (!GShape::valid(t, lam, ell)) continue;
        GShape s(t, lam, ell);
        for (int n = std::max(1, lam.at(0)); n <= n_max; ++n)
          rep.run(tname(t) + " " + s.str() + " n=" + std::to_string(n), [&] { return jt_instance(s, n); });
      }
  return rep;
}

Report verify_kn_character(const std::vector<LieType>& types, int size_max, int n_max) {
  Report rep{"kn-character", {}};
  for (LieType t : types)
    for (int n = 1; n <= n_max; ++n)
      for (const Partition& lam : partitions_up_to(size_max, 1 << 20, n))
        rep.run(tname(t) + " (" + lam.str() + ") n=" + std::to_string(n),
                [&] { return compare(kn_character(TableauShape(lam), t, n), sigma_char(lam, t, n)); });
  if (std::find(types.begin(), types.end(), LieType::D) != types.end())
    rep.run("D (1,-1) n=2", [&] {
      GenPartition g({1, -1});
      return compare(kn_character(TableauShape(g), LieType::D, 2), sigma_char(g, LieType::D, 2));
    });
  return rep;
}

// ---------------------------------------------------------------------------

GrothElement displayed_tensor_decomposition(LieType t, int a, int b, bool barred) {
  if (barred && (t != LieType::D || a != 0)) throw std::invalid_argument("the barred factor is Π̄_0 of type D");
  GrothElement out(t);
  auto H = [&](int m) { return GShape(t, m ? Partition{m} : Partition{}, 1); };
  auto Hbar = [&](int m) { return m ? H(m) : GShape(LieType::D, Partition{1, 1}, 1); };
  auto put = [&](int i, const GShape& k) { out.add(BasisLabel{column(i), k}, 1); };
  for (int i = 0; i <= b; ++i) {
    const int r = b - i;
    switch (t) {
      case LieType::C:
        for (int j = 0; j <= std::min(a, r); ++j) put(i, H(a + r - 2 * j));
        break;
      case LieType::B:
        for (int j = 0; j <= std::min(a, r); ++j) put(i, H(a + r - 2 * j));
        if (r > a)
          for (int k = 1; k <= r - a; ++k) put(i, H(r - a - k));
        break;
      case LieType::D:
        if (a == 0) {
          for (int j = 0; j <= r / 2; ++j) put(i, barred ? Hbar(r - 2 * j) : H(r - 2 * j));
          break;
        }
        for (int j = 0; j <= std::min((a + r) / 2, r); ++j) put(i, H(a + r - 2 * j));
        if (r >= a)
          for (int k = 0; k <= (r - a) / 2; ++k) put(i, Hbar(r - a - 2 * k));
        break;
    }
  }
  return out;
}

Report verify_tensor_decomp(const std::vector<LieType>& types, int a_lo, int a_hi, int b_lo, int b_hi) {
  Report rep{"tensor-decomp", {}};
  auto one = [&](LieType t, int a, int b, bool barred) {
    const GShape left = barred ? GShape(LieType::D, Partition{1, 1}, 1) : GShape(t, a ? Partition{a} : Partition{}, 1);
    const std::string label = tname(t) + (barred ? " barred" : " a=" + std::to_string(a)) + " b=" + std::to_string(b);
    rep.run(label, [&] {
      GrothElement got(t);
      auto d = stabilized_decomposition(left, column(b), t);
      for (auto& [lab, m] : d.terms) got.add(lab, m);
      GrothElement want = displayed_tensor_decomposition(t, a, b, barred);
      CheckResult r = compare(got, want);
      if (!r.pass) return r;
      // the same sum under Ψ is the normal form of h_a z_b
      AElement h = barred ? AElement::hbar0() : AElement::h(t, a);
      return compare(psi(want), h * AElement::z(t, b));
    });
  };
  for (LieType t : types)
    for (int a = std::max(a_lo, 0); a <= a_hi; ++a)
      for (int b = std::max(b_lo, 0); b <= b_hi; ++b) {
        one(t, a, b, false);
        if (t == LieType::D && a == 0) one(t, a, b, true);
      }
  const bool with_d = std::find(types.begin(), types.end(), LieType::D) != types.end();
  if (with_d && a_lo <= 1 && a_hi >= 1 && b_lo <= 2 && b_hi >= 2)
    rep.run("D a=1 b=2 multiplicity of B(Π_1)", [&] {
      auto d = stabilized_decomposition(GShape(LieType::D, Partition{1}, 1), column(2), LieType::D);
      long m = 0;
      if (auto it = d.terms.find(BasisLabel{{}, GShape(LieType::D, Partition{1}, 1)}); it != d.terms.end()) m = it->second;
      return CheckResult{"", m == 2, "multiplicity " + std::to_string(m)};
    });
  return rep;
}

Report verify_psi(const std::vector<LieType>& types, int a_lo, int a_hi, int b_lo, int b_hi) {
  Report rep{"psi", {}};
  for (LieType t : types) {
    for (int a = std::max(a_lo, 0); a <= a_hi; ++a)
      for (int b = std::max(b_lo, 0); b <= b_hi; ++b)
        rep.run(tname(t) + " h" + std::to_string(a) + "*z" + std::to_string(b), [&] {
          return compare(psi(groth_mul(GrothElement::h(t, a), GrothElement::z(t, b))), AElement::h(t, a) * AElement::z(t, b));
        });
    if (t == LieType::D)
      for (int b = std::max(b_lo, 0); b <= b_hi; ++b)
        rep.run("D hbar0*z" + std::to_string(b), [&] {
          return compare(psi(groth_mul(GrothElement::hbar0(), GrothElement::z(t, b))), AElement::hbar0() * AElement::z(t, b));
        });
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// H_{μ_1}···H_{μ_m} (with H̄_0 factors for long μ in type D), kept up to width.
GrothElement dominant_product(LieType t, const std::vector<int>& mu, int m, int width) {
  GrothElement acc = GrothElement::unit(t, width);
  for (const GShape& f : structure_factors(t, mu, m)) acc = groth_mul(acc, GrothElement::pi(f, width));
  return acc;
}

}  // namespace

Report verify_dominance_lemma(const std::vector<LieType>& types, StructureConstantCache* cache) {
  Report rep{"dominance-lemma", {}};
  for (LieType t : types) {
    for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}})
      rep.run(tname(t) + " diagonal (" + lam.str() + ")@2", [&] {
        const Coeff k = structure_constant(t, lam.parts(), 2, GShape(t, lam, 2), cache);
        return CheckResult{"", k == 1, "K = " + std::to_string(k)};
      });
    // every term of a product of m level-one classes has level m
    for (int m = 1; m <= 2; ++m)
      for (const Partition& mu : partitions_up_to(2 * m, 2, m))
        rep.run(tname(t) + " levels of (" + mu.str() + ")@" + std::to_string(m), [&] {
          GrothElement p = dominant_product(t, mu.parts(), m, 2);
          std::string bad;
          for (auto& [b, c] : p.terms())
            if (!b.kappa || b.kappa->ell != m || !b.mu.empty()) bad += b.str() + " ";
          return CheckResult{"", bad.empty(), bad.empty() ? "" : "terms off level: " + bad};
        });
    // nonzero K^{(μ,ℓ)}_{(λ,ℓ)} forces μ_1 <= λ_1, so only finitely many μ contribute
    for (int ell = 1; ell <= 2; ++ell) {
      const int max_len = t == LieType::D ? 2 * ell : ell;
      for (const Partition& mu : partitions_up_to(3 * max_len, 3, max_len)) {
        if (!GShape::valid(t, mu, ell)) continue;
        rep.run(tname(t) + " finiteness (" + mu.str() + ")@" + std::to_string(ell), [&] {
          GrothElement p = dominant_product(t, mu.parts(), ell, std::max(mu.at(0), 2));
          std::string bad;
          for (auto& [b, c] : p.terms())
            if (b.kappa && b.kappa->lam.at(0) <= 2 && mu.at(0) > b.kappa->lam.at(0))
              bad += b.str() + " ";
          return CheckResult{"", bad.empty(), bad.empty() ? "" : "targets narrower than mu: " + bad};
        });
      }
    }
    rep.run(tname(t) + " off-level constant", [&] {
      const Coeff k = structure_constant(t, {1}, 1, GShape(t, Partition{1}, 2), cache);
      return CheckResult{"", k == 0, "K = " + std::to_string(k)};
    });
  }
  if (std::find(types.begin(), types.end(), LieType::C) != types.end())
    rep.run("C Jacobi-Trudi (1,1)@2 = H1(H3+H1) - H2(H2+H0)", [&] {
      const int W = 4;
      auto H = [&](int a) { return GrothElement::h(LieType::C, a, W); };
      GrothElement rhs = groth_mul(H(1), H(3) + H(1)) - groth_mul(H(2), H(2) + H(0));
      return compare(rhs, GrothElement::pi(GShape(LieType::C, Partition{1, 1}, 2), W));
    });
  return rep;
}

namespace {

GrothElement random_basis(LieType t, std::mt19937_64& rng, int width) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  switch (pick(0, 3)) {
    case 0: return GrothElement::z(t, pick(1, 2), width);
    case 1: return GrothElement::h(t, pick(0, 2), width);
    case 2: return GrothElement::w(t, pick(0, 1) ? Partition{2, 1} : Partition{2}, width);
    default: {
      const int a = pick(0, 1);
      return GrothElement::basis(t, BasisLabel{Partition{1}, GShape(t, a ? Partition{a} : Partition{}, 1)}, 1, width);
    }
  }
}

}  // namespace

Report verify_associativity(const std::vector<LieType>& types, int count, unsigned long long seed) {
  Report rep{"associativity", {}};
  std::mt19937_64 rng(seed);
  const int W = 3;
  for (int k = 0; k < count; ++k) {
    const LieType t = types[k % types.size()];
    GrothElement f = random_basis(t, rng, W), g = random_basis(t, rng, W), h = random_basis(t, rng, W);
    const std::string label = "seed " + std::to_string(seed) + " #" + std::to_string(k) + " " + tname(t) + " (" +
                              f.str() + ")(" + g.str() + ")(" + h.str() + ")";
    rep.run(label, [&] {
      GrothElement lhs = groth_mul(groth_mul(f, g), h), rhs = groth_mul(f, groth_mul(g, h));
      // both sides are exact up to the smaller of their widths
      const int w = std::min(lhs.width(), rhs.width());
      return compare(lhs.with_width(w), rhs.with_width(w));
    });
  }
  return rep;
}

std::vector<std::string> identity_names() {
  return {"residue-character", "e-expansion", "laurent-bridge", "jt-character",
          "tensor-decomp",     "psi",         "dominance-lemma", "kn-character", "associativity"};
}

}  // namespace crystalline
