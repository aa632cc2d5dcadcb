#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "crystalline/algebra.hpp"
#include "crystalline/grothendieck.hpp"
#include "crystalline/schur.hpp"
#include "crystalline/verify.hpp"
#include "oracles.hpp"

using namespace crystalline;

namespace {

const LieType kTypes[] = {LieType::B, LieType::C, LieType::D};

BasisLabel posi(LieType t, Partition lam, int ell) { return BasisLabel{{}, GShape(t, std::move(lam), ell)}; }
BasisLabel zero(Partition mu) { return BasisLabel{std::move(mu), std::nullopt}; }

AElement random_generator(LieType t, std::mt19937& rng) {
  const int k = std::uniform_int_distribution<int>(0, t == LieType::D ? 6 : 5)(rng);
  if (k < 3) return AElement::z(t, k + 1);
  if (k < 6) return AElement::h(t, k - 3);
  return AElement::hbar0();
}

}  // namespace

TEST_CASE("level-zero products") {
  auto p = mul_zero_zero(LieType::C, Partition{1}, Partition{1});
  CHECK(p.terms() == std::map<BasisLabel, Coeff>{{zero(Partition{2}), 1}, {zero(Partition{1, 1}), 1}});
  CHECK(mul_zero_zero(LieType::C, Partition{2, 1}, Partition{}) == GrothElement::w(LieType::C, Partition{2, 1}));
  auto q = mul_zero_zero(LieType::B, Partition{2, 1}, Partition{1});
  CHECK(q.terms() == std::map<BasisLabel, Coeff>{
                         {zero(Partition{3, 1}), 1}, {zero(Partition{2, 2}), 1}, {zero(Partition{2, 1, 1}), 1}});
  for (const auto& mu : partitions_up_to(4))
    for (const auto& nu : partitions_up_to(4)) {
      auto a = mul_zero_zero(LieType::C, mu, nu);
      CHECK(a == mul_zero_zero(LieType::C, nu, mu));
      for (auto& [b, c] : a.terms()) CHECK(c == oracle::lr_count(mu.parts(), nu.parts(), b.mu.parts()));
    }
}

TEST_CASE("level-zero times positive level is a single basis element") {
  GShape k(LieType::C, Partition{3, 3, 2, 1}, 4);
  auto p = mul_zero_posi(Partition{3, 1}, k);
  CHECK(p.terms() == std::map<BasisLabel, Coeff>{{BasisLabel{Partition{3, 1}, k}, 1}});
  Weight fused = fuse_zero_dominant(Weight::epsilon(1, 3) + Weight::epsilon(2, 1), pi_weight(k), LieType::C);
  CHECK(fused == decompose_weight(Weight::from_prefix({-2, -4, 1, -7, -5, 4, 0}, -4), LieType::C).nu);
  CHECK(mul_zero_posi(Partition{}, k) == GrothElement::pi(k));
}

TEST_CASE("positive-level products") {
  // H_0·H_0 is an infinite sum; its narrow part
  auto h00 = mul_posi_posi(GShape(LieType::C, Partition{}, 1), GShape(LieType::C, Partition{}, 1), 2);
  CHECK(h00.coeff(posi(LieType::C, Partition{}, 2)) == 1);
  CHECK(h00.terms() == std::map<BasisLabel, Coeff>{{posi(LieType::C, Partition{}, 2), 1},
                                                   {posi(LieType::C, Partition{1, 1}, 2), 1},
                                                   {posi(LieType::C, Partition{2, 2}, 2), 1}});
  auto h11 = mul_posi_posi(GShape(LieType::C, Partition{1}, 1), GShape(LieType::C, Partition{1}, 1), 2);
  CHECK(h11.coeff(posi(LieType::C, Partition{1, 1}, 2)) == 1);
  CHECK(h11.coeff(posi(LieType::C, Partition{2}, 2)) == 1);
  CHECK(h11.coeff(posi(LieType::C, Partition{}, 2)) == 0);
  for (LieType t : kTypes) {
    GrothElement one = GrothElement::unit(t);
    GrothElement k = GrothElement::pi(GShape(t, Partition{2}, 1));
    CHECK(groth_mul(one, k) == k);
    CHECK(groth_mul(k, one) == k);
  }
}

TEST_CASE("products of level-one classes match products of characters") {
  const int W = 3;
  for (LieType t : kTypes) {
    std::vector<GShape> gens;
    for (int a = 0; a <= 2; ++a) gens.push_back(GShape(t, a ? Partition{a} : Partition{}, 1));
    if (t == LieType::D) gens.push_back(GShape(t, Partition{1, 1}, 1));
    Truncation tr{W};
    for (const auto& k1 : gens)
      for (const auto& k2 : gens) {
        INFO(std::string(1, type_letter(t)), " ", k1.str(), " * ", k2.str());
        GrothElement p = mul_posi_posi(k1, k2, W);
        SchurSeries lhs = s_g_series(k1, tr) * s_g_series(k2, tr), rhs(tr);
        for (auto& [b, c] : p.terms()) {
          REQUIRE(b.kappa);
          CHECK(b.mu.empty());
          CHECK(b.kappa->ell == 2);
          rhs += s_g_series(*b.kappa, tr) * c;
        }
        CHECK(lhs == rhs);
        CHECK(p == mul_posi_posi(k2, k1, W));
      }
  }
}

TEST_CASE("positive level times level zero") {
  auto p = groth_mul(GrothElement::h(LieType::C, 0), GrothElement::z(LieType::C, 1));
  CHECK(p.terms() == std::map<BasisLabel, Coeff>{{posi(LieType::C, Partition{1}, 1), 1},
                                                 {BasisLabel{Partition{1}, GShape(LieType::C, Partition{}, 1)}, 1}});
  auto q = groth_mul(GrothElement::z(LieType::C, 1), GrothElement::h(LieType::C, 0));
  CHECK(q.terms().size() == 1);
  CHECK_FALSE(p == q);
  CHECK(mul_posi_zero(GShape(LieType::B, Partition{1}, 1), Partition{}, kExactWidth) ==
        GrothElement::h(LieType::B, 1));
}

TEST_CASE("associativity on random triples") {
  Report r = verify_associativity({LieType::B, LieType::C, LieType::D}, 20, 12345);
  for (const auto& c : r.checks) {
    INFO(c.label, " ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("derivations") {
  CHECK(delta_h(LieType::C, 1, 0) == AElement::h(LieType::C, 1));
  CHECK(delta(2, AElement::one(LieType::C)).is_zero());
  CHECK(delta(3, AElement::z(LieType::C, 2)).is_zero());
  CHECK_THROWS_AS(delta(2, AElement::z(LieType::C, 2)), std::invalid_argument);
  for (LieType t : kTypes)
    for (int n = 1; n <= 3; ++n)
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
          AElement ha = AElement::h(t, a), hb = AElement::h(t, b);
          CHECK(delta(n, ha * hb) == delta(n, ha) * hb + ha * delta(n, hb));
        }
  CHECK(delta(2, AElement::hbar0() * AElement::h(LieType::D, 1)) ==
        delta(2, AElement::hbar0()) * AElement::h(LieType::D, 1) + AElement::hbar0() * delta(2, AElement::h(LieType::D, 1)));
}

TEST_CASE("normal ordering") {
  const LieType C = LieType::C;
  AElement h0 = AElement::h(C, 0), z1 = AElement::z(C, 1), z2 = AElement::z(C, 2);
  CHECK(h0 * z1 == AElement::monomial(C, AMonomial{{1}, {0}}) + AElement::h(C, 1));
  CHECK((h0 * z1).str() == "z1*h0 + h1");
  CHECK(z1 * z2 == AElement::monomial(C, AMonomial{{1, 2}, {}}));
  CHECK(z2 * z1 == z1 * z2);
  CHECK((h0 * z1) * z1 == h0 * (z1 * z1));
  CHECK((h0 * z1) * z1 == z1 * (h0 * z1) + AElement::h(C, 1) * z1);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const LieType t = kTypes[trial % 3];
    const int len = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<AElement> f;
    for (int i = 0; i < len; ++i) f.push_back(random_generator(t, rng));
    AElement left = a_normalize(f);
    // right-to-left and a random split point
    AElement right = AElement::one(t);
    for (int i = len - 1; i >= 0; --i) right = f[i] * right;
    const int cut = std::uniform_int_distribution<int>(0, len)(rng);
    auto prod = [&](int lo, int hi) {
      return lo == hi ? AElement::one(t) : a_normalize(std::vector<AElement>(f.begin() + lo, f.begin() + hi));
    };
    AElement a = prod(0, cut), b = prod(cut, len);
    CHECK(left == right);
    CHECK(left == a * b);
    CHECK(a_normalize({left}) == left);
    CHECK(left * AElement::one(t) == left);
  }
}

TEST_CASE("psi images") {
  for (LieType t : kTypes) {
    CHECK(psi(GrothElement::unit(t)) == AElement::one(t));
    for (int a = 0; a <= 3; ++a) CHECK(psi(GrothElement::h(t, a)) == AElement::h(t, a));
    for (int b = 1; b <= 3; ++b) CHECK(psi(GrothElement::z(t, b)) == AElement::z(t, b));
  }
  CHECK(psi(GrothElement::hbar0()) == AElement::hbar0());
  CHECK(psi(groth_mul(GrothElement::h(LieType::C, 0), GrothElement::z(LieType::C, 1))) ==
        AElement::h(LieType::C, 0) * AElement::z(LieType::C, 1));
  // s_(1,1) = e_2 and s_(2) = e_1^2 - e_2
  AElement z1 = AElement::z(LieType::C, 1), z2 = AElement::z(LieType::C, 2);
  CHECK(psi_zero(LieType::C, Partition{1, 1}) == z2);
  CHECK(psi_zero(LieType::C, Partition{2}) == z1 * z1 - z2);
  CHECK_THROWS(a_normalize({}));
  CHECK(verify_psi({LieType::B, LieType::C, LieType::D}, 0, 3, 0, 3).all_pass());
}

TEST_CASE("structure constants") {
  for (LieType t : kTypes) {
    for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}})
      CHECK(structure_constant(t, lam.parts(), 2, GShape(t, lam, 2)) == 1);
    CHECK(structure_constant(t, {1}, 1, GShape(t, Partition{1}, 2)) == 0);
  }
  CHECK(structure_factors(LieType::D, {1, 1, 1}, 2) ==
        std::vector<GShape>{GShape(LieType::D, Partition{1}, 1), GShape(LieType::D, Partition{1, 1}, 1)});
  Report r = verify_dominance_lemma({LieType::B, LieType::C, LieType::D});
  for (const auto& c : r.checks) {
    INFO(c.label, " ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("Jacobi-Trudi identity in the ring") {
  const int W = 4;
  auto H = [&](int a) { return GrothElement::h(LieType::C, a, W); };
  GrothElement rhs = groth_mul(H(1), H(3) + H(1)) - groth_mul(H(2), H(2) + H(0));
  GrothElement lhs = GrothElement::pi(GShape(LieType::C, Partition{1, 1}, 2), W);
  CHECK(rhs.with_width(std::min(rhs.width(), lhs.width())) == lhs.with_width(std::min(rhs.width(), lhs.width())));
}

TEST_CASE("structure constant cache") {
  const std::string path = "crystalline_cache_test.txt";
  StructureConstantCache cache;
  GShape target(LieType::C, Partition{1, 1}, 2);
  CHECK(structure_constant(LieType::C, {1, 1}, 2, target, &cache) == 1);
  const std::string key = StructureConstantCache::key(LieType::C, 2, {1, 1}, target);
  CHECK(key == "C 2 1,1 | 1,1@2");
  CHECK(cache.lookup(key) == 1);
  cache.save(path);
  StructureConstantCache again;
  CHECK(again.load(path) == cache.size());
  CHECK(again.lookup(key) == 1);
  {
    std::ofstream bad(path);
    bad << "C 2 1,1 1,1@2 1\n";
  }
  StructureConstantCache broken;
  CHECK_THROWS_AS(broken.load(path), std::runtime_error);
  std::remove(path.c_str());
}
