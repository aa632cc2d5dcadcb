#include <doctest.h>

#include <algorithm>
#include <random>

#include "crystalline/partition.hpp"
#include "crystalline/weight.hpp"
#include "oracles.hpp"

using namespace crystalline;

namespace {

// ℓ-many coordinates above the tail, for orbit checks at rank n.
std::vector<int> coords(const Weight& w, int n) { return w.prefix(n); }

// Membership in the shape set straight from its definition: Sp and Pin take
// partitions with at most ℓ parts, O takes at most 2ℓ parts with λ'_1 + λ'_2 <= 2ℓ.
bool shape_oracle(LieType t, const std::vector<int>& lam, int ell) {
  const int len = static_cast<int>(lam.size());
  if (t != LieType::D) return len <= ell;
  int rows_ge2 = static_cast<int>(std::count_if(lam.begin(), lam.end(), [](int x) { return x >= 2; }));
  return len <= 2 * ell && len + rows_ge2 <= 2 * ell;
}

}  // namespace

TEST_CASE("conjugate is an involution up to size 12") {
  for (const auto& p : partitions_up_to(12)) CHECK(conjugate(conjugate(p)) == p);
  CHECK(conjugate(Partition{3, 3, 2, 1}) == Partition{4, 3, 2});
  CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("partition constructor rejects increasing or negative parts") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition({2, 1, 0, 0}) == Partition{2, 1});
}

TEST_CASE("level from the tail coordinate") {
  CHECK(level(Weight::from_prefix({0, -1, -2}, -4), LieType::C) == 4);
  CHECK(level(Weight(), LieType::C) == 0);
  CHECK(level(Weight::from_prefix({}, -1), LieType::B) == 2);
  CHECK(level(Weight::from_prefix({}, -1), LieType::D) == 2);
}

TEST_CASE("dominance via coroot pairings") {
  CHECK(is_dominant(Weight::from_prefix({0, -1, -2}, -4), LieType::C));
  CHECK(is_dominant(Weight(), LieType::C));
  CHECK_FALSE(is_dominant(Weight::epsilon(1), LieType::C));
  // type D pairs α_0 with -m1-m2, so (1,-1,...) is dominant there only
  CHECK(is_dominant(Weight::from_prefix({1}, -1), LieType::D));
  CHECK_FALSE(is_dominant(Weight::from_prefix({1}, -1), LieType::C));
  CHECK_FALSE(is_dominant(Weight::from_prefix({0, 1}, 0), LieType::B));
}

TEST_CASE("pi_weight examples") {
  CHECK(pi_weight(GShape(LieType::C, Partition{3, 3, 2, 1}, 4)) == Weight::from_prefix({0, -1, -2}, -4));
  CHECK(pi_weight(GShape(LieType::C, Partition{}, 1)) == Weight::from_prefix({}, -1));
  CHECK(pi_weight(GShape(LieType::D, Partition{1}, 1)) == Weight::from_prefix({0}, -1));
  CHECK_THROWS_AS(GShape(LieType::C, Partition{1, 1}, 1), std::invalid_argument);
}

TEST_CASE("pi_weight is dominant and invertible on every shape up to size 10") {
  for (LieType t : {LieType::B, LieType::C, LieType::D})
    for (int ell = 1; ell <= 4; ++ell)
      for (const auto& lam : partitions_up_to(10)) {
        if (!GShape::valid(t, lam, ell)) continue;
        GShape s(t, lam, ell);
        Weight w = pi_weight(s);
        CHECK(is_dominant(w, t));
        CHECK(shape_of_dominant(w, t) == s);
      }
}

TEST_CASE("shape validity agrees with the definition of the shape sets") {
  for (LieType t : {LieType::B, LieType::C, LieType::D})
    for (int ell = 1; ell <= 3; ++ell)
      for (const auto& lam : partitions_up_to(8)) {
        INFO(std::string(1, type_letter(t)), " ", lam.str(), " @", ell);
        CHECK(GShape::valid(t, lam, ell) == shape_oracle(t, lam.parts(), ell));
      }
}

TEST_CASE("orbit representative examples against a brute-force orbit") {
  Weight w = Weight::epsilon(4, -1) + Weight::epsilon(5, -3);
  CHECK(orbit_representative(w) == Partition{3, 1});
  CHECK(orbit_representative(Weight()) == Partition{});
  Weight v = Weight::epsilon(1, 2) + Weight::epsilon(3, -5);
  CHECK(orbit_representative(v) == Partition{5, 2});
  auto orbit = oracle::signed_orbit(coords(v, 5), false);
  CHECK(orbit.count({5, 2, 0, 0, 0}) == 1);
  CHECK_THROWS(orbit_representative(Weight::from_prefix({}, -1)));
}

TEST_CASE("worked decomposition example") {
  Weight w = Weight::from_prefix({-2, -4, 1, -7, -5, 4, 0}, -4);
  auto d = decompose_weight(w, LieType::C);
  CHECK(d.nu == Weight::from_prefix({0, -1, -2, -5, -7}, -4));
  CHECK(d.zero_part == Weight::epsilon(4, -1) + Weight::epsilon(5, -3));
  CHECK(orbit_representative(d.zero_part) == Partition{3, 1});
  CHECK(d.dominant_part == pi_weight(GShape(LieType::C, Partition{3, 3, 2, 1}, 4)));
}

TEST_CASE("decomposition of dominant and level-zero weights") {
  Weight dom = Weight::from_prefix({0, -1, -2}, -4);
  auto d = decompose_weight(dom, LieType::C);
  CHECK(d.nu == dom);
  CHECK(d.zero_part == Weight());
  CHECK(d.dominant_part == dom);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> c(3);
    for (int& x : c) x = coord(rng);
    for (LieType t : {LieType::B, LieType::C, LieType::D}) {
      Weight z = Weight::from_prefix(c, 0);
      auto dz = decompose_weight(z, t);
      CHECK(dz.dominant_part == Weight());
      CHECK(dz.zero_part == dz.nu);
      CHECK(orbit_representative(dz.nu) == orbit_representative(z));
      auto orbit = oracle::signed_orbit(coords(z, 6), t == LieType::D);
      CHECK(orbit.count(coords(dz.nu, 6)) == 1);
    }
  }
}

TEST_CASE("random weights: decomposition invariants and fuse round trip") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coord(-6, 6), tail(-3, 0), supp(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> c(supp(rng));
    for (int& x : c) x = coord(rng);
    const int tl = tail(rng);
    Weight w = Weight::from_prefix(c, tl);
    for (LieType t : {LieType::B, LieType::C, LieType::D}) {
      INFO(std::string(1, type_letter(t)), " ", w.str());
      auto d = decompose_weight(w, t);
      CHECK(d.zero_part + d.dominant_part == d.nu);
      CHECK(level(d.zero_part, t) == 0);
      CHECK(is_dominant(d.dominant_part, t));
      CHECK(fuse_zero_dominant(d.zero_part, d.dominant_part, t) == d.nu);
      // same signed-permutation orbit on a window covering both supports
      const int n = std::max({w.support_bound(), d.nu.support_bound(), 1}) + 1;
      auto a = coords(w, n), b = coords(d.nu, n);
      auto abs_sorted = [](std::vector<int> v) {
        for (int& x : v) x = std::abs(x);
        std::sort(v.begin(), v.end());
        return v;
      };
      CHECK(abs_sorted(a) == abs_sorted(b));
      if (t == LieType::D && std::find(a.begin(), a.end(), 0) == a.end()) {
        auto negatives = [](const std::vector<int>& v) { return std::count_if(v.begin(), v.end(), [](int x) { return x < 0; }); };
        CHECK(negatives(a) % 2 == negatives(b) % 2);
      }
      if (n <= 6) CHECK(oracle::signed_orbit(a, t == LieType::D).count(b) == 1);
    }
  }
}

TEST_CASE("rho_n examples") {
  CHECK(rho_n(GShape(LieType::C, Partition{2, 1}, 2), 3) == GenPartition({2, 1, 0}));
  for (int n = 1; n <= 4; ++n)
    for (int ell = 1; ell <= 3; ++ell) {
      std::vector<int> full(ell, n);
      CHECK(rho_n(GShape(LieType::C, Partition(full), ell), n).abs_shape() == Partition{});
    }
  // formula text, not the printed diagram (4,3,1,-1)
  CHECK(rho_n(GShape(LieType::D, Partition{3, 2, 1, 1, 1}, 4), 4) == GenPartition({4, 3, 2, -1}));
  CHECK(rho_n_formula(GShape(LieType::D, Partition{3, 2, 1, 1, 1}, 4), 4) == GenPartition({4, 3, 2, -1}));
  CHECK_THROWS(rho_n(GShape(LieType::C, Partition{3}, 1), 2));
}

TEST_CASE("rho_n restricted weight lies in the rank-n orbit of the shape") {
  for (LieType t : {LieType::B, LieType::C, LieType::D})
    for (int n = 2; n <= 5; ++n)
      for (int ell = 1; ell <= 3; ++ell)
        for (const auto& lam : partitions_up_to(6, n)) {
          if (!GShape::valid(t, lam, ell)) continue;
          GShape s(t, lam, ell);
          auto rho = rho_n(s, n).parts();
          rho.resize(n, 0);
          auto restricted = pi_weight(s).prefix(n);
          if (n <= 5) CHECK(oracle::signed_orbit(restricted, t == LieType::D).count(rho) == 1);
        }
}

TEST_CASE("fuse examples") {
  Weight mu = pi_weight(GShape(LieType::C, Partition{3, 3, 2, 1}, 4));
  CHECK(fuse_zero_dominant(Weight::epsilon(1, 3) + Weight::epsilon(2, 1), mu, LieType::C) ==
        Weight::from_prefix({0, -1, -2, -5, -7}, -4));
  CHECK(fuse_zero_dominant(Weight(), mu, LieType::C) == mu);
  CHECK(fuse_zero_dominant(Weight::epsilon(1), Weight(), LieType::C) == Weight::epsilon(1, -1));
}
