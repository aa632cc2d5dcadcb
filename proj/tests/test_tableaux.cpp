#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "crystalline/crystal.hpp"
#include "crystalline/spinor.hpp"
#include "crystalline/tableau.hpp"
#include "oracles.hpp"

using namespace crystalline;

namespace {

const LieType kTypes[] = {LieType::B, LieType::C, LieType::D};

std::vector<int> signed_parts(const TableauShape& s) { return s.signed_parts(); }

// Largest slide of the right column that keeps every shared row weakly increasing.
int residue_oracle(const SpinorColumnPair& T) {
  int best = 0;
  for (int k = 0; k <= std::min(T.a, T.b); ++k) {
    bool ok = true;
    // left occupies rows b+1..b+c+a, slid right occupies rows k+1..k+b+c
    for (int row = T.b + 1; row <= T.b + T.c + T.a; ++row) {
      if (row < k + 1 || row > k + T.b + T.c) continue;
      if (T.left[row - T.b - 1] > T.right[row - k - 1]) ok = false;
    }
    if (ok) best = k;
    else break;
  }
  return best;
}

// Strictly increasing columns over the rank-n alphabet, every height up to max_h.
void for_each_increasing_column(LieType t, int n, int max_h, const std::function<void(const Column&)>& fn) {
  std::vector<Letter> alpha = alphabet(t, n);
  Column cur;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    fn(cur);
    if (static_cast<int>(cur.size()) == max_h) return;
    for (std::size_t i = start; i < alpha.size(); ++i) {
      cur.push_back(alpha[i]);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
}

}  // namespace

TEST_CASE("letter order and alphabets") {
  CHECK(alphabet(LieType::C, 2) == std::vector<Letter>{-2, -1, 1, 2});
  CHECK(alphabet(LieType::B, 2) == std::vector<Letter>{-2, -1, 0, 1, 2});
  CHECK(letter_less(-1, 1, LieType::C));
  CHECK_FALSE(letter_leq(-1, 1, LieType::D));
  CHECK_FALSE(letter_leq(1, -1, LieType::D));
  CHECK(letter_str(-3) == "-3");
}

TEST_CASE("n-admissibility examples") {
  CHECK_FALSE(n_admissible({-2, -1, 1, 2}, 3, LieType::C));
  CHECK(n_admissible({}, 1, LieType::C));
  CHECK(n_admissible({-1, 1}, 2, LieType::C));
  CHECK_FALSE(n_admissible({-1, 1}, 1, LieType::C));
  CHECK_THROWS_AS(n_admissible({5}, 2, LieType::C), std::invalid_argument);
  CHECK_THROWS_AS(n_admissible({0}, 2, LieType::C), std::invalid_argument);
}

TEST_CASE("admissibility is monotone in the rank") {
  for (LieType t : kTypes)
    for_each_increasing_column(t, 4, 4, [&](const Column& col) {
      if (!n_admissible(col, 4, t)) return;
      for (int N = 5; N <= 7; ++N) CHECK(n_admissible(col, N, t));
    });
}

TEST_CASE("KN validation examples") {
  TableauShape s(GenPartition({4, 3, 1, -1}));
  KNTableau T = t_lambda(s, LieType::D, 4);
  CHECK(T.rows() == std::vector<std::vector<Letter>>{{-4, 1, 1, 1}, {1, 2, 2}, {2}, {3}});
  CHECK(T.str() == "-4,1,1,1/1,2,2/2/3*");
  CHECK(kn_validate(T).ok);

  for (LieType t : kTypes)
    for (Letter x : alphabet(t, 3)) CHECK(kn_validate(KNTableau::from_rows(TableauShape(Partition{1}), t, 3, {{x}})).ok);

  // columns (2̄,1̄) and (1,2) at rank 2: no (c-1) pattern applies, and the
  // tableau is a vertex of the crystal generated from T_(2,2)
  KNTableau U = KNTableau::from_rows(TableauShape(Partition{2, 2}), LieType::C, 2, {{-2, 1}, {-1, 2}});
  CHECK(kn_validate(U).ok);
  CrystalGraph g = build_graph(t_lambda(TableauShape(Partition{2, 2}), LieType::C, 2));
  CHECK(g.vertices.size() == 14);
  CHECK(g.index_of(U) >= 0);
}

TEST_CASE("violation reports name the failed clause") {
  auto rows = [](LieType t, int n, std::vector<int> shape, std::vector<std::vector<Letter>> r) {
    return kn_validate(KNTableau::from_rows(TableauShape(Partition(shape)), t, n, r));
  };
  CHECK(rows(LieType::C, 2, {2}, {{2, 1}}).clause == "semistandard");
  CHECK(rows(LieType::C, 2, {1, 1}, {{2}, {1}}).clause == "semistandard");
  CHECK(rows(LieType::C, 1, {1, 1}, {{-1}, {1}}).clause == "admissible");
  CHECK(rows(LieType::B, 2, {2}, {{0, 0}}).clause == "semistandard");
  // first (c-1) pattern: 2̄,1̄,1 in the left column and 2 below them on the right
  auto r = rows(LieType::C, 3, {2, 2, 2}, {{-2, -1}, {-1, 1}, {1, 2}});
  CHECK_FALSE(r.ok);
  CHECK(r.clause == "(c-1)");
  // a full type-D column with 1 in an even row
  auto d = rows(LieType::D, 2, {1, 1}, {{-2}, {1}});
  CHECK_FALSE(d.ok);
  CHECK(d.clause == "(d-1)");
}

TEST_CASE("canonical tableaux") {
  for (LieType t : kTypes) {
    KNTableau T = t_lambda(TableauShape(Partition{2, 1}), t, 3);
    CHECK(T.rows() == std::vector<std::vector<Letter>>{{1, 1}, {2}});
    CHECK(T.weight() == std::vector<int>{2, 1, 0});
  }
  CHECK(t_lambda(TableauShape(Partition{1, 1, 1}), LieType::C, 3).columns() == std::vector<Column>{{1, 2, 3}});
  CHECK_THROWS(t_lambda(TableauShape(Partition{1, 1, 1}), LieType::C, 2));
}

TEST_CASE("canonical tableaux validate up to size 6 and rank 4") {
  for (LieType t : kTypes)
    for (int n = 1; n <= 4; ++n) {
      if (t == LieType::D && n < 2) continue;
      for (const auto& lam : partitions_up_to(6, 1 << 20, n)) {
        KNTableau T = t_lambda(TableauShape(lam), t, n);
        INFO(type_letter(t), n, " ", lam.str());
        CHECK(kn_validate(T).ok);
        auto w = T.weight();
        for (int i = 0; i < n; ++i) CHECK(w[i] == lam.at(i));
        if (t == LieType::D && lam.length() == n) {
          auto neg = lam.parts();
          neg.back() = -neg.back();
          KNTableau U = t_lambda(TableauShape(GenPartition(neg)), t, n);
          CHECK(kn_validate(U).ok);
          CHECK(U.weight().back() == neg.back());
        }
      }
    }
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_kn(TableauShape(Partition{1}), LieType::C, 2).size() == 4);
  CHECK(enumerate_kn(TableauShape(Partition{1}), LieType::B, 2).size() == 5);
  CHECK(enumerate_kn(TableauShape(Partition{1, 1}), LieType::C, 2).size() == 5);
  CHECK(enumerate_kn(TableauShape(Partition{}), LieType::C, 2).size() == 1);
  CHECK_THROWS_AS(enumerate_kn(TableauShape(Partition{3, 2}), LieType::C, 3, {}, 10), ResourceCapExceeded);
}

TEST_CASE("enumeration sizes match the Weyl dimension formula") {
  for (LieType t : kTypes)
    for (int n = 1; n <= 3; ++n) {
      if (t == LieType::D && n < 2) continue;
      for (const auto& lam : partitions_up_to(4, 1 << 20, n)) {
        INFO(type_letter(t), n, " ", lam.str());
        auto all = enumerate_kn(TableauShape(lam), t, n);
        CHECK(static_cast<std::int64_t>(all.size()) == oracle::weyl_dimension(t, lam.parts(), n));
        for (const auto& T : all) CHECK(kn_validate(T).ok);
      }
    }
  // generalized shapes of type D
  for (auto parts : std::vector<std::vector<int>>{{1, -1}, {2, -1}, {2, -2}, {1, 1, -1}, {2, 1, -1}}) {
    const int n = static_cast<int>(parts.size());
    auto all = enumerate_kn(TableauShape(GenPartition(parts)), LieType::D, n);
    CHECK(static_cast<std::int64_t>(all.size()) == oracle::weyl_dimension(LieType::D, parts, n));
  }
}

TEST_CASE("enumeration is monotone in the rank") {
  for (LieType t : kTypes)
    for (int n = 2; n <= 3; ++n)
      for (const auto& lam : partitions_up_to(3, 1 << 20, n)) {
        auto small = enumerate_kn(TableauShape(lam), t, n);
        auto big = enumerate_kn(TableauShape(lam), t, n + 1);
        std::set<std::string> bigset;
        for (const auto& T : big) bigset.insert(T.str());
        for (const auto& T : small) CHECK(bigset.count(T.str()) == 1);
      }
}

TEST_CASE("residue examples and slide oracle") {
  SpinorColumnPair T{1, 0, 1, {1, 2}, {1}};
  CHECK(residue(T) == 0);
  // left (1,2) in rows 2-3, right (1,2) in rows 1-2: sliding by one still fits
  SpinorColumnPair U{1, 1, 1, {1, 2}, {1, 2}};
  CHECK(is_semistandard(U));
  CHECK(residue(U) == 1);
  // right entries larger than every left entry
  SpinorColumnPair V{2, 2, 0, {1, 2}, {3, 4}};
  CHECK(residue(V) == 2);

  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        long total = 0;
        std::vector<long> strata(std::min(a, b) + 1, 0);
        for_each_column_pair(a, b, c, 4, [&](const SpinorColumnPair& P) {
          ++total;
          int r = residue(P);
          CHECK(r == residue_oracle(P));
          ++strata.at(r);
        });
        long sum = 0;
        for (long s : strata) sum += s;
        CHECK(sum == total);
      }
}

TEST_CASE("spinor column enumeration") {
  CHECK(enumerate_spinor_columns(3, LieType::C, 2).empty());
  auto d0 = enumerate_spinor_columns(0, LieType::D, 4, SpinorFamily::Standard);
  auto d0bar = enumerate_spinor_columns(0, LieType::D, 4, SpinorFamily::BarredZero);
  auto has_empty = [](const std::vector<SpinorColumnPair>& v) {
    return std::any_of(v.begin(), v.end(), [](const SpinorColumnPair& P) { return P.cells() == 0; });
  };
  CHECK(has_empty(d0));
  CHECK_FALSE(has_empty(d0bar));
  for (LieType t : kTypes)
    for (int a = 0; a <= 3; ++a)
      for (const auto& P : enumerate_spinor_columns(a, t, 6)) {
        CHECK(P.a == a);
        CHECK(is_semistandard(P));
        CHECK(spinor_index_allowed(t, P.b, P.c));
        CHECK(residue(P) <= spinor_residue_bound(t));
        CHECK(P.cells() <= 6);
      }
}
