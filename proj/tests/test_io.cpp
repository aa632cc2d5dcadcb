#include <doctest.h>

#include "crystalline/io.hpp"

using namespace crystalline;

TEST_CASE("shape and range parsing") {
  CHECK(parse_int_list("3, 1") == std::vector<int>{3, 1});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("3,,1"), ParseError);
  CHECK(parse_partition("2,1,0") == Partition{2, 1});
  CHECK_THROWS_AS(parse_partition("1,2"), ParseError);

  TableauShape g = parse_tableau_shape("4,3,1,-1", 4);
  CHECK(g.colored);
  CHECK(g.signed_parts() == std::vector<int>{4, 3, 1, -1});
  CHECK_THROWS_AS(parse_tableau_shape("1,-1", 3), ParseError);
  CHECK_FALSE(parse_tableau_shape("2,1", 3).colored);

  CHECK(parse_gshape("3,3,2,1@4", LieType::C) == GShape(LieType::C, Partition{3, 3, 2, 1}, 4));
  CHECK(parse_gshape("1:1", LieType::C) == GShape(LieType::C, Partition{1}, 1));
  CHECK(parse_gshape("@2", LieType::B) == GShape(LieType::B, Partition{}, 2));
  CHECK_THROWS_AS(parse_gshape("1,1@1", LieType::C), ParseError);
  CHECK_THROWS_AS(parse_gshape("1,1", LieType::C), ParseError);

  CHECK(parse_range("0..4") == std::pair{0, 4});
  CHECK(parse_range("3") == std::pair{3, 3});
  CHECK_THROWS_AS(parse_range("4..1"), ParseError);
}

TEST_CASE("expressions") {
  auto e = parse_expression("h:1 * h:3 - 2 * h:2 * h:0");
  REQUIRE(e.size() == 2);
  CHECK(e[0].coeff == 1);
  CHECK(e[0].factors == std::vector<std::string>{"h:1", "h:3"});
  CHECK(e[1].coeff == -2);
  CHECK(needs_width(e));
  CHECK_FALSE(needs_width(parse_expression("h:0 * z:1 + w:2,1")));
  CHECK_THROWS_AS(parse_expression("h:1 *"), ParseError);
  CHECK_THROWS_AS(parse_expression("q:1"), ParseError);
  CHECK_THROWS_AS(parse_expression("hbar:1"), ParseError);
  CHECK_THROWS_AS(parse_expression(""), ParseError);

  CHECK(eval_algebra(parse_expression("h:0 * z:1"), LieType::C).str() == "z1*h0 + h1");
  CHECK(eval_algebra(parse_expression("1 * z:2"), LieType::C) == AElement::z(LieType::C, 2));
  CHECK_THROWS_AS(eval_algebra(parse_expression("hbar:0"), LieType::C), ParseError);
  GrothElement g = eval_groth(parse_expression("w:3,1 * pi:3,3,2,1@4"), LieType::C, kExactWidth);
  CHECK(g.terms().size() == 1);
  CHECK(psi(eval_groth(parse_expression("h:0 * z:1"), LieType::C, kExactWidth)) ==
        eval_algebra(parse_expression("h:0 * z:1"), LieType::C));
}

TEST_CASE("json encodings") {
  CHECK(to_json(Partition{3, 1}) == json::parse("[3,1]"));
  CHECK(to_json(Weight::from_prefix({0, -1}, -2)) == json::parse(R"({"tail":-2,"exceptions":{"1":0,"2":-1}})"));
  CHECK(to_json(GShape(LieType::D, Partition{1}, 1)) == json::parse(R"({"type":"D","lam":[1],"ell":1})"));
  KNTableau T = t_lambda(TableauShape(GenPartition({4, 3, 1, -1})), LieType::D, 4);
  CHECK(to_json(T) == json::parse(R"({"shape":[4,3,1,-1],"rows":[["-4","1","1","1"],["1","2","2"],["2"],["3*"]]})"));
  CHECK(to_json(AElement::h(LieType::D, 0) * AElement::z(LieType::D, 1)).size() == 2);
  CHECK(to_json(AElement::hbar0())[0]["h"][0] == "hbar0");
  json s = to_json(SchurSeries::schur(Partition{1}, Truncation{3}), 1);
  CHECK(s["cutoff"] == 3);
  CHECK(s["t_power"] == 1);
  CHECK(s["terms"][0]["partition"] == json::parse("[1]"));
  json g = to_json(GrothElement::h(LieType::C, 2, 3));
  CHECK(g["width"] == 3);
  CHECK(g["terms"][0]["kappa"]["lam"] == json::parse("[2]"));
  CHECK(to_json(LaurentPoly::monomial({1, -1}, 2))["terms"][0]["coeff"] == 2);
  CrystalGraph cg = build_graph(t_lambda(TableauShape(Partition{1}), LieType::C, 2));
  json j = to_json(cg);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 3);
}
