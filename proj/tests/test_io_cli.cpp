#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "loopbv/errors.hpp"
#include "loopbv/expr.hpp"
#include "loopbv/model_io.hpp"
#include "loopbv/models.hpp"
#include "loopbv/semidirect.hpp"

using namespace loopbv;

namespace {

std::filesystem::path catalog_dir() { return LOOPBV_TEST_CATALOG; }

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_SUITE("model_io") {
  TEST_CASE("catalog names resolve to their presentations") {
    ParsedModel su3 = resolve_model("SU(3)", catalog_dir().string());
    REQUIRE(su3.lie_data.has_value());
    CHECK(su3.lie_data->free_rank == 0);
    CHECK(su3.lie_data->torsion.empty());
    CHECK(su3.lie_data->odd_degrees == std::vector<int>{3, 5});

    ParsedModel so3 = resolve_model("SO(3)", catalog_dir().string());
    REQUIRE(so3.lie_data.has_value());
    CHECK(so3.lie_data->free_rank == 0);
    CHECK(so3.lie_data->torsion == std::vector<int>{2});
    CHECK(so3.lie_data->odd_degrees == std::vector<int>{3});

    for (const char* name : {"S1", "SU(2)", "U(2)", "T2", "T^2", "su2"})
      CHECK_NOTHROW(resolve_model(name, catalog_dir().string()));
  }

  TEST_CASE("unknown models name the attempted path") {
    try {
      resolve_model("E8", catalog_dir().string());
      FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
      CHECK(std::string(e.what()).find("e8.json") != std::string::npos);
    }
  }

  TEST_CASE("malformed presentations are schema errors naming the field") {
    auto bad_torsion = write_temp("loopbv_bad1.json", R"({
      "schema": "bvmodel/1", "kind": "lie_group",
      "lie_group": {"free_rank": 0, "torsion": [0], "odd_degrees": [3]}})");
    CHECK_THROWS_AS(parse_model_file(bad_torsion), SchemaError);

    auto even_degree = write_temp("loopbv_bad2.json", R"({
      "schema": "bvmodel/1", "kind": "lie_group",
      "lie_group": {"free_rank": 0, "torsion": [], "odd_degrees": [4]}})");
    CHECK_THROWS_AS(parse_model_file(even_degree), SchemaError);

    auto missing = write_temp("loopbv_bad3.json", R"({
      "schema": "bvmodel/1", "kind": "lie_group",
      "lie_group": {"free_rank": 0, "torsion": []}})");
    try {
      parse_model_file(missing);
      FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
      CHECK(std::string(e.what()).find("odd_degrees") != std::string::npos);
    }

    auto bad_schema = write_temp("loopbv_bad4.json", R"({
      "schema": "bvmodel/9", "kind": "lie_group",
      "lie_group": {"free_rank": 0, "torsion": [], "odd_degrees": []}})");
    CHECK_THROWS_AS(parse_model_file(bad_schema), SchemaError);

    auto not_json = write_temp("loopbv_bad5.json", "{ nope");
    CHECK_THROWS_AS(parse_model_file(not_json), SchemaError);
  }

  TEST_CASE("sphere model files parse and evaluate") {
    auto path = write_temp("loopbv_sphere.json", R"({
      "schema": "bvmodel/1", "kind": "sphere_action", "name": "S1 on S1",
      "sphere_action": {
        "which": "S1",
        "manifold": {
          "dimension": 1,
          "classes": [{"name": "[M]", "degree": 0}, {"name": "pt", "degree": -1}],
          "products": [{"left": "pt", "right": "pt", "value": []}]
        },
        "action": {"[S1]": {"degree": 1, "rules": [
          {"on": "pt", "value": [{"class": "[M]", "coeff": "1"}]}]}}
      }})");
    ParsedModel parsed = parse_model_file(path);
    CHECK(parsed.kind == "sphere_action");
    CHECK(parsed.model.name == "S1 on S1");
    Element in = parse_monomial_expression(parsed.model.sig, "x^2*pt");
    Element expected = parse_monomial_expression(parsed.model.sig, "2*x^2");
    CHECK(apply_B(parsed.model, in) == expected);
  }

  TEST_CASE("rational model files parse, with exact rational coefficients") {
    auto path = write_temp("loopbv_rational.json", R"({
      "schema": "bvmodel/1", "kind": "rational_action",
      "rational_action": {
        "pi1": {"free_rank": 1, "torsion": []},
        "higher": [{"name": "f1", "degree": 3}],
        "hur": {"x1": "h1", "f1": "hf1"},
        "action": {
          "h1":  {"degree": 1, "rules": [{"on": "pt", "value": [{"class": "[M]", "coeff": "-3/7"}]}]},
          "hf1": {"degree": 3, "rules": []}
        },
        "manifold": {
          "dimension": 1,
          "classes": [{"name": "[M]", "degree": 0}, {"name": "pt", "degree": -1}],
          "products": [{"left": "pt", "right": "pt", "value": []}]
        }
      }})");
    ParsedModel parsed = parse_model_file(path);
    Element in = parse_monomial_expression(parsed.model.sig, "x1^7*pt");
    Element expected = parse_monomial_expression(parsed.model.sig, "-3*x1^7");
    CHECK(apply_B(parsed.model, in) == expected);  // 7 * (-3/7) = -3
  }

  TEST_CASE("samelson sections ride along with lie models") {
    auto path = write_temp("loopbv_samelson.json", R"({
      "schema": "bvmodel/1", "kind": "lie_group",
      "lie_group": {"free_rank": 0, "torsion": [], "odd_degrees": [3, 5]},
      "samelson": [{"left": 1, "right": 2, "value": []}]})");
    ParsedModel parsed = parse_model_file(path);
    CHECK_FALSE(parsed.samelson.zero_default);
    CHECK(parsed.samelson.entries.size() == 1);
  }
}

TEST_SUITE("expressions") {
  TEST_CASE("documented grammar round trip") {
    BVModel m = build_lie_group_model(LieGroupData{1, {}, {3}});
    Element e = parse_monomial_expression(m.sig, "x1^3 * sx2^2 * d1*d2");
    REQUIRE(e.term_count() == 1);
    CHECK(e.str() == "x1^3*sx2^2*d1*d2");
    CHECK(parse_monomial_expression(m.sig, e.str()) == e);
  }

  TEST_CASE("leading rational coefficients") {
    BVModel m = build_lie_group_model(LieGroupData{1, {}, {}});
    CHECK(parse_monomial_expression(m.sig, "-3/7*x1^2").coefficient(
              parse_monomial_expression(m.sig, "x1^2").terms().begin()->first) ==
          Rational("-3/7"));
    CHECK(parse_monomial_expression(m.sig, "5") == Element::unit(m.sig, 5));
    CHECK(parse_monomial_expression(m.sig, "1") == Element::unit(m.sig));
  }

  TEST_CASE("reordering consumes signs, squares vanish") {
    BVModel m = build_lie_group_model(LieGroupData{0, {}, {3, 5}});
    Element a = parse_monomial_expression(m.sig, "d2*d1");
    Element b = parse_monomial_expression(m.sig, "d1*d2");
    CHECK(a == Rational(-1) * b);
    CHECK(parse_monomial_expression(m.sig, "d1*d1").is_zero());
    CHECK(parse_monomial_expression(m.sig, "d1^2").is_zero());
  }

  TEST_CASE("errors: unknown names, stray coefficients, bad exponents") {
    BVModel m = build_lie_group_model(LieGroupData{1, {}, {}});
    CHECK_THROWS_AS(parse_monomial_expression(m.sig, "z^2"), SchemaError);
    CHECK_THROWS_AS(parse_monomial_expression(m.sig, "x1*3"), SchemaError);
    CHECK_THROWS_AS(parse_monomial_expression(m.sig, "x1^"), SchemaError);
    CHECK_THROWS_AS(parse_monomial_expression(m.sig, ""), SchemaError);
    CHECK_THROWS_AS(parse_monomial_expression(m.sig, "x1^2^3"), SchemaError);
    CHECK_THROWS_AS(parse_monomial_expression(m.sig, "3/0"), SchemaError);
  }

  TEST_CASE("torsion residues and table classes in expressions") {
    BVModel m = build_lie_group_model(LieGroupData{0, {2}, {3}});
    CHECK(parse_monomial_expression(m.sig, "y1^2") == Element::unit(m.sig));
    CHECK(parse_monomial_expression(m.sig, "y1^-1") ==
          parse_monomial_expression(m.sig, "y1"));
  }
}
