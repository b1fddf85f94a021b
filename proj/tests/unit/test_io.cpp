#include "doctest.h"

#include "berkrh/errors.hpp"
#include "berkrh/io.hpp"

using namespace berkrh;
using io::Json;

namespace {

const std::string FIX = BERKRH_FIXTURES;

Json J(const std::string& text) { return io::parse_json_text(text, "test"); }

bool valid(const Json& doc, const std::string& schema) {
  return io::validate_schema(doc, io::schemas().at(schema)).empty();
}

}  // namespace

TEST_CASE("rationals are exact strings or integers") {
  CHECK(io::parse_rational(J("\"-3/6\""), "x") == Rational(-1, 2));
  CHECK(io::parse_rational(J("7"), "x") == Rational(7));
  CHECK_THROWS_AS(io::parse_rational(J("\"1/0\""), "x"), InputError);
  CHECK_THROWS_AS(io::parse_rational(J("\"0.5\""), "x"), InputError);
  CHECK_THROWS_AS(io::parse_rational(J("true"), "x"), InputError);
  CHECK(io::parse_projq(J("\"inf\""), "x").is_inf());
}

TEST_CASE("floating-point literals are rejected anywhere") {
  CHECK_THROWS_AS(J("{\"a\": [1, 2.0]}"), InputError);
  CHECK_THROWS_AS(J("1e3"), InputError);
  CHECK_THROWS_AS(io::read_json_file(FIX + "/float_radius.json"), InputError);
  CHECK_THROWS_AS(io::read_json_file(FIX + "/does_not_exist.json"), InputError);
  CHECK_THROWS_AS(J("{"), InputError);
}

TEST_CASE("error messages name the field") {
  try {
    io::parse_domain(J(R"({"removed_open": [{"center": "inf", "log_radius": "x"}]})"), "Y");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("Y.removed_open[0].log_radius") != std::string::npos);
  }
  try {
    io::parse_domain(J(R"({"removed_opne": []})"), "Y");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("removed_opne") != std::string::npos);
  }
}

TEST_CASE("polynomials and maps") {
  LaurentPoly f = io::parse_poly(J(R"({"5": "1", "1": "-1", "-2": "3/4"})"), "f");
  CHECK(f.coeff(5) == 1);
  CHECK(f.coeff(-2) == Rational(3, 4));
  CHECK(io::parse_poly(io::to_json(f), "f") == f);
  RationalMap m = io::parse_map(J(R"({"num": {"2": "1", "0": "-1"}, "den": {"1": "2", "0": "-2"}})"), "m");
  CHECK(m.degree() == 1);
  CHECK(io::parse_map(io::to_json(m), "m") == m);
  CHECK(io::parse_map(J(R"({"3": "1"})"), "m").degree() == 3);
}

TEST_CASE("morphism and graph files") {
  MorphismSpec M = io::parse_morphism(io::read_json_file(FIX + "/f2_p5.json"));
  CHECK(M.p.value() == 5);
  CHECK(M.direction_images.at("inf") == "inf");
  CHECK_THROWS_AS(io::parse_morphism(io::read_json_file(FIX + "/bad_prime.json")), InputError);
  TriangGraph G = io::parse_graph(io::read_json_file(FIX + "/f2_ledger.json"));
  CHECK(G.vertices.size() == 2);
  CHECK(G.internal_edges.size() == 5);
  CHECK(G.external_ends.at(0).kind == EndKind::TY);
  CHECK_THROWS_AS(domain_validate(io::parse_domain(io::read_json_file(FIX + "/empty_domain.json"), "Y"), Prime(5)),
                  InputError);
}

TEST_CASE("input files satisfy the published schemas") {
  CHECK(valid(io::read_json_file(FIX + "/f1_p5.json"), "morphism"));
  CHECK(valid(io::read_json_file(FIX + "/identity_p1.json"), "morphism"));
  CHECK(valid(io::read_json_file(FIX + "/f2_ledger.json"), "graph"));
  CHECK(valid(io::read_json_file(FIX + "/closed_disc.json"), "domain"));
  CHECK(valid(io::read_json_file(FIX + "/f2_poly.json"), "polynomial"));
  CHECK(valid(io::read_json_file(FIX + "/phi2_map.json"), "map"));
  CHECK(valid(io::read_json_file(FIX + "/hints_phi2.json"), "hints"));
  CHECK(valid(io::read_json_file(FIX + "/dir_inf.json"), "direction"));
  CHECK_FALSE(valid(J(R"({"removed_open": [{"center": "zero", "log_radius": "0"}]})"), "domain"));
  CHECK_FALSE(valid(J(R"({"map": {"num": {}}})"), "morphism"));
  CHECK_FALSE(valid(J(R"({"center": "0", "log_radius": "0", "side": "left"})"), "direction"));
}

TEST_CASE("reports satisfy the published schemas") {
  const LaurentPoly T = LaurentPoly::variable();
  CHECK(valid(io::polygon_report(build_polygon(pow(T, 5) - T, Prime(5))), "polygon_report"));
  MorphismSpec M = io::parse_morphism(io::read_json_file(FIX + "/f1_p5.json"));
  RHOutcome o = check_rh(M);
  CHECK(valid(io::to_json(*o.report), "rh_report"));
  CHECK(valid(io::to_json(o), "rh_check_output"));
  MorphismSpec bad = io::parse_morphism(io::read_json_file(FIX + "/mismatch.json"));
  CHECK(valid(io::to_json(check_rh(bad)), "rh_check_output"));
  CHECK(valid(io::to_json(assemble_global_rh(io::parse_graph(io::read_json_file(FIX + "/f2_ledger.json")))), "ledger_report"));
  CHECK(valid(io::to_json(char_p_divisor(RationalMap::polynomial(pow(T, 5)), {Rational(0)}, Prime(5))), "charp_report"));
  GermData g{5, 8, 4, ValQ(0L)};
  CHECK(valid(io::to_json(g), "germ"));
  CHECK_FALSE(valid(Json{{"d", 5}}, "germ"));
}
