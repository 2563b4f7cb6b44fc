#include <algorithm>

#include "doctest.h"
#include "puiseux/error.hpp"
#include "puiseux/parser.hpp"
#include "puiseux/render.hpp"
#include "puiseux/report.hpp"
#include "support.hpp"

using namespace puiseux;
using namespace puiseux::testing;

namespace {

const FieldPtr Q = NumberField::rational();

DiffPoly scaling_poly() { return make_dp(2, {{1, 1, {1, 0, 1}}, {-1, 1, {0, 2, 0}}, {1, 0, {1, 1, 0}}}); }
DiffPoly exp_poly() { return make_dp(1, {{1, 0, {0, 1}}, {-1, 0, {1, 0}}, {-1, 0, {0, 0}}}); }

ParseError parse_error_of(std::string_view text) {
  try {
    parse_diffpoly(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for " << text);
  return ParseError("", 0, 0);
}

SolutionReport run_text(std::string_view text, Rat max_exponent = 10) {
  SolveOptions o;
  o.budget.max_exponent = max_exponent;
  return run(make_spec(text, o));
}

long count_char(const std::string& s, char c) { return std::count(s.begin(), s.end(), c); }

long count_of(const std::string& s, const std::string& needle) {
  long n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parsing the worked examples") {
  CHECK(parse_diffpoly("x*y0*y2 - x*y1^2 + y0*y1") == scaling_poly());
  CHECK(parse_diffpoly("y0^2 - x") == make_dp(0, {{1, 0, {2}}, {-1, 1, {0}}}));
  CHECK(parse_diffpoly("y' - y - 1") == exp_poly());
  CHECK(parse_diffpoly("x*y''") == make_dp(2, {{1, 1, {0, 0, 1}}}));
}

TEST_CASE("grammar") {
  CHECK(parse_diffpoly("3/2*x^(1/2)*y0") == make_dp(0, {{Rat(3, 2), Rat(1, 2), {1}}}));
  CHECK(parse_diffpoly("x^(-3/2) + y") == make_dp(0, {{1, Rat(-3, 2), {0}}, {1, 0, {1}}}));
  CHECK(parse_diffpoly("x^-2*y") == make_dp(0, {{1, -2, {1}}}));
  CHECK(parse_diffpoly("(y0 + x)^2") == make_dp(0, {{1, 0, {2}}, {2, 1, {1}}, {1, 2, {0}}}));
  CHECK(parse_diffpoly("(x^(1/3))^3*y0") == make_dp(0, {{1, 1, {1}}}));
  CHECK(parse_diffpoly("2^(-2)*y0 - -y0") == make_dp(0, {{Rat(5, 4), 0, {1}}}));
  CHECK(parse_diffpoly(" y0\n *\ty1 ") == make_dp(1, {{1, 0, {1, 1}}}));
  CHECK(parse_diffpoly("y0/4") == make_dp(0, {{Rat(1, 4), 0, {1}}}));
  CHECK(parse_diffpoly("y9").order() == 9);
  CHECK(parse_diffpoly("y0^0 + y1").order() == 1);
}

TEST_CASE("parse errors carry positions") {
  ParseError e = parse_error_of("y0 +\n  * x");
  CHECK(e.line == 2);
  CHECK(e.column == 3);
  CHECK(parse_error_of("y^(1/2)").column == 3);
  CHECK(parse_error_of("y0^-1").column == 4);
  CHECK(parse_error_of("y10").column == 1);
  CHECK(parse_error_of("2/y0").column == 3);
  CHECK(parse_error_of("y0/0").column == 4);
  CHECK(parse_error_of("(y0 + 1").column == 8);
  CHECK(parse_error_of("2x").column == 2);
  CHECK(parse_error_of("z").column == 1);
  parse_error_of("");
  parse_error_of("y0 - y0");
  parse_error_of("0");
  parse_error_of("x^(1/0)");
  parse_error_of("(y0 + 1)^(1/2)");
}

TEST_CASE("serialize and parse round-trip") {
  for (int trial = 0; trial < 200; ++trial) {
    DiffPoly f = random_diffpoly(Q);
    if (f.is_zero()) continue;
    DiffPoly g = parse_diffpoly(serialize(f));
    CHECK(g.with_order(f.order()) == f);
  }
  CHECK_THROWS_AS(serialize(DiffPoly::constant(AlgNum::generator(test_fields()[1]), 0)), MathError);
}

TEST_CASE("parameter values") {
  CHECK(parse_qpoly("Z^2 - 3") == QPoly({-3, 0, 1}));
  CHECK(parse_qpoly("t^3 - t/2 + 1") == QPoly({1, Rat(-1, 2), 0, 1}));
  CHECK_THROWS_AS(parse_qpoly("Z^2 - t"), ParseError);
  CHECK_THROWS_AS(parse_qpoly("Z^(1/2)"), ParseError);
  ParamValue v = parse_param_value("-3/2");
  REQUIRE(v.rational.has_value());
  CHECK(*v.rational == Rat(-3, 2));
  ParamValue r = parse_param_value("root(Z^2 - 3)");
  CHECK(!r.rational.has_value());
  CHECK(r.minpoly == QPoly({-3, 0, 1}));
  CHECK_THROWS_AS(parse_param_value("root(5)"), ParseError);
  CHECK_THROWS_AS(parse_param_value("x"), ParseError);
}

TEST_CASE("reports of the worked examples") {
  SolutionReport sq = run_text("y0^2 - x");
  REQUIRE(sq.solutions.size() == 2);
  for (const auto& s : sq.solutions) {
    CHECK(s.kind == "exact-leaf");
    CHECK(s.nu == "2");
    CHECK(s.residual == "0");
    CHECK(s.verified_to == "+inf");
  }

  SolutionReport rm = run_text("x*y0*y2 - x*y1^2 + y0*y1");
  REQUIRE(rm.solutions.size() == 1);
  CHECK(rm.solutions[0].kind == "continuum-family");
  CHECK(rm.solutions[0].mu_lo == "0");
  CHECK(rm.solutions[0].mu_hi == "+inf");

  SolutionReport ex = run_text("y' - y - 1", 4);
  REQUIRE(ex.solutions.size() == 2);
  CHECK(ex.solutions[0].kind == "parametric-family");
  CHECK(ex.solutions[0].parameter == "c1");
  const auto& t = ex.solutions[1];
  CHECK(t.kind == "truncated");
  REQUIRE(t.terms.size() == 4);
  CHECK(t.terms[3].exponent == "4");
  CHECK(t.terms[3].coeff == "1/24");
  CHECK(t.certified == "5");
  CHECK(t.residual == "O(x^4)");
  CHECK(to_text(ex).find("y = x + 1/2*x^2 + 1/6*x^3 + 1/24*x^4 + O(x^5)") != std::string::npos);
}

TEST_CASE("algebraic coefficients are written in t with the minimal polynomial") {
  SolutionReport r = run_text("y0^2 - 2*x");
  REQUIRE(r.solutions.size() == 1);
  const auto& s = r.solutions[0];
  REQUIRE(s.minpoly.size() == 3);
  CHECK(s.minpoly_text.find("t^2") != std::string::npos);
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].coords.size() == 2);
  CHECK(to_text(r).find("field: Q(t), " + s.minpoly_text + " = 0") != std::string::npos);
}

TEST_CASE("verification bound") {
  SolveOptions o;
  o.budget.max_exponent = 4;
  ProblemSpec spec = make_spec("y' - y - 1", o);
  spec.verify_to = ExtRat(Rat(3));
  SolutionReport r = run(spec);
  CHECK(r.solutions.at(1).verified_to == "3");
  spec.verify_to = ExtRat(Rat(9));
  CHECK(run(spec).solutions.at(1).verified_to == "4");
}

TEST_CASE("json round-trip and determinism") {
  SolveOptions with_param;
  with_param.budget.max_exponent = 2;
  with_param.params["c1"] = parse_param_value("root(Z^2 - 3)");
  ProblemSpec pspec = make_spec("y' - y - 1", with_param);
  pspec.param_text["c1"] = "root(Z^2 - 3)";
  std::vector<SolutionReport> reports{run_text("y0^2 - x"), run_text("y0^2 - 2*x"), run_text("x*y0*y2 - x*y1^2 + y0*y1"),
                                      run_text("y' - y - 1", 4), run(pspec)};
  for (const auto& r : reports) {
    const std::string j = to_json(r);
    SolutionReport back = report_from_json(j);
    CHECK(back == r);
    CHECK(to_json(back) == j);
  }
  CHECK(to_json(run_text("y' - y - 1", 4)) == to_json(reports[3]));
  CHECK(to_text(run(pspec)) == to_text(reports[4]));
  CHECK_THROWS_AS(report_from_json("{\"input\": 3}"), ParseError);
  CHECK_THROWS_AS(report_from_json("not json"), ParseError);
}

TEST_CASE("polygon rendering") {
  std::string sq = render_polygon(build_polygon(parse_diffpoly("y0^2 - x")), PolygonFormat::ascii);
  CHECK(count_char(sq, '*') == 2);
  CHECK(count_of(sq, "μ=1/2") == 1);

  std::string one = render_polygon(build_polygon(parse_diffpoly("x*y0*y2 - x*y1^2 + y0*y1")), PolygonFormat::ascii);
  CHECK(count_char(one, '*') == 1);
  CHECK(one.find("no edges") != std::string::npos);

  std::string ex = render_polygon(build_polygon(parse_diffpoly("y' - y - 1")), PolygonFormat::ascii);
  CHECK(count_char(ex, '*') == 2);
  CHECK(count_of(ex, "μ=1\n") == 1);
  CHECK(ex.find("(-1, 1) -- (0, 0)") != std::string::npos);

  PolygonView view = build_polygon(parse_diffpoly("y0^3 + x*y0 - x^(1/2)*y1 + x^2"));
  std::string svg = render_polygon(view, PolygonFormat::svg);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "<circle") == static_cast<long>(view.points.size()));
  for (const auto& e : view.edges) CHECK(svg.find("data-mu=\"" + e.mu.str() + "\"") != std::string::npos);
  CHECK(render_polygon(view, PolygonFormat::svg) == svg);
}
