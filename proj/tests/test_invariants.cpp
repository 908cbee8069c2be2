#include <doctest.h>

#include <cmath>

#include "polarclust/invariants.hpp"
#include "polarclust/parser.hpp"

using namespace polarclust;

namespace {

GermAnalysis run(const char* s) { return analyze(parse_polynomial(s)); }

// polar arc with the given leading term (coefficient compared numerically,
// only to pick the arc)
const PolarArc& arc(const GermAnalysis& g, double c, Exponent e) {
  for (const auto& p : g.polars)
    if (p.series.has_terms() && p.series.terms().front().exponent == e &&
        std::abs(p.series.terms().front().coeff.approx() - std::complex<double>(c)) < 1e-9)
      return p;
  FAIL("no polar arc with that leading term");
  return g.polars.front();
}

ExtRational ex(long p, long q = 1) { return ExtRational(Exponent(p, q)); }

}  // namespace

TEST_CASE("tangent cone of three lines") {
  Tower t;
  auto lines = tangent_cone(parse_polynomial("x*(x-y)*(x+y) + y^5"), t);
  CHECK(lines.size() == 3);
  for (const auto& l : lines) CHECK(l.multiplicity == 1);
}

TEST_CASE("cusp") {
  auto g = run("x^2 - y^3");
  CHECK(g.m == 2);
  CHECK(g.roots.size() == 2);
  REQUIRE(g.polars.size() == 1);
  CHECK(g.polars[0].delta == ex(3, 2));
  CHECK(g.polars[0].h == ex(3));
  CHECK(g.milnor == ex(2));
  CHECK(g.l0 == Exponent(2));
  CHECK(g.rho0 == Exponent(2, 3));
  CHECK(g.all_checks_passed());
}

TEST_CASE("two-bar example") {
  auto g = run("((x-y^2)^2-y^6)*(x-y^3)*(x-y^4)");
  CHECK(g.roots.size() == 4);
  REQUIRE(g.polars.size() == 3);
  const auto& g1 = arc(g, 0.5, Exponent(3));
  const auto& g2 = arc(g, 1.0, Exponent(2));
  const auto& g3 = arc(g, 0.5, Exponent(2));
  CHECK(g1.delta == ex(3));
  CHECK(g2.delta == ex(3));
  CHECK(g1.h == ex(10));
  CHECK(g2.h == ex(10));
  CHECK(g3.delta == ex(2));
  CHECK(g3.h == ex(8));
  CHECK(g1.bar != g2.bar);
  CHECK(g.tree.bar(g1.bar).height == g.tree.bar(g2.bar).height);
  CHECK(g.milnor == ex(25));
  CHECK(g.all_checks_passed());
}

TEST_CASE("zero locus arcs make mu infinite") {
  auto g = run("x^2");
  CHECK(g.non_isolated);
  CHECK(g.milnor.is_infinite());
  REQUIRE(g.polars.size() == 1);
  CHECK(g.polars[0].on_zero_locus);
  CHECK(g.polars[0].d_gr.is_infinite());
  auto h = run("(x-y^2)^2*(x+y)");
  CHECK(h.non_isolated);
  CHECK(h.milnor.is_infinite());
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(analyze(parse_polynomial("x + 1")), InvalidInput);
  CHECK_THROWS_AS(analyze(BivarPoly{}), InvalidInput);
}

TEST_CASE("non-tangential arcs") {
  auto g = run("x*y*(x+y)");
  CHECK(g.lines.size() == 3);
  CHECK(g.nontangential.size() == 2);
  for (auto i : g.nontangential) {
    CHECK(g.polars[i].delta == ex(1));
    CHECK(g.polars[i].h == ex(3));
  }
  CHECK(g.milnor == ex(4));
  CHECK(g.all_checks_passed());
}

TEST_CASE("Milnor oracle") {
  CHECK(oracle_milnor(parse_polynomial("x^3 - y^4")) == 6);
  CHECK(oracle_milnor(parse_polynomial("x^2 - y^3")) == 2);
  CHECK(oracle_milnor(parse_polynomial("((x-y^2)^2-y^6)*(x-y^3)*(x-y^4)")) == 25);
  CHECK(oracle_milnor(parse_polynomial("x*y")) == 1);
  CHECK_THROWS_AS(oracle_milnor(parse_polynomial("x^2*y")), NonIsolated);
}

TEST_CASE("Milnor sum agrees with the oracle") {
  for (const char* s : {"x^3 - y^4", "x^2*y + y^4", "x^3 + x*y^3", "(x^2-y^3)*(x^3-y^2) + x^5", "x^4 - 2*x^2*y^3 + y^6 - y^7"}) {
    CAPTURE(s);
    auto g = run(s);
    REQUIRE(g.milnor.is_finite());
    CHECK(g.milnor.value() == Exponent(oracle_milnor(parse_polynomial(s))));
  }
}

TEST_CASE("explicit shear and margin") {
  AnalysisOptions o;
  o.margin = Exponent(3);
  auto a = analyze(parse_polynomial("x^2 - y^3"), o);
  CHECK(a.margin == Exponent(3));
  CHECK(a.precision > run("x^2 - y^3").precision);
  o.shear = 1;
  auto b = analyze(parse_polynomial("y^2 - x^3"), o);
  CHECK(b.shear == 1);
  CHECK(b.milnor == ex(2));
}
