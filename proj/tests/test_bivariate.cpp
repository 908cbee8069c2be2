#include <doctest.h>

#include <random>

#include "polarclust/bivariate.hpp"
#include "polarclust/parser.hpp"

using namespace polarclust;

namespace {
BivarPoly P(const std::string& s) { return parse_polynomial(s); }
}  // namespace

TEST_CASE("parser and printer") {
  CHECK(P("x^2 - y^3").str() == "x^2 - y^3");
  CHECK(P("(x - y^2)^2").str() == "x^2 - 2*x*y^2 + y^4");
  CHECK(P("1/2*x + i*y").str() == "1/2*x + i*y");
  CHECK(P("-x^2").coeff(2, 0) == GaussianRational(-1));
  CHECK(P("(1+2*i)*x*y").coeff(1, 1) == GaussianRational(1, 2));
  CHECK_THROWS_AS(P("2x"), ParseError);
  CHECK_THROWS_AS(P("x y"), ParseError);
  CHECK_THROWS_AS(P("x + z"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  try {
    P("x + 2y");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("parse round-trips the printer") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> deg(0, 6), coef(-9, 9), count(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    BivarPoly p;
    int n = count(rng);
    for (int k = 0; k < n; ++k)
      p.add_term(deg(rng), deg(rng), GaussianRational(mpq_class(coef(rng), 1 + std::abs(coef(rng))), coef(rng)));
    CHECK(P(p.str()) == p);
  }
}

TEST_CASE("partial derivatives") {
  CHECK(P("x^2 - y^3").partial_x() == P("2*x"));
  CHECK(P("y^5 + 3").partial_x().is_zero());
  auto f = P("((x-y^2)^2-y^6)*(x-y^3)*(x-y^4)");
  CHECK(f.partial_x().degree_x() == 3);
}

TEST_CASE("mini-regularization") {
  auto [f1, l1] = mini_regularize(P("x^2 - y^3"));
  CHECK(l1 == 0);
  CHECK(f1 == P("x^2 - y^3"));
  auto [f2, l2] = mini_regularize(P("x*y"));
  CHECK(l2 == 1);
  CHECK(f2 == P("x^2 + x*y"));
  auto [f3, l3] = mini_regularize(P("y^2 - x^3"));
  CHECK(l3 == 1);
  CHECK(f3 == P("x^2 + 2*x*y + y^2 - x^3"));
}

TEST_CASE("newton polygon and tropical evaluation") {
  auto np = newton_polygon(P("x^2 - y^3"));
  REQUIRE(np.edges.size() == 1);
  CHECK(np.edges[0].coslope == Exponent(3, 2));
  CHECK(*np.vertical_intercept == Exponent(3));
  CHECK(tropical_eval(np, Exponent(1)) == Exponent(2));
  CHECK(tropical_eval(np, Exponent(2)) == Exponent(3));
  CHECK(tropical_eval(polygon_from_points({{1, Exponent(2)}}), Exponent(5)) == Exponent(7));
  auto np2 = newton_polygon(P("x^2"));
  CHECK(np2.edges.empty());
  CHECK_FALSE(np2.vertical_intercept.has_value());
}

TEST_CASE("relative polygon of the first example") {
  auto f = P("((x-y^2)^2-y^6)*(x-y^3)*(x-y^4)");
  // gamma_1 = y^3/2 + ... is a root of f_x; its 4-jet suffices here.
  PuiseuxSeries g({{3, TowerElement(GaussianRational(mpq_class(1, 2)))}}, 4);
  auto rel = relative_polygon(f, g);
  CHECK(*rel.vertical_intercept == Exponent(10));
  CHECK(*rel.highest_coslope() == Exponent(3));
  CHECK_THROWS_AS(relative_polygon(P("x^2 - y^3"), PuiseuxSeries({}, 1)), Unresolved);
  PuiseuxSeries exact_root({{2, 1}, {3, 1}}, ExtRational::infinity());
  auto np = relative_polygon(f, exact_root);
  CHECK_FALSE(np.vertical_intercept.has_value());
}

TEST_CASE("bivariate gcd, squarefree, resultant") {
  auto a = P("(x - y^2)^2*(x + y)").to_xy();
  auto sq = xy_squarefree(a);
  REQUIRE(sq.size() == 2);
  CHECK(BivarPoly::from_xy(sq[0].first) == P("x + y"));
  CHECK(sq[0].second == 1);
  CHECK(BivarPoly::from_xy(sq[1].first) == P("x - y^2"));
  CHECK(sq[1].second == 2);
  auto g = xy_gcd(P("(x-y)*(x+1)").to_xy(), P("(x-y)*(x-2)").to_xy());
  CHECK(BivarPoly::from_xy(g) == P("x - y"));
  // Res_x(3x^2, -4y^3) = 9*(-4y^3)^2... ord 6
  auto f = P("x^3 - y^4");
  auto r = xy_resultant(f.partial_x().to_xy(), f.partial_y().to_xy());
  CHECK(r.ord() == 6);
  auto r2 = xy_resultant(P("x - y").to_xy(), P("x + y").to_xy());
  CHECK(r2 == YPoly({0, 2}));
}
