#include <doctest.h>

#include "polarclust/puiseux.hpp"

using namespace polarclust;

TEST_CASE("series order and contact") {
  PuiseuxSeries a({{2, 1}, {Exponent(9, 2), TowerElement(-1)}}, ExtRational::infinity());
  PuiseuxSeries b({{2, 1}, {Exponent(9, 2), TowerElement(1)}}, ExtRational::infinity());
  CHECK(a.ord() == ExtRational(2));
  CHECK(contact(a, b) == ExtRational(Exponent(9, 2)));
  CHECK(contact(a, a).is_infinite());
  PuiseuxSeries t = a.truncate(3);
  CHECK(t.omega() == ExtRational(3));
  CHECK(t.terms().size() == 1);
  CHECK_THROWS_AS((void)contact(t, a.truncate(4)), Unresolved);
  CHECK(PuiseuxSeries().ord().is_infinite());
  CHECK_THROWS_AS((void)PuiseuxSeries({}, 5).ord(), Unresolved);
}

TEST_CASE("series arithmetic propagates truncation") {
  PuiseuxSeries a({{1, 1}}, 3);      // y + O(y^3)
  PuiseuxSeries b({{0, 2}, {1, 1}}, ExtRational::infinity());  // 2 + y
  PuiseuxSeries p = a * b;
  CHECK(p.omega() == ExtRational(3));
  CHECK(p.coeff_at(1) == TowerElement(2));
  CHECK(p.coeff_at(2) == TowerElement(1));
  PuiseuxSeries s = a + b;
  CHECK(s.omega() == ExtRational(3));
  CHECK(s.coeff_at(1) == TowerElement(2));
  CHECK((a - a).terms().empty());
}

TEST_CASE("conjugates and branch contact") {
  // y^(3/2): conjugates differ in the sign of the y^(3/2) term
  ArcClass c{PuiseuxSeries({{Exponent(3, 2), 1}}, ExtRational::infinity()), 2, 1};
  Tower q;
  auto conj = conjugates(c, q);
  REQUIRE(conj.size() == 2);
  CHECK(contact(conj[0], conj[1]) == ExtRational(Exponent(3, 2)));
  ArcClass d{PuiseuxSeries({{Exponent(3, 2), 1}, {2, 1}}, ExtRational::infinity()), 2, 1};
  CHECK(branch_contact(c, d, q) == ExtRational(2));
  CHECK_THROWS_AS((void)branch_contact(c, c, q), SameBranch);

  ArcClass e{PuiseuxSeries({{Exponent(4, 3), 1}}, ExtRational::infinity()), 3, 1};
  auto conj3 = conjugates(e, q);
  REQUIRE(conj3.size() == 3);
  CHECK(contact(conj3[1], conj3[2]) == ExtRational(Exponent(4, 3)));
}

TEST_CASE("series printing") {
  PuiseuxSeries a({{2, 1}, {Exponent(9, 2), TowerElement(GaussianRational(mpq_class(-1, 2)))}}, 5);
  CHECK(a.str() == "y^2 - 1/2*y^(9/2) + O(y^5)");
}
