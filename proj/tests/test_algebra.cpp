#include <doctest.h>

#include <random>

#include "polarclust/algebra.hpp"

using namespace polarclust;

namespace {

TowerPoly poly(std::initializer_list<long> c) {
  std::vector<TowerElement> v;
  for (long x : c) v.emplace_back(x);
  return TowerPoly(v);
}

const GaussianRational I = GaussianRational::imaginary_unit();

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational a(1, 1), b(1, -1);
  CHECK(a * b == GaussianRational(2));
  CHECK((a / b) == I);
  CHECK(GaussianRational(mpq_class(2, 4)).re() == mpq_class(1, 2));
  CHECK(GaussianRational(-4).sqrt().has_value());
  CHECK(*GaussianRational(-4).sqrt() * *GaussianRational(-4).sqrt() == GaussianRational(-4));
  CHECK(GaussianRational(2, 0).sqrt() == std::nullopt);
  CHECK((*GaussianRational(0, 2).sqrt()).pow(2) == GaussianRational(0, 2));
  CHECK_THROWS_AS(GaussianRational(0).inverse(), DivisionByZero);
}

TEST_CASE("field arithmetic in extensions") {
  Tower q;
  auto [t6, th6] = q.extend(poly({-6, 0, 1}));
  CHECK(th6 * th6 == TowerElement(6));
  auto [t2, th2] = q.extend(poly({-2, 0, 1}));
  CHECK((th2 + 1) / (th2 + 1) == TowerElement(1));
  CHECK((th2 * th2 - 2).is_zero());
  CHECK_FALSE((th2 - 1).is_zero());
  CHECK_THROWS_AS(th2 / (th2 * th2 - 2), DivisionByZero);
}

TEST_CASE("zero divisor raises a split with both branches") {
  Tower q;
  auto [t, th] = q.extend(poly({-1, 0, 1}));
  TowerElement a = th - 1;
  bool split = false;
  try {
    (void)a.is_zero();
  } catch (const TowerSplit& s) {
    split = true;
    auto branches = split_branches(s);
    REQUIRE(branches.size() == 2);
    std::vector<bool> results;
    for (const auto& b : branches) results.push_back(project_to_branch(a, s, b).is_zero());
    CHECK(results.size() == 2);
    CHECK(results[0] != results[1]);
    CHECK(s.factor() * s.cofactor() == poly({-1, 0, 1}));
  }
  CHECK(split);
  CHECK(TowerElement(0).is_zero());
}

TEST_CASE("adjoin_root") {
  Tower q;
  auto [t1, r1] = adjoin_root(q, poly({-5, 1}));
  CHECK(r1 == TowerElement(5));
  CHECK(t1.depth() == 0);

  auto [t2, r2] = adjoin_root(q, poly({-6, 0, 1}));
  CHECK(t2.depth() == 1);
  CHECK((r2 * r2 - 6).is_zero());

  auto [t3, r3] = adjoin_root(q, poly({2, 0, 1}));
  TowerElement s = r3 / TowerElement(I);
  CHECK((s * s - 2).is_zero());

  // splits over Q(i): no extension
  auto [t4, r4] = adjoin_root(q, poly({1, 0, 1}));
  CHECK(t4.depth() == 0);
  CHECK((r4 * r4 + 1).is_zero());

  auto [t5, r5] = adjoin_root(q, poly({-3, 0, 0, 1}));
  CHECK((r5.pow(3) - 3).is_zero());
}

TEST_CASE("all_roots with multiplicities") {
  Tower q;
  // (t-1)^2 (t^2-2)
  TowerPoly p = poly({-1, 1}) * poly({-1, 1}) * poly({-2, 0, 1});
  auto [t, roots] = all_roots(q, p);
  int total = 0;
  for (auto& [r, m] : roots) {
    CHECK(p.evaluate(r).is_zero());
    total += m;
  }
  CHECK(total == 4);
  CHECK(roots.size() == 3);
}

TEST_CASE("roots of unity") {
  Tower q;
  CHECK(adjoin_root_of_unity(q, 1).second == TowerElement(1));
  CHECK(adjoin_root_of_unity(q, 2).second == TowerElement(-1));
  CHECK(adjoin_root_of_unity(q, 4).second == TowerElement(I));
  auto [t3, e3] = adjoin_root_of_unity(q, 3);
  CHECK((e3 * e3 + e3 + 1).is_zero());
  CHECK(e3.pow(3) == TowerElement(1));
  auto [t6, e6] = adjoin_root_of_unity(q, 6);
  CHECK(e6.pow(6) == TowerElement(1));
  CHECK_FALSE((e6.pow(3) - 1).is_zero());
  CHECK_FALSE((e6.pow(2) - 1).is_zero());
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(poly({-1, 1}) * poly({-1, 1}) * poly({2, 1})) == poly({-1, 1}) * poly({2, 1}));
  CHECK(squarefree_part(poly({0, 0, 0, 1})) == poly({0, 1}));
  CHECK(squarefree_part(poly({-6, 0, 2})) == poly({-3, 0, 1}));
  auto d = squarefree_decomposition(poly({0, 0, 0, 2}) * poly({1, 1}));
  int deg = 0;
  for (auto& [f, k] : d) deg += f.degree() * k;
  CHECK(deg == 4);
}

TEST_CASE("field axioms on random samples") {
  Tower q;
  auto [t1, a] = q.extend(poly({-2, 0, 1}));
  auto [t2, b] = t1.extend(TowerPoly({TowerElement(-3), TowerElement(0), TowerElement(1)}));
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-5, 5);
  auto sample = [&] {
    return TowerElement(GaussianRational(d(rng), d(rng))) + TowerElement(d(rng)) * a +
           TowerElement(d(rng)) * b + TowerElement(d(rng)) * a * b;
  };
  for (int k = 0; k < 30; ++k) {
    TowerElement x = sample(), y = sample(), z = sample();
    CHECK((x * y) * z == x * (y * z));
    CHECK((x - x).is_zero());
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == TowerElement(1));
  }
}

TEST_CASE("parametric polynomial") {
  auto p = ParametricPolynomial::u_power(2, 2) + ParametricPolynomial::constant(-2);
  CHECK_FALSE(p.is_zero());
  CHECK((p + ParametricPolynomial::u_power(-2, 2) + ParametricPolynomial::constant(2)).is_zero());
}
