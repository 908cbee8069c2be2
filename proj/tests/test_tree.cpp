#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "polarclust/kuolu_tree.hpp"

using namespace polarclust;

namespace {

// contacts given as a symmetric table
KuoLuTree from_table(const std::vector<std::vector<int>>& c, std::vector<std::size_t> perm = {}) {
  const std::size_t n = c.size();
  if (perm.empty()) {
    perm.resize(n);
    std::iota(perm.begin(), perm.end(), 0);
  }
  std::vector<TreeLeafInfo> leaves(n);
  return KuoLuTree::build(leaves, [&](std::size_t a, std::size_t b) { return Exponent(c[perm[a]][perm[b]]); });
}

// y^2-y^3, y^2+y^3, y^3, y^4
const std::vector<std::vector<int>> kFigure1 = {{0, 3, 2, 2}, {3, 0, 2, 2}, {2, 2, 0, 3}, {2, 2, 3, 0}};

}  // namespace

TEST_CASE("tree of the two-bar example") {
  auto t = from_table(kFigure1);
  REQUIRE(t.bars().size() == 3);
  CHECK(t.bar(t.root()).height == Exponent(2));
  CHECK(t.bar(t.root()).child_bars.size() == 2);
  for (int c : t.bar(t.root()).child_bars) {
    CHECK(t.bar(c).height == Exponent(3));
    CHECK(t.bar(c).leaves_below.size() == 2);
  }
  int b01 = t.lowest_common_bar(0, 1), b23 = t.lowest_common_bar(2, 3);
  CHECK(b01 != b23);
  CHECK(t.bar(b01).height == t.bar(b23).height);
  CHECK(t.lowest_common_bar(0, 3) == t.root());
  CHECK(t.lowest_common_bar(2, 2) == -1);
  CHECK(t.bar_of({0, 1}, Exponent(3)) == b01);
  CHECK(t.bar_of({2}, Exponent(3)) == b23);
  CHECK(t.bar_of({0, 2}, Exponent(2)) == t.root());
  CHECK_THROWS_AS(t.bar_of({0, 2}, Exponent(3)), NoSuchBar);
  auto path = t.path_to(b23);
  CHECK(path == std::vector<int>{t.root(), b23});
}

TEST_CASE("contacts of the tree equal the input") {
  auto t = from_table(kFigure1);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      if (a != b) CHECK(t.bar(t.lowest_common_bar(a, b)).height == Exponent(kFigure1[a][b]));
}

TEST_CASE("canonical encoding ignores leaf order") {
  const std::vector<std::vector<int>> c = {
      {0, 5, 2, 2, 2}, {5, 0, 2, 2, 2}, {2, 2, 0, 4, 3}, {2, 2, 4, 0, 3}, {2, 2, 3, 3, 0}};
  std::string ref = from_table(c).canonical_encoding();
  std::vector<std::size_t> perm = {0, 1, 2, 3, 4};
  int tried = 0;
  do {
    auto t = from_table(c, perm);
    CHECK(t.canonical_encoding() == ref);
    ++tried;
  } while (std::next_permutation(perm.begin(), perm.end()) && tried < 120);
  CHECK(from_table(kFigure1).canonical_encoding() != ref);
}

TEST_CASE("bar codes separate bars with different subtrees") {
  const std::vector<std::vector<int>> c = {{0, 3, 2}, {3, 0, 2}, {2, 2, 0}};
  auto t = from_table(c);
  REQUIRE(t.bars().size() == 2);
  CHECK(t.bar_code(0) != t.bar_code(1));
  auto u = from_table(c, {2, 0, 1});
  std::vector<std::string> a = {t.bar_code(0), t.bar_code(1)}, b = {u.bar_code(0), u.bar_code(1)};
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("single leaf has no bars") {
  auto t = KuoLuTree::build({TreeLeafInfo{}}, [](std::size_t, std::size_t) { return Exponent(1); });
  CHECK(t.bars().empty());
  CHECK(t.root() == -1);
  CHECK(t.leaf_count() == 1);
}

TEST_CASE("multiplicity decorates the encoding") {
  std::vector<TreeLeafInfo> a(2), b(2);
  b[0].multiplicity = 2;
  auto c = [](std::size_t, std::size_t) { return Exponent(3, 2); };
  CHECK(KuoLuTree::build(a, c).canonical_encoding() != KuoLuTree::build(b, c).canonical_encoding());
}
