// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polarclust/canyons.hpp"
#include "polarclust/clusters.hpp"
#include "polarclust/invariants.hpp"
#include "polarclust/parser.hpp"
#include "polarclust/report.hpp"

using namespace polarclust;

namespace {

const char* kFig1 = "((x-y^2)^2-y^6)*(x-y^3)*(x-y^4)";
const char* kEx1 = "(x-y^2)^2*(x-y^3)^2*(x-y^4)*(x-2*y^4)*(x-3*y^4)-6*y^22";
const char* kEx2 = "((x-y^2)^2-y^10)*((x-y^3)^2-y^10)*((x-y^4)^2-y^10)*(x^2-y^10)";

const std::vector<const char*> kSmall = {
    "x^2 - y^3",         "x^3 - y^4",        "x^2 - y^4",        "x^3 - y^5",     "x*(x-y)",
    "x*y*(x+y)",         "x*y*(x+y)*(x-y)",  "(x^2-y^3)*(x-y)",  "x^3 + x*y^3",   "x^2*y + y^4",
    "(x-y)^2*(x+2*y) + y^4", "(x^2-y^3)*(x^2-y^5)", "(x^2-y^7)*(x^2-2*y^7)*(x^2-3*y^7)"};

struct Failure {
  std::string msg;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw Failure{msg};
}

ExtRational ex(long p, long q = 1) { return ExtRational(Exponent(p, q)); }

TowerElement rat(long p, long q = 1) { return TowerElement(GaussianRational(mpq_class(p, q))); }

std::map<std::string, GermAnalysis> cache;

const GermAnalysis& analysed(const char* s) {
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, analyze(parse_polynomial(s))).first;
  return it->second;
}

std::vector<const char*> corpus() {
  std::vector<const char*> c = {kFig1, kEx1, kEx2};
  c.insert(c.end(), kSmall.begin(), kSmall.end());
  return c;
}

// ---- identification of arcs by exact leading terms --------------------------

bool lead_is(const PuiseuxSeries& s, Exponent e, const std::function<bool(const TowerElement&)>& coeff) {
  return s.has_terms() && s.terms().front().exponent == e && coeff(s.terms().front().coeff);
}

std::function<bool(const TowerElement&)> equals(TowerElement c) {
  return [c](const TowerElement& a) { return (a - c).is_zero(); };
}

std::size_t find_polar(const GermAnalysis& g, Exponent e, const std::function<bool(const TowerElement&)>& c,
                       const std::string& name) {
  std::vector<std::size_t> hit;
  for (std::size_t i = 0; i < g.polars.size(); ++i)
    if (lead_is(g.polars[i].series, e, c)) hit.push_back(i);
  require(hit.size() == 1, "polar arc " + name + " not identified uniquely");
  return hit.front();
}

std::vector<std::size_t> roots_where(const GermAnalysis& g, const std::function<bool(const PuiseuxSeries&)>& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.roots.size(); ++i)
    if (p(g.roots[i].series)) out.push_back(i);
  return out;
}

std::function<bool(const PuiseuxSeries&)> lead_exp(Exponent lo, Exponent hi) {
  return [lo, hi](const PuiseuxSeries& s) {
    Exponent e = s.terms().front().exponent;
    return lo <= e && e <= hi;
  };
}

int line_index_of_zero_slope(const GermAnalysis& g) {
  for (std::size_t k = 0; k < g.lines.size(); ++k)
    if (g.lines[k].slope.is_structurally_zero()) return static_cast<int>(k);
  throw Failure{"line x = 0 missing"};
}

struct ArcExpect {
  std::string name;
  std::size_t index;
  ExtRational delta, h;
  std::vector<std::size_t> bar_roots;  // leaves below the expected bar
};

void check_arcs(const GermAnalysis& g, const std::vector<ArcExpect>& arcs) {
  for (const auto& a : arcs) {
    const auto& p = g.polars[a.index];
    require(p.delta == a.delta, a.name + ": delta " + p.delta.str() + " expected " + a.delta.str());
    require(p.h == a.h, a.name + ": h " + p.h.str() + " expected " + a.h.str());
    require(p.bar >= 0, a.name + ": no bar");
    require(g.tree.bar(p.bar).leaves_below == a.bar_roots, a.name + ": wrong bar");
    require(ExtRational(g.tree.bar(p.bar).height) == a.delta, a.name + ": bar height differs from delta");
  }
}

// ---- criteria ----------------------------------------------------------------

std::string criterion1() {
  const auto& g = analysed(kFig1);
  require(g.roots.size() == 4, "root count " + std::to_string(g.roots.size()));
  require(g.polars.size() == 3, "polar count " + std::to_string(g.polars.size()));
  auto one = [](Exponent e) { return [e](const PuiseuxSeries& s) { return s.terms().front().exponent == e; }; };
  auto sq = roots_where(g, one(Exponent(2)));
  auto other = roots_where(g, lead_exp(Exponent(3), Exponent(4)));
  std::vector<std::size_t> all = {0, 1, 2, 3};
  std::vector<ArcExpect> arcs = {
      {"g1", find_polar(g, Exponent(3), equals(rat(1, 2)), "g1"), ex(3), ex(10), other},
      {"g2", find_polar(g, Exponent(2), equals(rat(1)), "g2"), ex(3), ex(10), sq},
      {"g3", find_polar(g, Exponent(2), equals(rat(1, 2)), "g3"), ex(2), ex(8), all}};
  check_arcs(g, arcs);
  require(g.polars[arcs[0].index].bar != g.polars[arcs[1].index].bar, "g1 and g2 share a bar");
  return "4 roots, 3 arcs, g1/g2 on distinct bars of height 3";
}

std::string criterion2() {
  const auto& g = analysed(kEx1);
  require(g.polars.size() == 6, "polar count " + std::to_string(g.polars.size()));
  // (6 +- sqrt 3)/3 are the roots of 3c^2 - 12c + 11
  auto quad = [](const TowerElement& c) { return (rat(3) * c * c - rat(12) * c + rat(11)).is_zero(); };
  std::vector<std::size_t> g56;
  for (std::size_t i = 0; i < g.polars.size(); ++i)
    if (lead_is(g.polars[i].series, Exponent(4), quad)) g56.push_back(i);
  require(g56.size() == 2, "g5, g6 not identified");
  auto all = roots_where(g, [](const PuiseuxSeries&) { return true; });
  auto b5 = roots_where(g, lead_exp(Exponent(2), Exponent(2)));
  auto b4 = roots_where(g, lead_exp(Exponent(3), Exponent(3)));
  auto b2 = roots_where(g, lead_exp(Exponent(3), Exponent(4)));
  auto b3 = roots_where(g, lead_exp(Exponent(4), Exponent(4)));
  require(b5.size() == 2 && b4.size() == 2 && b3.size() == 3, "root grouping by leading exponent");
  std::vector<ArcExpect> arcs = {
      {"g1", find_polar(g, Exponent(2), equals(rat(1)), "g1"), ex(6), ex(22), b5},
      {"g2", find_polar(g, Exponent(2), equals(rat(5, 7)), "g2"), ex(2), ex(14), all},
      {"g3", find_polar(g, Exponent(3), equals(rat(1)), "g3"), ex(9, 2), ex(22), b4},
      {"g4", find_polar(g, Exponent(3), equals(rat(3, 5)), "g4"), ex(3), ex(19), b2},
      {"g5", g56[0], ex(4), ex(22), b3},
      {"g6", g56[1], ex(4), ex(22), b3}};
  check_arcs(g, arcs);
  require(g.clusters.size() == 5, "cluster count " + std::to_string(g.clusters.size()));
  for (const auto& c : g.clusters) {
    std::set<std::size_t> members(c.members.begin(), c.members.end());
    bool is56 = members == std::set<std::size_t>{g56[0], g56[1]};
    require(members.size() == 1 || is56, "unexpected non-singleton cluster");
  }
  int k = line_index_of_zero_slope(g);
  const auto& L = g.per_line.at(static_cast<std::size_t>(k));
  require(L.q == std::set<Exponent>{Exponent(14), Exponent(19), Exponent(22)}, "Q_k");
  std::map<Exponent, Exponent> partial = {{Exponent(6), Exponent(21, 22)},
                                          {Exponent(2), Exponent(13, 14)},
                                          {Exponent(9, 2), Exponent(21, 22)},
                                          {Exponent(3), Exponent(18, 19)},
                                          {Exponent(4), Exponent(21, 22)}};
  require(L.partial == partial, "partial exponents");
  require(L.rho0 == Exponent(21, 22), "rho_0k");
  require(L.milnor == Exponent(115), "mu_k " + exponent_str(L.milnor));
  return "six arcs, five clusters, Q_k {14,19,22}, rho_0k 21/22, mu_k 115";
}

std::string criterion3() {
  const auto& g = analysed(kEx2);
  require(g.polars.size() == 7, "polar count " + std::to_string(g.polars.size()));
  auto all = roots_where(g, [](const PuiseuxSeries&) { return true; });
  auto at = [&](int e) { return roots_where(g, lead_exp(Exponent(e), Exponent(e))); };
  auto from = [&](int e) { return roots_where(g, lead_exp(Exponent(e), Exponent(100))); };
  std::vector<ArcExpect> arcs = {
      {"g1", find_polar(g, Exponent(6), equals(rat(-1)), "g1"), ex(5), ex(28), at(5)},
      {"g2", find_polar(g, Exponent(4), equals(rat(1, 2)), "g2"), ex(4), ex(26), from(4)},
      {"g3", find_polar(g, Exponent(3), equals(rat(2, 3)), "g3"), ex(3), ex(22), from(3)},
      {"g4", find_polar(g, Exponent(2), equals(rat(3, 4)), "g4"), ex(2), ex(16), all},
      {"g5", find_polar(g, Exponent(4), equals(rat(1)), "g5"), ex(5), ex(28), at(4)},
      {"g6", find_polar(g, Exponent(3), equals(rat(1)), "g6"), ex(5), ex(26), at(3)},
      {"g7", find_polar(g, Exponent(2), equals(rat(1)), "g7"), ex(5), ex(22), at(2)}};
  check_arcs(g, arcs);
  require(g.tree.bars().size() == 7, "bar count " + std::to_string(g.tree.bars().size()));
  require(g.clusters.size() == 7, "cluster count " + std::to_string(g.clusters.size()));
  for (const auto& c : g.clusters) require(c.members.size() == 1, "non-singleton cluster");
  int k = line_index_of_zero_slope(g);
  auto pc5 = clusters_by_delta(g, k).at(Exponent(5));
  std::set<std::size_t> want = {arcs[0].index, arcs[4].index, arcs[5].index, arcs[6].index};
  require(std::set<std::size_t>(pc5.begin(), pc5.end()) == want, "PC_{k,5}");
  const auto& L = g.per_line.at(static_cast<std::size_t>(k));
  require(L.q == std::set<Exponent>{Exponent(16), Exponent(22), Exponent(26), Exponent(28)}, "Q_k");
  std::map<Exponent, Exponent> partial = {{Exponent(5), Exponent(27, 28)},
                                          {Exponent(4), Exponent(25, 26)},
                                          {Exponent(3), Exponent(21, 22)},
                                          {Exponent(2), Exponent(15, 16)}};
  require(L.partial == partial, "partial exponents");
  require(L.rho0 == Exponent(27, 28), "rho_0k");
  require(L.milnor == Exponent(161), "mu_k " + exponent_str(L.milnor));
  return "seven singleton clusters on seven bars, Q_k {16,22,26,28}, rho_0k 27/28, mu_k 161";
}

std::string criterion4() {
  int paper = 0, generated = 0, skipped = 0;
  for (const char* s : {kFig1, kEx1, kEx2}) {
    const auto& g = analysed(s);
    auto mu = oracle_milnor(parse_polynomial(s));
    require(g.milnor == ex(mu), std::string(s) + ": sum " + g.milnor.str() + " vs oracle " + std::to_string(mu));
    ++paper;
  }
  std::mt19937_64 rng(20240601);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  while (generated < 12) {
    std::ostringstream e;
    if (generated % 2 == 0) {
      int a = pick(2, 5), b = pick(a, 9), i = pick(1, a - 1), j = pick(1, b - 1);
      e << "x^" << a << " + " << pick(-3, 3) << "*x^" << i << "*y^" << j << " + " << pick(1, 4) << "*y^" << b;
    } else {
      e << "(x^" << pick(1, 3) << " - " << pick(1, 3) << "*y^" << pick(2, 5) << ")*(x^" << pick(1, 3) << " + "
        << pick(1, 3) << "*y^" << pick(2, 5) << ") + y^" << pick(9, 12);
    }
    std::string s = e.str();
    std::int64_t mu;
    try {
      mu = oracle_milnor(parse_polynomial(s));
    } catch (const NonIsolated&) {
      ++skipped;
      continue;
    }
    auto g = analyze(parse_polynomial(s));
    require(g.milnor == ex(mu), s + ": sum " + g.milnor.str() + " vs oracle " + std::to_string(mu));
    ++generated;
  }
  return std::to_string(paper) + " paper germs, " + std::to_string(generated) + " generated germs (" +
         std::to_string(skipped) + " non-isolated draws skipped)";
}

std::string criterion5() {
  std::size_t arcs = 0;
  for (const char* s : corpus()) {
    const auto& g = analysed(s);
    for (std::size_t i = 0; i < g.polars.size(); ++i) {
      const auto& p = g.polars[i];
      if (p.on_zero_locus) continue;
      std::vector<ExtRational> c(g.roots.size());
      ExtRational best = ex(0);
      for (std::size_t z = 0; z < g.roots.size(); ++z) {
        c[z] = contact(p.series, g.roots[z].series);
        best = max(best, c[z]);
      }
      require(best == p.delta, std::string(s) + ": max contact differs from delta");
      bool found = false;
      for (std::size_t a = 0; a < g.roots.size() && !found; ++a)
        for (std::size_t b = a + 1; b < g.roots.size() && !found; ++b)
          if (c[a] == best && c[b] == best && contact(g.roots[a].series, g.roots[b].series) == best &&
              g.tree.lowest_common_bar(a, b) == p.bar)
            found = true;
      require(found, std::string(s) + ": no root pair for polar arc " + std::to_string(i));
      ++arcs;
    }
  }
  return std::to_string(arcs) + " polar arcs over " + std::to_string(corpus().size()) + " germs";
}

// multiplicity of x = a*y in the initial form, by derivatives of f_m(x, 1) at a
int cone_multiplicity(const BivarPoly& f, const TowerElement& a) {
  BivarPoly fm = f.initial_form();
  std::map<int, GaussianRational> p;
  for (const auto& [key, c] : fm.terms()) p[key.first] += c;
  for (int k = 0;; ++k) {
    TowerElement v(0);
    for (const auto& [i, c] : p) v += TowerElement(c) * a.pow(i);
    if (!v.is_zero()) return k;
    std::map<int, GaussianRational> d;
    for (const auto& [i, c] : p)
      if (i > 0) d[i - 1] += c * GaussianRational(i);
    p = d;
  }
}

std::string criterion6() {
  std::set<std::size_t> rs;
  int germs = 0;
  for (const char* s : corpus()) {
    const auto& g = analysed(s);
    std::set<std::string> with_arc, repeated;
    std::size_t r = g.lines.size();
    for (const auto& l : g.lines) {
      int mult = cone_multiplicity(g.f, l.slope);
      require(mult == l.multiplicity, std::string(s) + ": line multiplicity");
      if (mult >= 2) repeated.insert(l.slope.str());
    }
    std::int64_t nontangential = 0;
    for (const auto& p : g.polars) {
      if (p.on_zero_locus) continue;
      ExtRational best = ex(0);
      for (const auto& z : g.roots) best = max(best, contact(p.series, z.series));
      TowerElement slope = p.series.has_terms() && p.series.terms().front().exponent == Exponent(1)
                               ? p.series.terms().front().coeff
                               : TowerElement(0);
      if (best > ex(1))
        with_arc.insert(slope.str());
      else
        nontangential += p.multiplicity * p.ramification;
    }
    require(with_arc == repeated, std::string(s) + ": tangential arcs do not match repeated lines");
    require(nontangential == static_cast<std::int64_t>(r) - 1,
            std::string(s) + ": " + std::to_string(nontangential) + " non-tangential arcs, r = " + std::to_string(r));
    require(nontangential_count(g) == nontangential, std::string(s) + ": engine count");
    rs.insert(r);
    ++germs;
  }
  require(rs.count(1) && rs.count(2) && rs.count(3), "corpus lacks r = 1, 2 or 3");
  require(analysed("x*y*(x+y)").nontangential.size() == 2, "xy(x+y)");
  return std::to_string(germs) + " germs, r in {1,2,3,4}";
}

BivarPoly compose_linear(const BivarPoly& f, long a, long b, long c, long d) {
  return f.compose(BivarPoly::monomial(a, 1, 0) + BivarPoly::monomial(b, 0, 1),
                   BivarPoly::monomial(c, 1, 0) + BivarPoly::monomial(d, 0, 1));
}

std::string criterion7() {
  std::mt19937_64 rng(7);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  AnalysisOptions fast;
  fast.verify_gradient_degree = false;
  int maps = 0;
  for (const char* s : {kFig1, kEx1, kEx2}) {
    const auto& g = analysed(s);
    const BivarPoly f = parse_polynomial(s);
    auto ts = topo_signature(g);
    auto ls = lipschitz_signature(g);
    auto same = [&](const BivarPoly& h, const std::string& what) {
      auto a = analyze(h, fast);
      require(topo_signature(a) == ts, std::string(s) + ": topological signature changed under " + what);
      require(lipschitz_signature(a) == ls, std::string(s) + ": lipschitz signature changed under " + what);
      ++maps;
    };
    for (int n = 0; n < 20;) {
      long a = pick(-3, 3), b = pick(-3, 3), c = pick(-3, 3), d = pick(-3, 3);
      if (a * d - b * c == 0) continue;
      std::ostringstream w;
      w << "(" << a << "x+" << b << "y, " << c << "x+" << d << "y)";
      same(compose_linear(f, a, b, c, d), w.str());
      ++n;
    }
    for (int n = 0; n < 4; ++n) {
      long p = pick(-3, 3), q = pick(-2, 2);
      BivarPoly X = BivarPoly::x() + BivarPoly::monomial(p, 0, 2) + BivarPoly::monomial(q, 0, 3);
      std::ostringstream w;
      w << "(x+" << p << "y^2+" << q << "y^3, y)";
      same(f.compose(X, BivarPoly::y()), w.str());
    }
    for (long c : {2L, -3L}) {
      AnalysisOptions o = fast;
      o.base_tower = &g.tower;
      o.context = g.context;
      auto h = analyze(f.compose(BivarPoly::x(), BivarPoly::monomial(c, 0, 1)), o);
      require(topo_signature(h) == ts, std::string(s) + ": signature changed under (x, cy)");
      require(hp_scaling_holds(g, h, TowerElement(c)), std::string(s) + ": a_h not scaled by c^h for c = " + std::to_string(c));
      require(!hp_scaling_holds(g, h, TowerElement(c + 5)), std::string(s) + ": scaling test accepts a wrong constant");
      require(compare_lipschitz(g, h).compatible, std::string(s) + ": compare_lipschitz under (x, cy)");
    }
  }
  return std::to_string(maps) + " transformed germs, HP scaling under (x, cy) for c = 2, -3";
}

std::string criterion8() {
  PuiseuxSeries zero;
  auto f = parse_polynomial("x^2 - y^3");
  require(gradient_degree(f, zero, ex(3)) == ex(2), "x^2-y^3");
  require(analysed("x^2 - y^3").polars.at(0).d_gr == ex(2), "x^2-y^3 via analysis");
  require(formal_gradient_order(f, zero, Exponent(2)) == ex(2), "x^2-y^3 formal");
  for (int k = 2; k <= 6; ++k) {
    std::string s = "x^2 - y^" + std::to_string(2 * k);
    auto fk = parse_polynomial(s);
    auto g = analyze(fk);
    ExtRational d = ex(2 * k - 1), target = ex(2 * k - 1);
    require(g.polars.at(0).d_gr == d, s + ": d_gr " + g.polars[0].d_gr.str());
    // formal oracle: generic order reaches h-1 at q = d and not before
    require(formal_gradient_order(fk, g.polars[0].series, d.value()) == target, s + ": formal at d");
    require(formal_gradient_order(fk, g.polars[0].series, d.value() - Exponent(1, 3)) < target, s + ": formal below d");
  }
  const auto& z = analysed("x^2");
  z.polars.size();
  auto g0 = analyze(parse_polynomial("x^2"));
  require(g0.polars.size() == 1 && g0.polars[0].d_gr.is_infinite(), "x^2 gradient degree");
  // formal oracle on every paper arc
  int arcs = 0;
  for (const char* s : {kFig1, kEx1, kEx2}) {
    const auto& g = analysed(s);
    for (const auto& p : g.polars) {
      ExtRational target = ExtRational(p.h.value() - Exponent(1));
      Exponent d = p.d_gr.value();
      Exponent below = d - std::min(Exponent(1, 100), d / Exponent(2));
      require(formal_gradient_order(g.f, p.series, d, target + ex(1)) == target, std::string(s) + ": formal at d_gr");
      require(formal_gradient_order(g.f, p.series, below, target + ex(1)) < target, std::string(s) + ": formal below d_gr");
      ++arcs;
    }
  }
  return "x^2-y^3 -> 2, x^2-y^(2k) -> 2k-1 (k=2..6), x^2 -> inf, " + std::to_string(arcs) + " paper arcs confirmed";
}

std::string criterion9() {
  int arcs = 0;
  for (const char* s : corpus()) {
    const auto& g = analysed(s);
    BivarPoly fy = g.f.partial_y();
    std::set<Exponent> q;
    for (const auto& p : g.polars) {
      if (p.on_zero_locus) continue;
      ExtRational h = substitute(g.f, p.series, p.h + ex(1)).ord();
      require(h == p.h, std::string(s) + ": h");
      ExtRational o = substitute(fy, p.series, p.h + ex(1)).ord();
      require(o == ExtRational(p.h.value() - Exponent(1)), std::string(s) + ": ord f_y = " + o.str() + ", h = " + p.h.str());
      q.insert(p.h.value());
      ++arcs;
    }
    if (q.empty()) continue;
    Exponent mq = *q.rbegin();
    require(g.l0 == mq - Exponent(1), std::string(s) + ": l0");
    require(g.rho0 == (mq - Exponent(1)) / mq, std::string(s) + ": rho0");
    Exponent best(0);
    for (const auto& L : g.per_line)
      for (const auto& [d, rho] : L.partial) best = std::max(best, rho);
    if (!g.nontangential.empty()) best = std::max(best, Exponent(g.m - 1, g.m));
    require(g.rho0 == best, std::string(s) + ": rho0 is not the max of the partial exponents");
  }
  return std::to_string(arcs) + " polar arcs over " + std::to_string(corpus().size()) + " germs";
}

std::string discrete(const GermAnalysis& g) {
  std::ostringstream o;
  o << g.m << "|" << g.milnor.str() << "|" << (g.l0 ? exponent_str(*g.l0) : "-") << "|"
    << (g.rho0 ? exponent_str(*g.rho0) : "-") << "|" << g.tree.canonical_encoding() << "\n";
  for (const auto& p : g.polars)
    o << p.delta.str() << "," << p.h.str() << "," << p.line << "," << p.bar << "," << p.d_gr.str() << ","
      << (p.a_h ? p.a_h->str() : "-") << "," << p.ord_fy.str() << "," << p.multiplicity << "\n";
  for (const auto& c : g.clusters) o << cluster_key_str(g, c) << c.members.size() << "\n";
  for (const auto& c : g.canyons) o << c.degree.str() << "," << c.h.str() << "," << c.members.size() << "\n";
  for (const auto& c : g.canyon_clusters) {
    o << c.line << "," << exponent_str(c.degree) << "," << c.bar << ":";
    for (const auto& w : c.omega)
      for (const auto& e : w) o << exponent_str(e) << " ";
    o << "\n";
  }
  for (const auto& L : g.per_line) {
    o << exponent_str(L.milnor) << ";";
    for (const auto& [d, rho] : L.partial) o << exponent_str(d) << "=" << exponent_str(rho) << " ";
    o << "\n";
  }
  o << topo_signature(g).str() << "\n" << lipschitz_signature(g).str() << "\n";
  return o.str();
}

std::string criterion10() {
  int germs = 0;
  for (const char* s : corpus()) {
    const auto& g = analysed(s);
    AnalysisOptions o;
    o.margin = g.margin * Exponent(2);
    auto d = analyze(parse_polynomial(s), o);
    require(discrete(d) == discrete(g), std::string(s) + ": discrete values change with margin " + exponent_str(o.margin));
    auto again = analyze(parse_polynomial(s));
    require(report_structured(again) == report_structured(g), std::string(s) + ": structured report not reproducible");
    require(report_text(again) == report_text(g), std::string(s) + ": text report not reproducible");
    ++germs;
  }
  return std::to_string(germs) + " germs stable under doubled margin, reports byte-identical";
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

int main() {
  struct Criterion {
    int n;
    const char* title;
    std::function<std::string()> run;
    double limit;  // seconds, 0 = none
  };
  const std::vector<Criterion> all = {
      {1, "two-bar example: roots, polar arcs, bars", criterion1, 5},
      {2, "example with equal h and different delta", criterion2, 30},
      {3, "example with equal delta and different h", criterion3, 60},
      {4, "Milnor number against resultant oracle", criterion4, 60},
      {5, "root pairs realise the contact equalities", criterion5, 0},
      {6, "tangential arcs and non-tangential count", criterion6, 0},
      {7, "invariants transported by coordinate changes", criterion7, 0},
      {8, "gradient degree spot checks", criterion8, 0},
      {9, "chain rule and exponent consistency", criterion9, 0},
      {10, "stability under doubled margin, determinism", criterion10, 0},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.msg;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double t = seconds_since(t0);
    if (ok && c.limit > 0 && t >= c.limit) {
      ok = false;
      detail += " (too slow)";
    }
    if (!ok) ++failed;
    std::printf("criterion %2d %s  %s: %s [%.2fs%s]\n", c.n, ok ? "PASS" : "FAIL", c.title, detail.c_str(), t,
                c.limit > 0 ? (" / limit " + std::to_string(static_cast<int>(c.limit)) + "s").c_str() : "");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
