#include "polarclust/invariants.hpp"

#include <algorithm>

#include "polarclust/canyons.hpp"
#include "polarclust/clusters.hpp"

namespace polarclust {

namespace {

struct FactorSpec {
  XYPoly poly;
  int multiplicity = 1;
  bool zero_locus = false;
};

struct Factors {
  std::vector<FactorSpec> z, p;
};

// Squarefree factors of f and of f_x; a factor of f_x shared with f is split
// off, its roots lie on the zero locus.
Factors factorize(const BivarPoly& f) {
  Factors out;
  const XYPoly fxy = f.to_xy();
  for (auto& [P, k] : xy_squarefree(fxy)) out.z.push_back({P, k, false});
  for (auto& [P, k] : xy_squarefree(f.partial_x().to_xy())) {
    XYPoly A = xy_gcd(P, fxy);
    if (xy_degree(A) > 0) {
      XYPoly B = xy_exact_div(P, A);
      out.p.push_back({A, k, true});
      if (xy_degree(B) > 0) out.p.push_back({B, k, false});
    } else {
      out.p.push_back({P, k, false});
    }
  }
  return out;
}

struct Expansion {
  Tower tower;
  std::vector<TangentLine> lines;
  std::vector<RootLeaf> z, p;
  std::vector<bool> p_zero;
};

Expansion expand_all(const BivarPoly& f, const Factors& fac, const Exponent& T, const Tower& base, FieldContext* ctx) {
  Expansion e;
  e.tower = base;
  e.lines = tangent_cone(f, e.tower, ctx);
  for (std::size_t i = 0; i < fac.z.size(); ++i) {
    RootExpander ex(fac.z[i].poly, ctx);
    for (auto& s : ex.expand(e.tower, T)) e.z.push_back({std::move(s), fac.z[i].multiplicity, static_cast<int>(i)});
  }
  for (std::size_t i = 0; i < fac.p.size(); ++i) {
    RootExpander ex(fac.p[i].poly, ctx);
    for (auto& s : ex.expand(e.tower, T)) {
      e.p.push_back({std::move(s), fac.p[i].multiplicity, static_cast<int>(i)});
      e.p_zero.push_back(fac.p[i].zero_locus);
    }
  }
  return e;
}

// Largest contact or polar order the invariants need, or nothing when the
// expansion is too short to tell.
std::optional<Exponent> required_order(const Expansion& e) {
  Exponent need(1);
  try {
    for (std::size_t a = 0; a < e.z.size(); ++a)
      for (std::size_t b = a + 1; b < e.z.size(); ++b) {
        ExtRational c = contact(e.z[a].series, e.z[b].series);
        if (c.is_infinite()) throw InvariantViolation("two roots of f coincide");
        need = std::max(need, c.value());
      }
    for (std::size_t k = 0; k < e.p.size(); ++k) {
      if (e.p_zero[k]) continue;
      Exponent h(0);
      for (const auto& z : e.z) {
        ExtRational c = contact(e.p[k].series, z.series);
        if (c.is_infinite()) throw InvariantViolation("polar arc off the zero locus is a root of f");
        need = std::max(need, c.value());
        h += Exponent(z.multiplicity) * c.value();
      }
      need = std::max(need, h);
    }
  } catch (const Unresolved&) {
    return std::nullopt;
  }
  return need;
}

int line_of(const PuiseuxSeries& s, const std::vector<TangentLine>& lines) {
  TowerElement c1 = s.coeff_at(Exponent(1));
  for (std::size_t k = 0; k < lines.size(); ++k)
    if ((c1 - lines[k].slope).is_zero()) return static_cast<int>(k);
  return -1;
}

void add_check(GermAnalysis& g, std::string name, bool ok, std::string detail = {}) {
  g.checks.push_back({std::move(name), ok, std::move(detail)});
}

void run_checks(GermAnalysis& g, const std::vector<std::vector<Exponent>>& zz, const AnalysisOptions& opt) {
  // root and polar counts
  std::int64_t nz = 0, np = 0;
  for (const auto& r : g.roots) nz += r.multiplicity;
  for (const auto& p : g.polars) np += p.multiplicity;
  add_check(g, "root count equals m", nz == g.m, std::to_string(nz) + " roots, m = " + std::to_string(g.m));
  add_check(g, "polar count equals m-1", np == g.m - 1, std::to_string(np) + " polar arcs");

  // dendrogram
  bool tree_ok = true;
  for (std::size_t a = 0; a < g.roots.size(); ++a)
    for (std::size_t b = a + 1; b < g.roots.size(); ++b) {
      int bar = g.tree.lowest_common_bar(a, b);
      if (bar < 0 || g.tree.bar(bar).height != zz[a][b]) tree_ok = false;
    }
  add_check(g, "tree heights equal root contacts", tree_ok);

  // per polar arc
  bool bar_ok = true, lemma_ok = true, chain_ok = true, nontan_ok = true;
  std::string lemma_detail;
  for (std::size_t k = 0; k < g.polars.size(); ++k) {
    const auto& p = g.polars[k];
    if (p.on_zero_locus) continue;
    if (p.bar < 0 || ExtRational(g.tree.bar(p.bar).height) != p.delta) bar_ok = false;
    bool found = false;
    if (p.bar >= 0) {
      const auto& below = g.tree.bar(p.bar).leaves_below;
      for (std::size_t i = 0; i < p.max_contact_roots.size() && !found; ++i)
        for (std::size_t j = i + 1; j < p.max_contact_roots.size() && !found; ++j) {
          std::size_t z1 = p.max_contact_roots[i], z2 = p.max_contact_roots[j];
          if (ExtRational(zz[z1][z2]) == p.delta && std::binary_search(below.begin(), below.end(), z1) &&
              std::binary_search(below.begin(), below.end(), z2))
            found = true;
        }
    }
    if (!found) {
      lemma_ok = false;
      lemma_detail += "arc " + std::to_string(k) + " ";
    }
    if (p.ord_fy != ExtRational(p.h.value() - Exponent(1))) chain_ok = false;
    if (p.line < 0 && (p.delta != ExtRational(1) || p.h != ExtRational(g.m))) nontan_ok = false;
  }
  add_check(g, "polar arcs grow on a bar of height delta", bar_ok);
  add_check(g, "two roots realise the contact equalities on each polar bar", lemma_ok, lemma_detail);
  add_check(g, "ord f_y along polar arcs equals h-1", chain_ok);
  add_check(g, "non-tangential arcs have delta=1 and h=m", nontan_ok);

  const auto r = static_cast<std::int64_t>(g.lines.size());
  add_check(g, "non-tangential polar count equals r-1", nontangential_count(g) == r - 1,
            std::to_string(nontangential_count(g)) + " vs r-1 = " + std::to_string(r - 1));

  bool fact2 = true;
  for (std::size_t k = 0; k < g.lines.size(); ++k) {
    bool has = false;
    for (const auto& p : g.polars)
      if (p.line == static_cast<int>(k) && p.delta > ExtRational(1)) has = true;
    if (has != (g.lines[k].multiplicity >= 2)) fact2 = false;
  }
  add_check(g, "tangential polar arcs exactly on repeated lines", fact2);

  if (g.l0) {
    ExtRational best = ExtRational(0);
    for (const auto& p : g.polars)
      if (!p.on_zero_locus) best = max(best, p.ord_fy);
    add_check(g, "largest ord f_y along polar arcs equals l0", best == ExtRational(*g.l0));
  }
  add_check(g, "Milnor sum is an integer", g.milnor_finite_part.denominator() == 1);

  // gradient degrees
  bool dgr_ok = true, formal_ok = true;
  int strict = 0, equal = 0;
  for (const auto& p : g.polars) {
    if (p.on_zero_locus) continue;
    if (p.d_gr < p.delta) dgr_ok = false;
    (p.d_gr > p.delta ? strict : equal)++;
    if (opt.verify_gradient_degree) {
      const Exponent d = p.d_gr.value(), target = p.h.value() - Exponent(1);
      const ExtRational lim(target + Exponent(1));
      if (formal_gradient_order(g.f, p.series, d, lim) != ExtRational(target)) formal_ok = false;
      Exponent eps = std::min(Exponent(1, 100), d / Exponent(2));
      if (d > Exponent(0) && !(formal_gradient_order(g.f, p.series, d - eps, lim) < ExtRational(target))) formal_ok = false;
    }
  }
  add_check(g, "gradient degree at least delta", dgr_ok,
            std::to_string(strict) + " strict, " + std::to_string(equal) + " equal");
  if (opt.verify_gradient_degree) add_check(g, "gradient degree confirmed by formal substitution", formal_ok);

  // canyons
  bool share = true, equiv = true, refine = true;
  for (std::size_t c = 0; c < g.canyons.size(); ++c) {
    const auto& cy = g.canyons[c];
    for (std::size_t a : cy.members) {
      const auto& pa = g.polars[a];
      if (cy.degree.is_finite() && cy.degree > ExtRational(1)) {
        if (pa.h != cy.h || !cy.a_h) share = false;
        if (pa.a_h && cy.a_h && !(*pa.a_h - *cy.a_h).is_zero()) share = false;
      }
      const auto& pg = g.polars[cy.generator];
      if (pa.line != pg.line || pa.delta != pg.delta || pa.bar != pg.bar) refine = false;
      for (std::size_t b : cy.members)
        if (a != b && g.polar_contact[a][b] < cy.degree) equiv = false;
    }
    for (std::size_t d = c + 1; d < g.canyons.size(); ++d) {
      const auto& other = g.canyons[d];
      if (other.degree != cy.degree || cy.degree.is_infinite()) continue;
      for (std::size_t a : cy.members)
        for (std::size_t b : other.members)
          if (g.polar_contact[a][b] >= cy.degree) equiv = false;
    }
  }
  add_check(g, "members of canyons of degree > 1 share h and a_h", share);
  add_check(g, "canyon grouping is an equivalence", equiv);
  add_check(g, "canyons refine polar clusters", refine);

  bool cc_ok = true;
  for (const auto& cl : g.canyon_clusters)
    for (const auto& w : cl.omega)
      for (const auto& x : w)
        if (!(x < cl.degree) || (cl.bar >= 0 && x < g.tree.bar(cl.bar).height)) cc_ok = false;
  add_check(g, "canyon contacts lie between bar height and degree", cc_ok);
}

GermAnalysis build(const BivarPoly& input, const BivarPoly& f, long lambda, const Factors& fac, const Exponent& need,
                   const Exponent& margin, const Tower& base, const std::shared_ptr<FieldContext>& ctx,
                   const AnalysisOptions& opt) {
  GermAnalysis g;
  g.input = input;
  g.f = f;
  g.shear = lambda;
  g.margin = margin;
  g.precision = need + margin;
  g.horizon = need + Exponent(1);
  g.context = ctx;
  g.m = f.order();

  Expansion e = expand_all(f, fac, g.precision, base, ctx.get());
  g.tower = e.tower;
  g.lines = e.lines;

  // roots of f
  g.root_branches = conjugacy_classes(e.z, g.tower, ctx.get());
  g.roots.resize(e.z.size());
  for (std::size_t c = 0; c < g.root_branches.size(); ++c)
    for (std::size_t l : g.root_branches[c])
      g.roots[l] = {e.z[l].series, e.z[l].multiplicity, static_cast<std::int64_t>(g.root_branches[c].size()), c,
                    line_of(e.z[l].series, g.lines)};
  const std::size_t nz = g.roots.size();
  std::vector<std::vector<Exponent>> zz(nz, std::vector<Exponent>(nz));
  for (std::size_t a = 0; a < nz; ++a)
    for (std::size_t b = a + 1; b < nz; ++b) {
      ExtRational c = contact(g.roots[a].series, g.roots[b].series);
      if (c.is_infinite()) throw InvariantViolation("two roots of f coincide");
      zz[a][b] = zz[b][a] = c.value();
    }
  std::vector<TreeLeafInfo> infos;
  for (const auto& r : g.roots) infos.push_back({r.multiplicity, r.ramification});
  g.tree = KuoLuTree::build(infos, [&](std::size_t a, std::size_t b) { return zz[a][b]; });

  // polar arcs
  g.polar_branches = conjugacy_classes(e.p, g.tower, ctx.get());
  g.polars.resize(e.p.size());
  const BivarPoly fy = f.partial_y();
  for (std::size_t c = 0; c < g.polar_branches.size(); ++c) {
    for (std::size_t l : g.polar_branches[c]) {
      PolarArc& p = g.polars[l];
      p.series = e.p[l].series;
      p.multiplicity = e.p[l].multiplicity;
      p.ramification = static_cast<std::int64_t>(g.polar_branches[c].size());
      p.branch = c;
      p.on_zero_locus = e.p_zero[l];
      if (p.on_zero_locus) {
        p.line = line_of(p.series, g.lines);
        continue;
      }
      Exponent delta(0), h(0);
      std::vector<Exponent> cs;
      for (const auto& z : g.roots) {
        Exponent cz = contact(p.series, z.series).value();
        cs.push_back(cz);
        delta = std::max(delta, cz);
        h += Exponent(z.multiplicity) * cz;
      }
      for (std::size_t z = 0; z < nz; ++z)
        if (cs[z] == delta) p.max_contact_roots.push_back(z);
      p.delta = delta;
      p.h = h;
      p.line = delta > Exponent(1) ? line_of(p.series, g.lines) : -1;
      if (delta > Exponent(1) && p.line < 0) throw InvariantViolation("tangential polar arc matches no tangent line");
      try {
        p.bar = g.tree.bar_of(p.max_contact_roots, delta);
      } catch (const NoSuchBar&) {
        p.bar = -1;
      }
      PuiseuxSeries along = substitute(f, p.series, h + Exponent(1));
      if (along.ord() != ExtRational(h)) throw InvariantViolation("ord f(gamma) disagrees with the sum of contacts");
      p.a_h = along.leading_coeff();
      p.ord_fy = substitute(fy, p.series, h).ord();
      p.d_gr = gradient_degree(f, p.series, p.h);
    }
  }
  const std::size_t np = g.polars.size();
  g.polar_contact.assign(np, std::vector<ExtRational>(np, ExtRational::infinity()));
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a + 1; b < np; ++b) {
      try {
        g.polar_contact[a][b] = g.polar_contact[b][a] = contact(g.polars[a].series, g.polars[b].series);
      } catch (const Unresolved&) {
        // agrees beyond the working precision
      }
    }

  // numeric invariants
  g.per_line.resize(g.lines.size());
  for (const auto& p : g.polars) {
    if (p.on_zero_locus) {
      g.non_isolated = true;
      continue;
    }
    const Exponent h = p.h.value();
    g.quotients[h] += p.multiplicity;
    g.milnor_finite_part += Exponent(p.multiplicity) * (h - Exponent(1));
    if (p.line >= 0) {
      auto& li = g.per_line[static_cast<std::size_t>(p.line)];
      li.q.insert(h);
      li.milnor += Exponent(p.multiplicity) * (h - Exponent(1));
    }
  }
  g.milnor = g.non_isolated ? ExtRational::infinity() : ExtRational(g.milnor_finite_part);
  g.empty_polar = g.quotients.empty();
  if (!g.empty_polar) {
    const Exponent qmax = g.quotients.rbegin()->first;
    g.l0 = qmax - Exponent(1);
    g.rho0 = (qmax - Exponent(1)) / qmax;
  }
  for (std::size_t k = 0; k < g.lines.size(); ++k) {
    auto& li = g.per_line[k];
    if (!li.q.empty()) li.rho0 = (*li.q.rbegin() - Exponent(1)) / *li.q.rbegin();
    for (const auto& [delta, members] : clusters_by_delta(g, static_cast<int>(k)))
      li.partial[delta] = partial_rho(g, static_cast<int>(k), delta);
  }

  g.clusters = cluster_partition(g);
  for (std::size_t k = 0; k < np; ++k)
    if (!g.polars[k].on_zero_locus && g.polars[k].line < 0) g.nontangential.push_back(k);

  g.canyons = group_canyons(g);
  g.canyon_clusters = canyon_clusters(g);

  run_checks(g, zz, opt);
  return g;
}

GermAnalysis run(const BivarPoly& input, const BivarPoly& f, long lambda, const Factors& fac, const AnalysisOptions& opt,
                 const std::shared_ptr<FieldContext>& ctx) {
  const Tower base = opt.base_tower ? *opt.base_tower : Tower();
  Exponent T(4);
  std::optional<Exponent> need;
  for (int k = 0; k <= opt.max_doublings && !need; ++k) {
    Expansion e = expand_all(f, fac, T, base, ctx.get());
    need = required_order(e);
    if (!need) T *= Exponent(2);
  }
  if (!need) throw Unresolved("root contacts not resolved up to y^" + exponent_str(T));
  Exponent margin = opt.margin;
  for (int attempt = 0;; ++attempt) {
    try {
      return build(input, f, lambda, fac, *need, margin, base, ctx, opt);
    } catch (const Unresolved&) {
      if (attempt >= 1 || margin <= Exponent(0)) throw;
      margin *= Exponent(2);
    }
  }
}

}  // namespace

std::vector<TangentLine> tangent_cone(const BivarPoly& f, Tower& tower, FieldContext* ctx) {
  const int m = f.order();
  std::vector<TowerElement> c;
  for (int i = 0; i <= m; ++i) c.emplace_back(f.coeff(i, m - i));
  auto [t, roots] = all_roots(tower, TowerPoly(c), ctx);
  tower = t;
  std::vector<TangentLine> out;
  for (const auto& [slope, mult] : roots) out.push_back({slope, mult});
  return out;
}

GermAnalysis analyze(const BivarPoly& input, const AnalysisOptions& opt) {
  if (input.is_zero()) throw InvalidInput("the zero polynomial is not a germ");
  if (!input.coeff(0, 0).is_zero()) throw InvalidInput("f(0,0) must vanish");
  auto ctx = opt.context ? opt.context : std::make_shared<FieldContext>();
  BivarPoly f;
  long lambda = 0;
  if (opt.shear) {
    lambda = *opt.shear;
    f = shear(input, GaussianRational(lambda));
    if (f.coeff(f.order(), 0).is_zero()) throw InvalidInput("f is not mini-regular in x after the requested shear");
  } else {
    std::tie(f, lambda) = mini_regularize(input);
  }
  const Factors fac = factorize(f);
  for (int attempt = 0;; ++attempt) {
    try {
      return run(input, f, lambda, fac, opt, ctx);
    } catch (const TowerSplit& s) {
      if (attempt >= opt.max_splits) throw AlgebraError("too many field splittings");
      ctx->record_split(s);
    }
  }
}

std::int64_t oracle_milnor(const BivarPoly& f) {
  for (long step = 0; step < 256; ++step) {
    // (x, y) -> (x + lambda*y, y + mu*x), invertible
    const long lambda = step % 16, mu = step / 16;
    if (lambda * mu == 1) continue;
    BivarPoly g = f.compose(BivarPoly::x() + BivarPoly::monomial(GaussianRational(lambda), 0, 1),
                            BivarPoly::y() + BivarPoly::monomial(GaussianRational(mu), 1, 0));
    XYPoly gx = g.partial_x().to_xy(), gy = g.partial_y().to_xy();
    if (gx.empty() || gy.empty()) throw NonIsolated("a partial derivative vanishes identically");
    if (gx.back().coeff(0).is_zero()) continue;
    // common zeros on y = 0 other than the origin would be counted
    std::vector<GaussianRational> ax, ay;
    for (const auto& row : gx) ax.push_back(row.coeff(0));
    for (const auto& row : gy) ay.push_back(row.coeff(0));
    YPoly common = YPoly::gcd(YPoly(ax), YPoly(ay));
    if (common.degree() > 0 && common.degree() != common.ord()) continue;
    YPoly res = xy_resultant(gx, gy);
    if (res.is_zero()) {
      XYPoly d = xy_gcd(gx, gy);
      if (d.empty() || d[0].coeff(0).is_zero()) throw NonIsolated("f_x and f_y share a component through the origin");
      gx = xy_exact_div(gx, d);
      gy = xy_exact_div(gy, d);
      res = xy_resultant(gx, gy);
      if (res.is_zero()) continue;
    }
    return res.ord();
  }
  throw AlgebraError("no admissible coordinate change found for the resultant");
}

}  // namespace polarclust
