#include "polarclust/newton_puiseux.hpp"

#include <algorithm>

namespace polarclust {

namespace {

using SeriesPoly = std::vector<PuiseuxSeries>;

PuiseuxSeries mul_monomial(const PuiseuxSeries& s, const TowerElement& c, const Exponent& e) {
  std::vector<SeriesTerm> t;
  t.reserve(s.terms().size());
  for (const auto& term : s.terms()) t.push_back({term.exponent + e, term.coeff * c});
  return PuiseuxSeries(std::move(t), s.omega() + ExtRational(e));
}

// G(x + c*y^e), then drop terms of weight j + k*e >= cap.
SeriesPoly shift(SeriesPoly a, const TowerElement& c, const Exponent& e, const Exponent& cap) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k-- > i;) a[k] = a[k] + mul_monomial(a[k + 1], c, e);
  for (std::size_t k = 0; k < n; ++k) a[k] = a[k].truncate(cap - e * Exponent(static_cast<std::int64_t>(k)));
  while (!a.empty() && !a.back().has_terms() && a.back().omega() <= ExtRational(0)) a.pop_back();
  return a;
}

}  // namespace

struct RootExpander::Node {
  SeriesPoly g;
  std::vector<SeriesTerm> prefix;
  Exponent e_cur{0};
  int mu = 0;
};

RootExpander::RootExpander(XYPoly factor, FieldContext* ctx)
    : factor_(std::move(factor)), ctx_(ctx), mu_(origin_root_count(factor_)) {
  if (mu_ < 0) throw AlgebraError("factor has no term free of y");
}

std::vector<PuiseuxSeries> RootExpander::expand(Tower& tower, const Exponent& precision, int max_refinements) {
  Exponent cap = precision * Exponent(2);
  for (int round = 0; round <= max_refinements + 4; ++round) {
    std::vector<PuiseuxSeries> out;
    Tower t = tower;
    if (run(t, precision, cap, out)) {
      tower = t;
      return out;
    }
    cap *= Exponent(2);
  }
  throw Unresolved("roots not separated within the working precision");
}

bool RootExpander::run(Tower& tower, const Exponent& precision, const Exponent& cap, std::vector<PuiseuxSeries>& out) {
  if (mu_ == 0) return true;
  Node root;
  for (const auto& row : factor_) {
    std::vector<SeriesTerm> t;
    for (std::size_t j = 0; j < row.coeffs().size(); ++j)
      if (!row.coeffs()[j].is_zero()) t.push_back({Exponent(static_cast<std::int64_t>(j)), TowerElement(row.coeffs()[j])});
    root.g.emplace_back(std::move(t), cap);
  }
  root.mu = mu_;
  std::vector<Node> stack{std::move(root)};

  auto leaf_from = [&](const Node& n, const ExtRational& omega) {
    out.emplace_back(n.prefix, min(omega, ExtRational(precision)));
  };

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    auto known = [&](int i) { return i < static_cast<int>(node.g.size()) && node.g[static_cast<std::size_t>(i)].has_terms(); };
    auto ord_at = [&](int i) { return node.g[static_cast<std::size_t>(i)].terms().front().exponent; };

    if (node.mu == 1) {
      // Separated root: one Newton step per term.
      for (;;) {
        if (!known(1)) return false;
        Exponent j1 = ord_at(1);
        if (!known(0)) {
          ExtRational omega = node.g.empty() ? ExtRational(cap) : node.g[0].omega();
          if (omega.is_finite() && omega.value() - j1 < precision) return false;
          leaf_from(node, omega.is_finite() ? ExtRational(omega.value() - j1) : omega);
          break;
        }
        Exponent e = ord_at(0) - j1;
        if (e >= precision) {
          leaf_from(node, precision);
          break;
        }
        TowerElement c = -(node.g[0].leading_coeff() / node.g[1].leading_coeff());
        node.g = shift(std::move(node.g), c, e, cap);
        node.prefix.push_back({e, c});
        node.e_cur = e;
      }
      continue;
    }

    // Cluster of mu >= 2 roots of order > e_cur.
    if (!known(node.mu)) return false;
    int k0 = 0;
    while (k0 < node.mu && !known(k0)) ++k0;
    if (k0 >= 2) return false;
    if (k0 == 1) {
      // One root hidden below the cap: it agrees with the prefix that far.
      Exponent j1 = ord_at(1);
      ExtRational omega = node.g[0].omega();
      if (omega.is_finite() && omega.value() - j1 < precision) return false;
      leaf_from(node, omega.is_finite() ? ExtRational(omega.value() - j1) : omega);
    }
    std::vector<PolygonPoint> pts;
    for (int i = k0; i <= node.mu; ++i)
      if (known(i)) pts.push_back({i, ord_at(i)});
    NewtonPolygon np = polygon_from_points(pts);
    for (const auto& edge : np.edges) {
      const Exponent e = edge.coslope;
      const Exponent height = edge.left.j + e * Exponent(edge.left.i);
      if (height >= cap) return false;
      std::vector<TowerElement> face;
      for (int i = edge.left.i; i <= edge.right.i; ++i) {
        Exponent target = edge.left.j - e * Exponent(i - edge.left.i);
        TowerElement c;
        if (known(i) && ExtRational(target) < node.g[static_cast<std::size_t>(i)].omega() &&
            target >= ord_at(i)) {
          c = node.g[static_cast<std::size_t>(i)].coeff_at(target);
        }
        face.push_back(c);
      }
      auto [t, roots] = all_roots(tower, TowerPoly(face), ctx_);
      tower = t;
      for (const auto& [c, r] : roots) {
        Node child;
        child.g = shift(node.g, c, e, cap);
        child.prefix = node.prefix;
        child.prefix.push_back({e, c});
        child.e_cur = e;
        child.mu = r;
        stack.push_back(std::move(child));
      }
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const std::vector<RootLeaf>& leaves, Tower& tower,
                                                        FieldContext* ctx) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> used(leaves.size(), false);
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    if (used[a]) continue;
    used[a] = true;
    std::vector<std::size_t> cls{a};
    const std::int64_t n = leaves[a].series.ramification();
    if (n > 1) {
      ArcClass c{leaves[a].series, n, leaves[a].multiplicity};
      auto conj = conjugates(c, tower, ctx);
      for (std::size_t k = 1; k < conj.size(); ++k) {
        for (std::size_t b = 0; b < leaves.size(); ++b) {
          if (used[b] || leaves[b].factor != leaves[a].factor) continue;
          PuiseuxSeries d = conj[k] - leaves[b].series;
          if (!d.has_terms()) {
            used[b] = true;
            cls.push_back(b);
            break;
          }
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<ArcClass> puiseux_roots(const BivarPoly& f, Tower& tower, const Exponent& precision, FieldContext* ctx) {
  std::vector<RootLeaf> leaves;
  auto factors = xy_squarefree(f.to_xy());
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    RootExpander ex(factors[fi].first, ctx);
    for (auto& s : ex.expand(tower, precision)) leaves.push_back({std::move(s), factors[fi].second, static_cast<int>(fi)});
  }
  std::vector<ArcClass> out;
  for (const auto& cls : conjugacy_classes(leaves, tower, ctx)) {
    const auto& rep = leaves[cls.front()];
    out.push_back({rep.series, static_cast<std::int64_t>(cls.size()), rep.multiplicity});
  }
  return out;
}

}  // namespace polarclust
