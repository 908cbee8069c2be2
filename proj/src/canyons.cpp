#include "polarclust/canyons.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

namespace polarclust {

namespace {

// Series in y whose coefficients are polynomials in a formal parameter u.
struct ParamSeries {
  std::map<Exponent, ParametricPolynomial> terms;
  ExtRational omega = ExtRational::infinity();

  ExtRational lower() const { return terms.empty() ? omega : ExtRational(terms.begin()->first); }
  void clip() {
    if (omega.is_infinite()) return;
    terms.erase(terms.lower_bound(omega.value()), terms.end());
  }
};

ParamSeries add(const ParamSeries& a, const ParamSeries& b) {
  ParamSeries r = a;
  r.omega = min(a.omega, b.omega);
  for (const auto& [e, p] : b.terms) r.terms[e] = r.terms[e] + p;
  r.clip();
  return r;
}

ParamSeries mul(const ParamSeries& a, const ParamSeries& b) {
  ParamSeries r;
  r.omega = min(a.omega + b.lower(), b.omega + a.lower());
  for (const auto& [ea, pa] : a.terms)
    for (const auto& [eb, pb] : b.terms) {
      Exponent e = ea + eb;
      if (ExtRational(e) < r.omega) r.terms[e] = r.terms[e] + pa * pb;
    }
  return r;
}

ExtRational param_ord(const ParamSeries& s) {
  for (const auto& [e, p] : s.terms)
    if (!p.is_zero()) return e;
  if (s.omega.is_finite()) throw Unresolved("formal substitution truncated below the order");
  return ExtRational::infinity();
}

ExtRational param_order_along(const BivarPoly& p, const ParamSeries& x, const ExtRational& limit) {
  XYPoly rows = p.to_xy();
  ParamSeries acc;
  for (std::size_t k = rows.size(); k-- > 0;) {
    ParamSeries c;
    c.omega = limit;
    for (std::size_t j = 0; j < rows[k].coeffs().size(); ++j)
      if (!rows[k].coeffs()[j].is_zero())
        c.terms[Exponent(static_cast<std::int64_t>(j))] = ParametricPolynomial::constant(TowerElement(rows[k].coeffs()[j]));
    c.clip();
    acc = add(mul(acc, x), c);
  }
  return param_ord(acc);
}

using HPTriple = std::tuple<TowerElement, TowerElement, Exponent>;  // a_h(f), a_h(g), h
using LinePredicate = std::function<bool(const std::vector<HPTriple>&)>;

std::map<std::size_t, std::vector<Exponent>> omega_of(const GermAnalysis& g) {
  std::map<std::size_t, std::vector<Exponent>> out;
  for (const auto& cl : g.canyon_clusters)
    for (std::size_t k = 0; k < cl.canyons.size(); ++k) out[cl.canyons[k]] = cl.omega[k];
  return out;
}

std::string omega_str(const std::vector<Exponent>& w) {
  std::string s = "{";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + exponent_str(w[k]);
  return s + "}";
}

bool in_c(const Canyon& c) {
  return c.degree.is_finite() && c.degree > ExtRational(1) && c.line >= 0 && c.a_h.has_value();
}

// Canyons of C_k keyed by their discrete data.
struct LineCanyons {
  int r = 0;
  std::vector<std::pair<std::string, std::size_t>> canyons;  // sorted by key
  std::string descriptor() const {
    std::string s = "r=" + std::to_string(r) + "[";
    for (std::size_t k = 0; k < canyons.size(); ++k) s += (k ? ";" : "") + canyons[k].first;
    return s + "]";
  }
};

std::vector<LineCanyons> line_canyons(const GermAnalysis& g) {
  std::vector<LineCanyons> out(g.lines.size());
  for (std::size_t k = 0; k < g.lines.size(); ++k) out[k].r = g.lines[k].multiplicity;
  auto omegas = omega_of(g);
  for (std::size_t c = 0; c < g.canyons.size(); ++c) {
    const auto& cy = g.canyons[c];
    if (!in_c(cy)) continue;
    std::string key = "(" + cy.degree.str() + "," + cy.h.str() + "," + (cy.bar >= 0 ? g.tree.bar_code(cy.bar) : "-") + "," +
                      omega_str(omegas[c]) + ")";
    out[static_cast<std::size_t>(cy.line)].canyons.emplace_back(key, c);
  }
  for (auto& l : out) std::stable_sort(l.canyons.begin(), l.canyons.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Some bijection between equal-key canyons of the two lines satisfies pred.
bool line_pair_feasible(const GermAnalysis& f, const LineCanyons& lf, const GermAnalysis& g, const LineCanyons& lg,
                        const LinePredicate& pred) {
  if (lf.descriptor() != lg.descriptor()) return false;
  // group boundaries
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t a = 0; a < lf.canyons.size();) {
    std::size_t b = a;
    while (b < lf.canyons.size() && lf.canyons[b].first == lf.canyons[a].first) ++b;
    groups.emplace_back(a, b);
    a = b;
  }
  std::vector<std::size_t> perm(lg.canyons.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t gi) -> bool {
    if (gi == groups.size()) {
      std::vector<HPTriple> triples;
      for (std::size_t k = 0; k < perm.size(); ++k) {
        const auto& cf = f.canyons[lf.canyons[k].second];
        const auto& cg = g.canyons[lg.canyons[perm[k]].second];
        triples.emplace_back(*cf.a_h, *cg.a_h, cf.h.value());
      }
      return pred(triples);
    }
    auto [a, b] = groups[gi];
    std::sort(perm.begin() + static_cast<long>(a), perm.begin() + static_cast<long>(b));
    do {
      if (rec(gi + 1)) return true;
    } while (std::next_permutation(perm.begin() + static_cast<long>(a), perm.begin() + static_cast<long>(b)));
    return false;
  };
  return rec(0);
}

bool lines_feasible(const GermAnalysis& f, const GermAnalysis& g, const LinePredicate& pred,
                    std::vector<int>* assignment = nullptr) {
  auto lf = line_canyons(f), lg = line_canyons(g);
  if (lf.size() != lg.size()) return false;
  const std::size_t n = lf.size();
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ok[a][b] = line_pair_feasible(f, lf[a], g, lg[b], pred);
  std::vector<int> match(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t a) -> bool {
    if (a == n) return true;
    for (std::size_t b = 0; b < n; ++b) {
      if (used[b] || !ok[a][b]) continue;
      used[b] = true;
      match[a] = static_cast<int>(b);
      if (rec(a + 1)) return true;
      used[b] = false;
    }
    return false;
  };
  bool found = rec(0);
  if (found && assignment) *assignment = match;
  return found;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

TowerElement power(const TowerElement& a, std::int64_t e) {
  if (e >= 0) return a.pow(e);
  return a.inverse().pow(-e);
}

// Is there z with z^(h_i*L) = a_g/a_f for all i?  Returns z^gcd when so.
std::optional<std::pair<TowerElement, Exponent>> scaling_constant(const std::vector<HPTriple>& t) {
  if (t.empty()) return std::pair<TowerElement, Exponent>{TowerElement(1), Exponent(1)};
  std::int64_t L = 1;
  for (const auto& [af, ag, h] : t) L = lcm64(L, h.denominator());
  std::vector<std::int64_t> e;
  std::vector<TowerElement> r;
  for (const auto& [af, ag, h] : t) {
    e.push_back(h.numerator() * (L / h.denominator()));
    r.push_back(ag / af);
  }
  // Bezout coefficients for gcd(e).
  std::int64_t g = e[0];
  std::vector<std::int64_t> s{1};
  for (std::size_t k = 1; k < e.size(); ++k) {
    std::int64_t old_r = g, cur_r = e[k], old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
    while (cur_r != 0) {
      std::int64_t q = old_r / cur_r;
      std::tie(old_r, cur_r) = std::make_pair(cur_r, old_r - q * cur_r);
      std::tie(old_s, cur_s) = std::make_pair(cur_s, old_s - q * cur_s);
      std::tie(old_t, cur_t) = std::make_pair(cur_t, old_t - q * cur_t);
    }
    for (auto& x : s) x *= old_s;
    s.push_back(old_t);
    g = old_r;
  }
  TowerElement R(1);
  for (std::size_t k = 0; k < r.size(); ++k) R = R * power(r[k], s[k]);
  for (std::size_t k = 0; k < r.size(); ++k)
    if (!(power(R, e[k] / g) - r[k]).is_zero()) return std::nullopt;
  return std::pair<TowerElement, Exponent>{R, Exponent(g, L)};
}

}  // namespace

ExtRational gradient_degree(const BivarPoly& f, const PuiseuxSeries& gamma, const ExtRational& h) {
  if (h.is_infinite()) return ExtRational::infinity();
  const Exponent target = h.value() - Exponent(1);
  // Candidates (target - ord b_i)/i over the Taylor coefficients b_i of f_x
  // and f_y at gamma. b_i only matters when its order is below
  // target - i*best, so each one is computed to that precision.
  const XYPoly parts[2] = {f.partial_x().to_xy(), f.partial_y().to_xy()};
  Exponent best(0);
  bool any = false;
  const std::size_t n = std::max(parts[0].size(), parts[1].size());
  for (std::size_t i = 1; i < n; ++i) {
    const Exponent ii(static_cast<std::int64_t>(i));
    for (const auto& p : parts) {
      if (i >= p.size()) continue;
      const Exponent limit = target - ii * best;
      if (limit <= Exponent(0)) continue;
      // (1/i!) d^i/dx^i
      BivarPoly d;
      mpz_class binom = 1;
      for (std::size_t k = i; k < p.size(); ++k) {
        if (k > i) binom = binom * static_cast<unsigned long>(k) / static_cast<unsigned long>(k - i);
        for (std::size_t j = 0; j < p[k].coeffs().size(); ++j)
          if (!p[k].coeffs()[j].is_zero())
            d.add_term(static_cast<int>(k - i), static_cast<int>(j), p[k].coeffs()[j] * GaussianRational(mpq_class(binom)));
      }
      PuiseuxSeries b = substitute(d, gamma, limit);
      if (b.has_terms()) {
        best = std::max(best, (target - b.terms().front().exponent) / ii);
        any = true;
      } else if (b.omega() < ExtRational(limit)) {
        throw Unresolved("gradient degree: Taylor coefficient hidden by truncation");
      }
    }
    if (target - ii * best <= Exponent(0) && any) break;
  }
  return best;
}

ExtRational formal_gradient_order(const BivarPoly& f, const PuiseuxSeries& gamma, const Exponent& q,
                                  const ExtRational& limit) {
  ParamSeries x;
  x.omega = min(gamma.omega(), limit);
  for (const auto& t : gamma.terms()) x.terms[t.exponent] = ParametricPolynomial::constant(t.coeff);
  x.terms[q] = x.terms[q] + ParametricPolynomial::u_power(TowerElement(1), 1);
  x.clip();
  return min(param_order_along(f.partial_x(), x, limit), param_order_along(f.partial_y(), x, limit));
}

std::vector<Canyon> group_canyons(const GermAnalysis& g) {
  const std::size_t n = g.polars.size();
  std::vector<int> owner(n, -1);
  std::vector<Canyon> out;
  for (std::size_t a = 0; a < n; ++a) {
    if (owner[a] >= 0) continue;
    const auto& pa = g.polars[a];
    Canyon c;
    c.generator = a;
    c.degree = pa.d_gr;
    c.representative = pa.d_gr.is_finite() ? pa.series.truncate(pa.d_gr) : pa.series;
    c.h = pa.h;
    c.a_h = pa.a_h;
    c.line = pa.on_zero_locus ? -1 : pa.line;
    c.bar = pa.bar;
    c.members.push_back(a);
    owner[a] = static_cast<int>(out.size());
    if (!pa.on_zero_locus) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const auto& pb = g.polars[b];
        if (owner[b] >= 0 || pb.on_zero_locus || pb.d_gr != pa.d_gr) continue;
        if (g.polar_contact[a][b] >= pa.d_gr) {
          owner[b] = static_cast<int>(out.size());
          c.members.push_back(b);
        }
      }
    }
    for (std::size_t b : c.members) {
      const auto& ab = g.polars[b].a_h;
      if (c.a_h && (!ab || !(*ab - *c.a_h).is_zero())) c.a_h.reset();
    }
    out.push_back(std::move(c));
  }
  return out;
}

Exponent canyon_contact(const Canyon& a, const Canyon& b) {
  if (&a == &b || a.generator == b.generator) throw SameCanyon();
  ExtRational c = contact(a.representative, b.representative);
  if (c.is_infinite()) throw SameCanyon();
  return c.value();
}

std::vector<CanyonCluster> canyon_clusters(const GermAnalysis& g) {
  using Key = std::tuple<int, Exponent, int>;
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < g.canyons.size(); ++c) {
    const auto& cy = g.canyons[c];
    if (!in_c(cy)) continue;
    groups[{cy.line, cy.degree.value(), cy.bar}].push_back(c);
  }
  std::vector<CanyonCluster> out;
  for (auto& [key, members] : groups) {
    CanyonCluster cl;
    cl.line = std::get<0>(key);
    cl.degree = std::get<1>(key);
    cl.bar = std::get<2>(key);
    cl.canyons = members;
    for (std::size_t a : members) {
      std::vector<Exponent> w;
      for (std::size_t b : members)
        if (a != b) w.push_back(canyon_contact(g.canyons[a], g.canyons[b]));
      std::sort(w.begin(), w.end());
      cl.omega.push_back(std::move(w));
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      bool placed = false;
      for (auto& cls : cl.omega_classes)
        if (cl.omega[cls.front()] == cl.omega[k]) {
          cls.push_back(k);
          placed = true;
          break;
        }
      if (!placed) cl.omega_classes.push_back({k});
    }
    out.push_back(std::move(cl));
  }
  return out;
}

std::vector<HPPair> hp_invariants(const GermAnalysis& g) {
  std::vector<HPPair> out;
  for (const auto& c : g.canyons) out.push_back({c.degree, c.h, c.a_h});
  return out;
}

std::string LipschitzSignature::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < lines.size(); ++k) s += (k ? ";" : "") + lines[k];
  return s + "]";
}

LipschitzSignature lipschitz_signature(const GermAnalysis& g) {
  LipschitzSignature s;
  for (const auto& l : line_canyons(g)) s.lines.push_back(l.descriptor());
  std::sort(s.lines.begin(), s.lines.end());
  return s;
}

Verdict compare_lipschitz(const GermAnalysis& f, const GermAnalysis& g) {
  Verdict v = compare_topo(f, g);
  if (!v.compatible) return v;
  v.notes.clear();
  auto sf = lipschitz_signature(f), sg = lipschitz_signature(g);
  if (!(sf == sg)) {
    v.compatible = false;
    v.witness = "canyon data differ: " + sf.str() + " vs " + sg.str();
    return v;
  }
  const bool same_field = f.tower.depth() == 0 || g.tower.contains(f.tower.top());
  if (!same_field) {
    v.notes.push_back("HP check skipped: the germs were analysed over unrelated fields");
    return v;
  }
  std::vector<int> assignment;
  auto pred = [&](const std::vector<HPTriple>& t) { return scaling_constant(t).has_value(); };
  if (!lines_feasible(f, g, pred, &assignment)) {
    v.compatible = false;
    v.witness = "HP invariants: no per-line constant c with a_h(g) = c^h * a_h(f) on matched canyons";
    return v;
  }
  v.notes.push_back("discrete canyon data and HP invariants are compatible");
  return v;
}

bool hp_scaling_holds(const GermAnalysis& f, const GermAnalysis& g, const TowerElement& c) {
  auto pred = [&](const std::vector<HPTriple>& t) {
    for (const auto& [af, ag, h] : t) {
      const std::int64_t p = h.numerator(), q = h.denominator();
      if (!(ag.pow(q) - power(c, p) * af.pow(q)).is_zero()) return false;
    }
    return true;
  };
  return lines_feasible(f, g, pred);
}

}  // namespace polarclust
