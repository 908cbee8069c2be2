#pragma once

// Gradient degrees, gradient canyons, canyon clusters and HP invariants.

#include <optional>
#include <string>
#include <vector>

#include "polarclust/clusters.hpp"
#include "polarclust/germ.hpp"

namespace polarclust {

/// Gradient degree of a polar arc with h = ord f(gamma): the smallest q with
/// ord grad f(gamma + u*y^q, y) = h - 1 for generic u. Read off the Taylor
/// coefficients of f_x and f_y at gamma. Infinity when h is infinite.
ExtRational gradient_degree(const BivarPoly& f, const PuiseuxSeries& gamma, const ExtRational& h);

/// min(ord f_x, ord f_y) along x = gamma(y) + u*y^q with u a formal
/// parameter, by direct substitution. Orders at or beyond `limit` are not
/// resolved.
ExtRational formal_gradient_order(const BivarPoly& f, const PuiseuxSeries& gamma, const Exponent& q,
                                  const ExtRational& limit = ExtRational::infinity());

/// Canyons of the analysed germ (zero-locus arcs give canyons of degree inf).
std::vector<Canyon> group_canyons(const GermAnalysis& g);

/// Contact of two distinct canyons of one germ.
Exponent canyon_contact(const Canyon& a, const Canyon& b);

/// Clusters C_{k,d,B(h)} with contact sets; needs g.canyons.
std::vector<CanyonCluster> canyon_clusters(const GermAnalysis& g);

struct HPPair {
  ExtRational degree;
  ExtRational h;
  std::optional<TowerElement> a_h;
};
std::vector<HPPair> hp_invariants(const GermAnalysis& g);

/// Per tangent line, the sorted multiset of (d, h, bar code, omega) over
/// canyons of degree > 1.
struct LipschitzSignature {
  std::vector<std::string> lines;  // sorted
  std::string str() const;
  friend bool operator==(const LipschitzSignature& a, const LipschitzSignature& b) { return a.lines == b.lines; }
};
LipschitzSignature lipschitz_signature(const GermAnalysis& g);

/// Discrete Lipschitz data plus, when g was analysed in a continuation of
/// f's tower, the per-line scaling constant test on a_h.
Verdict compare_lipschitz(const GermAnalysis& f, const GermAnalysis& g);

/// True when some line matching and canyon matching gives
/// a_h(g) = c^h * a_h(f) for every matched canyon of degree > 1.
bool hp_scaling_holds(const GermAnalysis& f, const GermAnalysis& g, const TowerElement& c);

}  // namespace polarclust
