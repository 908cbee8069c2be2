#pragma once

// Newton-Puiseux expansion of the roots through the origin of a squarefree
// factor in Q(i)[y][x]; conjugates come out as separate roots.

#include <cstdint>
#include <vector>

#include "polarclust/bivariate.hpp"
#include "polarclust/puiseux.hpp"

namespace polarclust {

struct TruncationPolicy {
  Exponent margin{1};      // extra exponent beyond the largest contact/order needed
  int max_refinements = 8;  // doublings of the precision before giving up
};

/// Expands the roots of one squarefree factor. The expansion is exact until
/// the roots separate; afterwards terms that cannot influence the roots below
/// the requested precision are dropped.
class RootExpander {
 public:
  RootExpander(XYPoly factor, FieldContext* ctx);

  /// Number of roots through the origin.
  int root_count() const { return mu_; }

  /// Every root known to at least y^precision. Extends `tower` as needed.
  std::vector<PuiseuxSeries> expand(Tower& tower, const Exponent& precision, int max_refinements = 8);

 private:
  struct Node;
  // false when the weight cap was too small
  bool run(Tower& tower, const Exponent& precision, const Exponent& cap, std::vector<PuiseuxSeries>& out);

  XYPoly factor_;
  FieldContext* ctx_;
  int mu_;
};

/// A root of f (or of f_x) with its multiplicity as a root.
struct RootLeaf {
  PuiseuxSeries series;
  int multiplicity = 1;
  int factor = 0;  // index of the squarefree factor it came from
};

/// Groups leaves into conjugacy classes: returns, per class, the leaf
/// indices (first is the representative).
std::vector<std::vector<std::size_t>> conjugacy_classes(const std::vector<RootLeaf>& leaves, Tower& tower,
                                                        FieldContext* ctx = nullptr);

/// All roots of a mini-regular germ through the origin, grouped into branch
/// classes, each known at least to y^precision.
std::vector<ArcClass> puiseux_roots(const BivarPoly& f, Tower& tower, const Exponent& precision,
                                    FieldContext* ctx = nullptr);

}  // namespace polarclust
