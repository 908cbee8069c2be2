#pragma once

// Full analysis of a germ: tangent cone, roots of f and f_x, Kuo-Lu tree,
// decorated polar arcs and the numeric invariants built from them.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polarclust/germ.hpp"

namespace polarclust {

class NonIsolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lines x = a*y of the tangent cone of a mini-regular germ.
std::vector<TangentLine> tangent_cone(const BivarPoly& f, Tower& tower, FieldContext* ctx = nullptr);

/// Runs the whole pipeline. Throws InvalidInput, Unresolved, AlgebraError.
GermAnalysis analyze(const BivarPoly& input, const AnalysisOptions& options = {});

/// Intersection multiplicity of (f_x, f_y) at the origin, read as the
/// y-order of a resultant after a coordinate change that keeps other
/// intersection points away from y = 0. Throws NonIsolated.
std::int64_t oracle_milnor(const BivarPoly& f);

}  // namespace polarclust
