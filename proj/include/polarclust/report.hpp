#pragma once

// Serialisation of an analysis: plain text, a structured JSON document,
// and DOT / ASCII drawings of the decorated Kuo-Lu tree.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "polarclust/germ.hpp"

namespace polarclust {

struct ReportOptions {
  int max_terms = 6;  // series display only
};

/// Exact value with an informational decimal, e.g. {"exact": "t1", "approx": "2.828427i"}.
nlohmann::json element_json(const TowerElement& e);

nlohmann::json report_json(const GermAnalysis& g, const ReportOptions& opt = {});
std::string report_structured(const GermAnalysis& g, const ReportOptions& opt = {});
std::string report_text(const GermAnalysis& g, const ReportOptions& opt = {});

std::string tree_dot(const GermAnalysis& g);
std::string tree_ascii(const GermAnalysis& g);

/// Recompute after a seeded pseudo-random extra shear y -> y + lambda*x.
struct ShearVerification {
  Exponent lambda;
  GermAnalysis original;
  GermAnalysis sheared;
  bool topo_equal = false;
  bool lipschitz_equal = false;
  bool passed() const { return topo_equal && lipschitz_equal; }
};
Exponent shear_parameter(std::uint64_t seed);
ShearVerification verify_by_shear(const BivarPoly& f, std::uint64_t seed, const AnalysisOptions& options = {});

}  // namespace polarclust
