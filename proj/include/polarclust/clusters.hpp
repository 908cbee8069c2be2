#pragma once

// Polar clusters PC_{k,delta,h,B}, coarser partitions and the topological
// signature of a germ.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "polarclust/germ.hpp"

namespace polarclust {

struct Verdict {
  bool compatible = true;
  std::string witness;  // first obstruction found when Distinct
  std::vector<std::string> notes;
};

/// Tangential arcs grouped by exact (line, delta, h, bar), sorted by key.
std::vector<PolarCluster> cluster_partition(const GermAnalysis& g);

/// PC_delta and PC_h restricted to one tangent line (line < 0: all lines).
std::map<Exponent, std::vector<std::size_t>> clusters_by_delta(const GermAnalysis& g, int line = -1);
std::map<Exponent, std::vector<std::size_t>> clusters_by_h(const GermAnalysis& g, int line = -1);

/// |PC_{1,m}| counted with multiplicity.
std::int64_t nontangential_count(const GermAnalysis& g);

/// (H-1)/H for H the largest h in PC_{k,delta}.
Exponent partial_rho(const GermAnalysis& g, int line, const Exponent& delta);

std::string cluster_key_str(const GermAnalysis& g, const PolarCluster& c);

struct TopoSignature {
  int m = 0;
  std::set<Exponent> q;
  std::int64_t nontangential = 0;
  std::string tree;
  /// One entry per tangent line: "r=<r_k>{(delta,h,barcode);...}", sorted.
  std::vector<std::string> lines;

  std::string str() const;
  friend bool operator==(const TopoSignature& a, const TopoSignature& b) {
    return a.m == b.m && a.q == b.q && a.nontangential == b.nontangential && a.tree == b.tree && a.lines == b.lines;
  }
};

TopoSignature topo_signature(const GermAnalysis& g);
Verdict compare_topo(const GermAnalysis& f, const GermAnalysis& g);

}  // namespace polarclust
