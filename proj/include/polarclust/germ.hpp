#pragma once

// Data model of an analysed germ: roots, Kuo-Lu tree, decorated polar arcs,
// numeric invariants, polar clusters and gradient canyons.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarclust/bivariate.hpp"
#include "polarclust/kuolu_tree.hpp"
#include "polarclust/newton_puiseux.hpp"
#include "polarclust/puiseux.hpp"

namespace polarclust {

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyCluster : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SameCanyon : public std::runtime_error {
 public:
  SameCanyon() : std::runtime_error("canyon compared with itself") {}
};

struct AnalysisOptions {
  Exponent margin{1};
  std::optional<long> shear;       // explicit y -> y + shear*x instead of the automatic choice
  int max_splits = 64;             // tower splits tolerated before giving up
  int max_doublings = 10;          // precision doublings while contacts are unresolved
  bool verify_gradient_degree = true;
  /// Continue this tower (and context) instead of starting from Q(i);
  /// used to compare algebraic invariants of two germs exactly.
  const Tower* base_tower = nullptr;
  std::shared_ptr<FieldContext> context;
};

struct TangentLine {
  TowerElement slope;  // the line x = slope*y
  int multiplicity = 1;
};

struct RootArc {
  PuiseuxSeries series;
  int multiplicity = 1;
  std::int64_t ramification = 1;
  std::size_t branch = 0;  // conjugacy class
  int line = -1;
};

struct PolarArc {
  PuiseuxSeries series;
  int multiplicity = 1;  // as a root of f_x
  std::int64_t ramification = 1;
  std::size_t branch = 0;
  bool on_zero_locus = false;
  ExtRational delta = ExtRational::infinity();
  ExtRational h = ExtRational::infinity();
  int line = -1;  // tangent line, -1 when non-tangential
  int bar = -1;
  std::vector<std::size_t> max_contact_roots;
  std::optional<TowerElement> a_h;  // coefficient of y^h in f(gamma(y), y)
  ExtRational ord_fy = ExtRational::infinity();
  ExtRational d_gr = ExtRational::infinity();

  bool tangential() const { return line >= 0 && !on_zero_locus; }
};

struct LineInvariants {
  std::set<Exponent> q;                  // Q_k
  std::optional<Exponent> rho0;          // rho_{0k}
  Exponent milnor{0};                    // mu_k
  std::map<Exponent, Exponent> partial;  // delta -> rho_{k,delta}
};

struct PolarCluster {
  int line = -1;
  Exponent delta;
  Exponent h;
  int bar = -1;
  std::vector<std::size_t> members;
};

struct Canyon {
  std::size_t generator = 0;
  PuiseuxSeries representative;
  ExtRational degree;
  std::vector<std::size_t> members;
  ExtRational h;
  std::optional<TowerElement> a_h;
  int line = -1;
  int bar = -1;
};

struct CanyonCluster {
  int line = -1;
  Exponent degree;
  int bar = -1;
  std::vector<std::size_t> canyons;
  std::vector<std::vector<Exponent>> omega;          // per canyon, sorted
  std::vector<std::vector<std::size_t>> omega_classes;  // positions into `canyons`
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct GermAnalysis {
  BivarPoly input;
  BivarPoly f;  // after the shear
  long shear = 0;
  Exponent precision;  // working truncation y^T
  Exponent horizon;    // largest order any invariant needed, plus one
  Exponent margin;
  Tower tower;
  std::shared_ptr<FieldContext> context;

  int m = 0;
  std::vector<TangentLine> lines;
  std::vector<RootArc> roots;
  std::vector<std::vector<std::size_t>> root_branches;
  KuoLuTree tree;

  std::vector<PolarArc> polars;
  std::vector<std::vector<std::size_t>> polar_branches;
  /// Contact between polar arcs off the zero locus; infinity when it exceeds
  /// the working precision.
  std::vector<std::vector<ExtRational>> polar_contact;

  // numeric invariants
  bool non_isolated = false;
  bool empty_polar = false;
  ExtRational milnor;              // infinity when non-isolated
  Exponent milnor_finite_part{0};  // sum over arcs off the zero locus
  std::map<Exponent, std::int64_t> quotients;  // Q(f) with multiplicities
  std::optional<Exponent> l0;
  std::optional<Exponent> rho0;
  std::vector<LineInvariants> per_line;

  std::vector<PolarCluster> clusters;
  std::vector<std::size_t> nontangential;  // PC_{1,m}

  std::vector<Canyon> canyons;
  std::vector<CanyonCluster> canyon_clusters;

  std::vector<Check> checks;

  bool all_checks_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

}  // namespace polarclust
