#pragma once

// Bivariate polynomials over Q(i), their Q(i)[y][x] arithmetic, and Newton
// polygons (absolute and relative to an arc).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarclust/algebra.hpp"
#include "polarclust/puiseux.hpp"

namespace polarclust {

/// Dense polynomial in y over Q(i), low -> high, no trailing zeros.
class YPoly {
 public:
  YPoly() = default;
  explicit YPoly(std::vector<GaussianRational> c) : c_(std::move(c)) { trim(); }
  static YPoly constant(const GaussianRational& c) { return YPoly({c}); }
  static YPoly monomial(const GaussianRational& c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int ord() const;
  GaussianRational coeff(int k) const;
  const GaussianRational& lead() const { return c_.back(); }
  const std::vector<GaussianRational>& coeffs() const { return c_; }

  friend YPoly operator+(const YPoly& a, const YPoly& b);
  friend YPoly operator-(const YPoly& a, const YPoly& b);
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  YPoly operator-() const;
  YPoly scaled(const GaussianRational& s) const;
  friend bool operator==(const YPoly& a, const YPoly& b) { return a.c_ == b.c_; }

  static std::pair<YPoly, YPoly> divmod(const YPoly& a, const YPoly& b);
  /// Throws AlgebraError when b does not divide a.
  static YPoly exact_div(const YPoly& a, const YPoly& b);
  static YPoly gcd(YPoly a, YPoly b);  // monic or zero

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Polynomial in x with Q(i)[y] coefficients (index = x-degree).
using XYPoly = std::vector<YPoly>;

/// Sparse bivariate polynomial f = sum c_ij x^i y^j.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;  // (i: x-degree, j: y-degree)

  BivarPoly() = default;
  static BivarPoly x();
  static BivarPoly y();
  static BivarPoly constant(const GaussianRational& c);
  static BivarPoly monomial(const GaussianRational& c, int i, int j);

  const std::map<Key, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coeff(int i, int j) const;
  void add_term(int i, int j, const GaussianRational& c);

  int degree_x() const;
  int degree_y() const;
  int total_degree() const;
  /// Order m: lowest total degree of a term (-1 for zero).
  int order() const;
  /// Homogeneous part of total degree d.
  BivarPoly homogeneous_part(int d) const;
  BivarPoly initial_form() const { return homogeneous_part(order()); }

  BivarPoly operator-() const;
  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly pow(int e) const;
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  BivarPoly partial_x() const;
  BivarPoly partial_y() const;

  /// f(p(x,y), q(x,y)).
  BivarPoly compose(const BivarPoly& p, const BivarPoly& q) const;

  XYPoly to_xy() const;
  static BivarPoly from_xy(const XYPoly& p);

  /// Canonical pretty form, e.g. "x^2 - y^3", "(1+2*i)*x*y + 1/2*y^4".
  std::string str() const;

 private:
  std::map<Key, GaussianRational> terms_;
};

// ---- Q(i)[y][x] arithmetic -------------------------------------------------

int xy_degree(const XYPoly& p);
XYPoly xy_trim(XYPoly p);
XYPoly xy_derivative(const XYPoly& p);
XYPoly xy_mul(const XYPoly& a, const XYPoly& b);
/// gcd in Q(i)[y] of all coefficients (monic).
YPoly xy_content(const XYPoly& p);
XYPoly xy_primitive(const XYPoly& p);
/// Exact quotient a / b in Q(i)[y][x]; throws AlgebraError if inexact.
XYPoly xy_exact_div(const XYPoly& a, const XYPoly& b);
/// gcd of primitive parts, primitive, normalised so lc(lc) = 1.
XYPoly xy_gcd(const XYPoly& a, const XYPoly& b);
/// Squarefree decomposition of the primitive part: pairs (P_k, k), deg_x P_k > 0.
std::vector<std::pair<XYPoly, int>> xy_squarefree(const XYPoly& p);
/// Res_x(a, b) in Q(i)[y] via fraction-free elimination of the Sylvester matrix.
YPoly xy_resultant(const XYPoly& a, const XYPoly& b);

// ---- germs -----------------------------------------------------------------

/// f(x, y + lambda*x) with the smallest lambda in {0,1,2,...} making
/// the initial form nonzero at (1,0).
std::pair<BivarPoly, long> mini_regularize(const BivarPoly& f);
BivarPoly shear(const BivarPoly& f, const GaussianRational& lambda);

/// Number of Puiseux roots through the origin: smallest i with c_{i,0} != 0
/// (-1 if there is none).
int origin_root_count(const XYPoly& p);

// ---- Newton polygons -------------------------------------------------------

struct PolygonPoint {
  int i;
  Exponent j;
};

struct PolygonEdge {
  PolygonPoint left;   // smaller i
  PolygonPoint right;  // larger i
  Exponent coslope;    // (j_left - j_right) / (i_right - i_left)
};

struct NewtonPolygon {
  std::vector<PolygonPoint> points;    // support, sorted by i
  std::vector<PolygonEdge> edges;      // lower-left hull, increasing co-slope
  std::optional<Exponent> vertical_intercept;  // (0, h) if present

  /// Co-slope of the highest (leftmost) edge.
  std::optional<Exponent> highest_coslope() const;
};

/// Lower convex hull of points with positive-slope edges toward the j-axis.
NewtonPolygon polygon_from_points(std::vector<PolygonPoint> pts);
NewtonPolygon newton_polygon(const BivarPoly& f);

/// Coefficients (in x) of f(x + gamma(y), y) as truncated series; terms at
/// or beyond `limit` are not computed.
std::vector<PuiseuxSeries> taylor_shift(const BivarPoly& f, const PuiseuxSeries& gamma,
                                        const ExtRational& limit = ExtRational::infinity());
/// f(gamma(y), y), known below `limit` at most.
PuiseuxSeries substitute(const BivarPoly& f, const PuiseuxSeries& gamma,
                         const ExtRational& limit = ExtRational::infinity());

/// NP(f, gamma); throws Unresolved if an order that could shape the hull is
/// hidden by truncation.
NewtonPolygon relative_polygon(const BivarPoly& f, const PuiseuxSeries& gamma);

/// min over support of q*i + j.
Exponent tropical_eval(const NewtonPolygon& p, const Exponent& q);

}  // namespace polarclust
