#include "polarclust/bivariate.hpp"

#include <algorithm>

namespace polarclust {

// ---------------------------------------------------------------------------
// YPoly

YPoly YPoly::monomial(const GaussianRational& c, int deg) {
  std::vector<GaussianRational> v(static_cast<std::size_t>(deg) + 1);
  v.back() = c;
  return YPoly(std::move(v));
}

void YPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int YPoly::ord() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

GaussianRational YPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(k)];
}

YPoly operator+(const YPoly& a, const YPoly& b) {
  std::vector<GaussianRational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
  return YPoly(std::move(r));
}

YPoly operator-(const YPoly& a, const YPoly& b) { return a + (-b); }

YPoly YPoly::operator-() const {
  YPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return YPoly(std::move(r));
}

YPoly YPoly::scaled(const GaussianRational& s) const {
  YPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

std::pair<YPoly, YPoly> YPoly::divmod(const YPoly& a, const YPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<GaussianRational> rem = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {YPoly(), a};
  std::vector<GaussianRational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  GaussianRational inv = b.lead().inverse();
  for (int k = a.degree(); k >= db; --k) {
    GaussianRational c = rem[static_cast<std::size_t>(k)] * inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int t = 0; t <= db; ++t) rem[static_cast<std::size_t>(k - db + t)] -= c * b.c_[static_cast<std::size_t>(t)];
  }
  return {YPoly(std::move(q)), YPoly(std::move(rem))};
}

YPoly YPoly::exact_div(const YPoly& a, const YPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw AlgebraError("inexact polynomial division");
  return q;
}

YPoly YPoly::gcd(YPoly a, YPoly b) {
  while (!b.is_zero()) {
    YPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inverse());
}

// ---------------------------------------------------------------------------
// BivarPoly

BivarPoly BivarPoly::x() { return monomial(1, 1, 0); }
BivarPoly BivarPoly::y() { return monomial(1, 0, 1); }
BivarPoly BivarPoly::constant(const GaussianRational& c) { return monomial(c, 0, 0); }

BivarPoly BivarPoly::monomial(const GaussianRational& c, int i, int j) {
  BivarPoly p;
  p.add_term(i, j, c);
  return p;
}

GaussianRational BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? GaussianRational() : it->second;
}

void BivarPoly::add_term(int i, int j, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int BivarPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BivarPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

int BivarPoly::order() const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    if (d < 0 || k.first + k.second < d) d = k.first + k.second;
  return d;
}

BivarPoly BivarPoly::homogeneous_part(int d) const {
  BivarPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first + k.second == d) r.terms_.emplace(k, c);
  return r;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
  return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BivarPoly BivarPoly::pow(int e) const {
  BivarPoly r = constant(1), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

BivarPoly BivarPoly::partial_x() const {
  BivarPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) r.add_term(k.first - 1, k.second, c * GaussianRational(k.first));
  return r;
}

BivarPoly BivarPoly::partial_y() const {
  BivarPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) r.add_term(k.first, k.second - 1, c * GaussianRational(k.second));
  return r;
}

BivarPoly BivarPoly::compose(const BivarPoly& p, const BivarPoly& q) const {
  std::vector<BivarPoly> ppow{constant(1)}, qpow{constant(1)};
  BivarPoly r;
  for (const auto& [k, c] : terms_) {
    while (static_cast<int>(ppow.size()) <= k.first) ppow.push_back(ppow.back() * p);
    while (static_cast<int>(qpow.size()) <= k.second) qpow.push_back(qpow.back() * q);
    r = r + ppow[static_cast<std::size_t>(k.first)] * qpow[static_cast<std::size_t>(k.second)] * constant(c);
  }
  return r;
}

XYPoly BivarPoly::to_xy() const {
  const int dx = degree_x();
  if (dx < 0) return {};
  std::vector<std::vector<GaussianRational>> dense(static_cast<std::size_t>(dx) + 1);
  for (const auto& [k, c] : terms_) {
    auto& row = dense[static_cast<std::size_t>(k.first)];
    if (static_cast<int>(row.size()) <= k.second) row.resize(static_cast<std::size_t>(k.second) + 1);
    row[static_cast<std::size_t>(k.second)] = c;
  }
  XYPoly out;
  for (auto& row : dense) out.emplace_back(std::move(row));
  return out;
}

BivarPoly BivarPoly::from_xy(const XYPoly& p) {
  BivarPoly r;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].coeffs().size(); ++j)
      r.add_term(static_cast<int>(i), static_cast<int>(j), p[i].coeffs()[j]);
  return r;
}

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then by decreasing x-degree.
  std::vector<std::pair<Key, GaussianRational>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [k, c] : order) {
    std::string mono;
    auto var = [&](const char* v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("x", k.first);
    var("y", k.second);
    bool negative = c.is_rational() && sgn(c.re()) < 0;
    GaussianRational mag = negative ? -c : c;
    std::string cs = mag.str();
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (mag.is_one()) {
      term = mono;
    } else {
      term = cs + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Q(i)[y][x]

XYPoly xy_trim(XYPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int xy_degree(const XYPoly& p) { return static_cast<int>(xy_trim(p).size()) - 1; }

XYPoly xy_derivative(const XYPoly& p) {
  XYPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i].scaled(GaussianRational(static_cast<long>(i))));
  return xy_trim(r);
}

XYPoly xy_mul(const XYPoly& a, const XYPoly& b) {
  if (a.empty() || b.empty()) return {};
  XYPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return xy_trim(r);
}

YPoly xy_content(const XYPoly& p) {
  YPoly g;
  for (const auto& c : p) {
    g = YPoly::gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

XYPoly xy_primitive(const XYPoly& p_in) {
  XYPoly p = xy_trim(p_in);
  if (p.empty()) return p;
  YPoly g = xy_content(p);
  for (auto& c : p) c = YPoly::exact_div(c, g);
  // Normalise: leading coefficient of the leading y-polynomial is 1.
  GaussianRational s = p.back().lead().inverse();
  for (auto& c : p) c = c.scaled(s);
  return p;
}

XYPoly xy_exact_div(const XYPoly& a_in, const XYPoly& b_in) {
  XYPoly a = xy_trim(a_in), b = xy_trim(b_in);
  if (b.empty()) throw DivisionByZero();
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) {
    if (a.empty()) return {};
    throw AlgebraError("inexact bivariate division");
  }
  XYPoly q(a.size() - b.size() + 1);
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    const YPoly& ak = a[static_cast<std::size_t>(k)];
    if (ak.is_zero()) continue;
    YPoly c = YPoly::exact_div(ak, b.back());
    q[static_cast<std::size_t>(k - db)] = c;
    for (int t = 0; t <= db; ++t) {
      auto idx = static_cast<std::size_t>(k - db + t);
      a[idx] = a[idx] - c * b[static_cast<std::size_t>(t)];
    }
  }
  for (const auto& c : a)
    if (!c.is_zero()) throw AlgebraError("inexact bivariate division");
  return xy_trim(q);
}

namespace {

// Pseudo-remainder of a by b in Q(i)[y][x].
XYPoly pseudo_remainder(XYPoly a, const XYPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    YPoly la = a.back();
    for (auto& c : a) c = c * b.back();
    for (int t = 0; t <= db; ++t) {
      auto idx = static_cast<std::size_t>(da - db + t);
      a[idx] = a[idx] - la * b[static_cast<std::size_t>(t)];
    }
    a = xy_trim(a);
  }
  return a;
}

GaussianRational eval_y(const YPoly& p, long y0) {
  GaussianRational acc;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * GaussianRational(y0) + p.coeffs()[k];
  return acc;
}

// Degree bound for gcd(a, b): the minimum over a few specializations y = y0
// at which neither leading coefficient vanishes.
int specialized_gcd_degree(const XYPoly& a, const XYPoly& b) {
  int best = -1, tries = 0;
  for (long y0 : {7L, 13L, 29L, 101L, 997L, 3L, 2L}) {
    if (eval_y(a.back(), y0).is_zero() || eval_y(b.back(), y0).is_zero()) continue;
    std::vector<GaussianRational> ua, ub;
    for (const auto& c : a) ua.push_back(eval_y(c, y0));
    for (const auto& c : b) ub.push_back(eval_y(c, y0));
    int d = YPoly::gcd(YPoly(ua), YPoly(ub)).degree();
    if (best < 0 || d < best) best = d;
    if (best == 0 || ++tries == 3) break;
  }
  return best;
}

}  // namespace

XYPoly xy_gcd(const XYPoly& a_in, const XYPoly& b_in) {
  XYPoly a = xy_primitive(a_in), b = xy_primitive(b_in);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (specialized_gcd_degree(a, b) == 0) return {YPoly::constant(1)};
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return {YPoly::constant(1)};
    XYPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = xy_primitive(r);
  }
  return xy_primitive(a);
}

std::vector<std::pair<XYPoly, int>> xy_squarefree(const XYPoly& p_in) {
  std::vector<std::pair<XYPoly, int>> out;
  XYPoly p = xy_primitive(p_in);
  if (xy_degree(p) <= 0) return out;
  // Yun's algorithm; valid in characteristic zero over the UFD Q(i)[y].
  XYPoly dp = xy_derivative(p);
  XYPoly a = xy_gcd(p, dp);
  XYPoly b = xy_exact_div(p, a);
  XYPoly c = xy_exact_div(dp, a);
  int k = 1;
  while (xy_degree(b) > 0) {
    XYPoly bd = xy_derivative(b);
    XYPoly d(std::max(c.size(), bd.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
      d[i] = (i < c.size() ? c[i] : YPoly()) - (i < bd.size() ? bd[i] : YPoly());
    d = xy_trim(d);
    XYPoly g = d.empty() ? b : xy_gcd(b, d);
    if (xy_degree(g) > 0) out.emplace_back(g, k);
    b = xy_exact_div(b, g);
    c = d.empty() ? XYPoly{} : xy_exact_div(d, g);
    ++k;
  }
  return out;
}

YPoly xy_resultant(const XYPoly& a_in, const XYPoly& b_in) {
  XYPoly a = xy_trim(a_in), b = xy_trim(b_in);
  if (a.empty() || b.empty()) return {};
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  if (m == 0 && n == 0) return YPoly::constant(1);
  if (m == 0) {
    YPoly r = YPoly::constant(1);
    for (int k = 0; k < n; ++k) r = r * a[0];
    return r;
  }
  if (n == 0) {
    YPoly r = YPoly::constant(1);
    for (int k = 0; k < m; ++k) r = r * b[0];
    return r;
  }
  const int size = m + n;
  std::vector<std::vector<YPoly>> mat(static_cast<std::size_t>(size), std::vector<YPoly>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) mat[r][r + k] = a[static_cast<std::size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) mat[n + r][r + k] = b[static_cast<std::size_t>(n - k)];
  // Bareiss fraction-free elimination.
  YPoly prev = YPoly::constant(1);
  bool negate = false;
  for (int k = 0; k < size - 1; ++k) {
    if (mat[k][k].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < size; ++r)
        if (!mat[r][k].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return {};
      std::swap(mat[k], mat[piv]);
      negate = !negate;
    }
    for (int r = k + 1; r < size; ++r) {
      for (int c = k + 1; c < size; ++c)
        mat[r][c] = YPoly::exact_div(mat[k][k] * mat[r][c] - mat[r][k] * mat[k][c], prev);
      mat[r][k] = YPoly();
    }
    prev = mat[k][k];
  }
  YPoly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

// ---------------------------------------------------------------------------
// germs

BivarPoly shear(const BivarPoly& f, const GaussianRational& lambda) {
  if (lambda.is_zero()) return f;
  return f.compose(BivarPoly::x(), BivarPoly::y() + BivarPoly::monomial(lambda, 1, 0));
}

std::pair<BivarPoly, long> mini_regularize(const BivarPoly& f) {
  for (long lambda = 0;; ++lambda) {
    BivarPoly g = shear(f, GaussianRational(lambda));
    const int m = g.order();
    if (!g.coeff(m, 0).is_zero()) return {g, lambda};
  }
}

int origin_root_count(const XYPoly& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].coeff(0).is_zero()) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Newton polygons

std::optional<Exponent> NewtonPolygon::highest_coslope() const {
  if (edges.empty()) return std::nullopt;
  return edges.back().coslope;
}

NewtonPolygon polygon_from_points(std::vector<PolygonPoint> pts) {
  NewtonPolygon np;
  std::sort(pts.begin(), pts.end(), [](const PolygonPoint& a, const PolygonPoint& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  // keep lowest j per i
  for (const auto& p : pts)
    if (np.points.empty() || np.points.back().i != p.i) np.points.push_back(p);
  if (np.points.empty()) return np;
  if (np.points.front().i == 0) np.vertical_intercept = np.points.front().j;
  // Walk from the leftmost point to the lowest point (smallest i among min j).
  std::size_t lowest = 0;
  for (std::size_t k = 1; k < np.points.size(); ++k)
    if (np.points[k].j < np.points[lowest].j) lowest = k;
  std::vector<PolygonPoint> hull;
  for (std::size_t k = 0; k <= lowest; ++k) {
    const auto& p = np.points[k];
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b if it is on or above segment a-p
      Exponent lhs = (b.j - a.j) * Exponent(p.i - a.i);
      Exponent rhs = (p.j - a.j) * Exponent(b.i - a.i);
      if (lhs >= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  for (std::size_t k = hull.size(); k-- > 1;) {
    const auto& l = hull[k - 1];
    const auto& r = hull[k];
    np.edges.push_back({l, r, (l.j - r.j) / Exponent(r.i - l.i)});
  }
  return np;
}

NewtonPolygon newton_polygon(const BivarPoly& f) {
  std::vector<PolygonPoint> pts;
  for (const auto& [k, c] : f.terms()) pts.push_back({k.first, Exponent(k.second)});
  return polygon_from_points(std::move(pts));
}

std::vector<PuiseuxSeries> taylor_shift(const BivarPoly& f, const PuiseuxSeries& gamma, const ExtRational& limit) {
  XYPoly p = f.to_xy();
  const PuiseuxSeries g = gamma.truncate(limit);
  std::vector<PuiseuxSeries> a;
  for (const auto& row : p) {
    std::vector<SeriesTerm> t;
    for (std::size_t j = 0; j < row.coeffs().size(); ++j)
      if (!row.coeffs()[j].is_zero()) t.push_back({Exponent(static_cast<std::int64_t>(j)), TowerElement(row.coeffs()[j])});
    a.emplace_back(std::move(t), limit);
  }
  const std::size_t n = a.size();
  if (n == 0) return a;
  // Repeated synthetic division by (x - gamma).
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k-- > i;) a[k] = a[k] + a[k + 1] * g;
  return a;
}

PuiseuxSeries substitute(const BivarPoly& f, const PuiseuxSeries& gamma, const ExtRational& limit) {
  XYPoly p = f.to_xy();
  const PuiseuxSeries g = gamma.truncate(limit);
  PuiseuxSeries acc;
  for (std::size_t k = p.size(); k-- > 0;) {
    std::vector<SeriesTerm> t;
    for (std::size_t j = 0; j < p[k].coeffs().size(); ++j)
      if (!p[k].coeffs()[j].is_zero())
        t.push_back({Exponent(static_cast<std::int64_t>(j)), TowerElement(p[k].coeffs()[j])});
    acc = acc * g + PuiseuxSeries(std::move(t), limit);
  }
  return acc;
}

NewtonPolygon relative_polygon(const BivarPoly& f, const PuiseuxSeries& gamma) {
  auto coeffs = taylor_shift(f, gamma);
  std::vector<PolygonPoint> known;
  std::vector<std::pair<int, ExtRational>> hidden;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i];
    if (c.has_terms()) {
      known.push_back({static_cast<int>(i), c.terms().front().exponent});
    } else if (c.omega().is_finite()) {
      hidden.emplace_back(static_cast<int>(i), c.omega());
    }
  }
  NewtonPolygon np = polygon_from_points(known);
  // A hidden point could only matter if its lower bound is not strictly above
  // the hull (or left of it).
  for (const auto& [i, bound] : hidden) {
    if (np.points.empty() || i < np.points.front().i) throw Unresolved("relative polygon: order hidden at x^" + std::to_string(i));
    Exponent env;
    bool found = false;
    for (const auto& e : np.edges) {
      if (e.left.i <= i && i <= e.right.i) {
        env = e.left.j - e.coslope * Exponent(i - e.left.i);
        found = true;
        break;
      }
    }
    if (!found) continue;  // right of the lowest vertex: irrelevant
    if (!(ExtRational(env) < bound)) throw Unresolved("relative polygon: order hidden at x^" + std::to_string(i));
  }
  return np;
}

Exponent tropical_eval(const NewtonPolygon& p, const Exponent& q) {
  if (p.points.empty()) throw std::invalid_argument("tropical_eval of empty polygon");
  Exponent best = q * Exponent(p.points.front().i) + p.points.front().j;
  for (const auto& pt : p.points) best = std::min(best, q * Exponent(pt.i) + pt.j);
  return best;
}

}  // namespace polarclust
