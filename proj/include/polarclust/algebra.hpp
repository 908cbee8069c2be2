#pragma once

// Exact arithmetic over Q(i) and over lazily grown towers of algebraic
// extensions with dynamic-evaluation (D5) zero tests.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polarclust {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
 public:
  DivisionByZero() : AlgebraError("division by zero") {}
};

/// Exact complex rational a + b*i, components in lowest terms.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_rational() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational inverse() const;
  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational pow(long e) const;

  /// Exact square root inside Q(i), if one exists.
  std::optional<GaussianRational> sqrt() const;

  std::string str() const;
  std::complex<double> approx() const { return {re_.get_d(), im_.get_d()}; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

class TowerElement;
struct TowerLevel;
using LevelPtr = std::shared_ptr<const TowerLevel>;

/// One adjoined generator: theta with modulus(theta) = 0, modulus monic over
/// the parent level.
struct TowerLevel {
  LevelPtr parent;
  std::size_t depth = 0;
  std::string name;
  std::vector<TowerElement> modulus;  // low -> high, monic, size = degree + 1
  std::string signature;
  std::complex<double> approx_root;   // informational only

  std::size_t degree() const { return modulus.size() - 1; }
};

/// Element of Q(i)[t1,...,tk]/(p1,...,pk). Stored at its minimal level: an
/// element living at level L has a non-constant representation in t_L.
class TowerElement {
 public:
  TowerElement() = default;
  TowerElement(long v) : base_(v) {}  // NOLINT(google-explicit-constructor)
  TowerElement(GaussianRational g) : base_(std::move(g)) {}  // NOLINT(google-explicit-constructor)

  static TowerElement generator(const LevelPtr& level);

  const LevelPtr& level() const { return level_; }
  std::size_t depth() const { return level_ ? level_->depth : 0; }
  bool is_base() const { return !level_; }
  const GaussianRational& base() const { return base_; }
  const std::vector<TowerElement>& coeffs() const { return coeffs_; }

  /// Structural zero: true iff the canonical representation is 0.
  bool is_structurally_zero() const { return !level_ && base_.is_zero(); }
  bool is_structurally_one() const { return !level_ && base_.is_one(); }

  /// Semantic zero test. Returns false only if the element is invertible in
  /// the current tower; throws TowerSplit when it is a proper zero divisor.
  bool is_zero() const;

  TowerElement operator-() const;
  friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator/(const TowerElement& a, const TowerElement& b);
  TowerElement& operator+=(const TowerElement& o) { return *this = *this + o; }
  TowerElement& operator-=(const TowerElement& o) { return *this = *this - o; }
  TowerElement& operator*=(const TowerElement& o) { return *this = *this * o; }

  TowerElement inverse() const;
  TowerElement pow(long e) const;

  /// Structural equality; equals semantic equality on fields.
  friend bool operator==(const TowerElement& a, const TowerElement& b);

  std::string str() const;
  std::complex<double> approx() const;

  // Representation of this element as a polynomial in the generator of
  // `level` (which must be this element's level or a descendant of it).
  std::vector<TowerElement> coeffs_at(const LevelPtr& level) const;
  static TowerElement from_coeffs(const LevelPtr& level, std::vector<TowerElement> c);

 private:
  LevelPtr level_;
  GaussianRational base_;
  std::vector<TowerElement> coeffs_;
};

/// Dense univariate polynomial with tower coefficients, low -> high.
class TowerPoly {
 public:
  TowerPoly() = default;
  explicit TowerPoly(std::vector<TowerElement> c) : c_(std::move(c)) { trim(); }
  static TowerPoly monomial(TowerElement c, std::size_t deg);
  static TowerPoly linear_root(const TowerElement& root);  // t - root

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const TowerElement& coeff(std::size_t k) const;
  const TowerElement& lead() const { return c_.back(); }
  const std::vector<TowerElement>& coeffs() const { return c_; }

  /// Drop leading coefficients that are semantically zero.
  void trim_semantic();

  TowerPoly operator-() const;
  friend TowerPoly operator+(const TowerPoly& a, const TowerPoly& b);
  friend TowerPoly operator-(const TowerPoly& a, const TowerPoly& b);
  friend TowerPoly operator*(const TowerPoly& a, const TowerPoly& b);
  TowerPoly scaled(const TowerElement& s) const;
  TowerPoly monic() const;
  TowerPoly derivative() const;
  TowerElement evaluate(const TowerElement& x) const;

  static std::pair<TowerPoly, TowerPoly> divmod(const TowerPoly& a, const TowerPoly& b);
  static TowerPoly gcd(TowerPoly a, TowerPoly b);  // monic, or zero
  /// s with s*a == gcd(a, m) (mod m); gcd returned in .second.
  static std::pair<TowerPoly, TowerPoly> inverse_mod(const TowerPoly& a, const TowerPoly& m);

  friend bool operator==(const TowerPoly& a, const TowerPoly& b) { return a.c_ == b.c_; }
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<TowerElement> c_;
};

/// Raised when a zero test or an inversion meets a proper zero divisor: the
/// modulus of `level` factors as factor * cofactor over the lower levels.
class TowerSplit : public std::exception {
 public:
  TowerSplit(LevelPtr level, TowerPoly factor, TowerPoly cofactor);
  const char* what() const noexcept override { return msg_.c_str(); }

  const LevelPtr& level() const { return level_; }
  const TowerPoly& factor() const { return factor_; }
  const TowerPoly& cofactor() const { return cofactor_; }

 private:
  LevelPtr level_;
  TowerPoly factor_;
  TowerPoly cofactor_;
  std::string msg_;
};

class FieldContext;

/// Persistent chain of levels; adjunction returns a new tower value.
class Tower {
 public:
  Tower() = default;
  explicit Tower(LevelPtr top) : top_(std::move(top)) {}

  const LevelPtr& top() const { return top_; }
  std::size_t depth() const { return top_ ? top_->depth : 0; }
  std::vector<LevelPtr> levels() const;  // bottom -> top
  bool contains(const LevelPtr& level) const;

  /// Adjoin a root of `modulus` (monic, degree >= 1) with no root search.
  /// With a context, levels are interned and recorded split choices applied.
  std::pair<Tower, TowerElement> extend(const TowerPoly& modulus, FieldContext* ctx = nullptr) const;

  std::string describe() const;

  friend bool operator==(const Tower& a, const Tower& b) { return a.top_ == b.top_; }

 private:
  LevelPtr top_;
};

/// Per-computation interning table and record of resolved tower splits, so
/// that re-running a deterministic computation after a split rebuilds the
/// same levels and takes the chosen branch.
class FieldContext {
 public:
  LevelPtr intern(const LevelPtr& candidate);
  void record_split(const TowerSplit& split);
  const TowerPoly* split_choice(const std::string& signature) const;
  std::size_t split_count() const { return splits_.size(); }

  // algebraic roots found so far; reused before adjoining a new level
  void remember_root(const TowerElement& r);
  std::vector<TowerElement> roots_in(const Tower& tower) const;

 private:
  std::map<std::string, LevelPtr> levels_;
  std::map<std::string, TowerPoly> splits_;
  std::vector<TowerElement> roots_;
};

/// The branch towers of a split (levels above the split level are dropped).
std::vector<Tower> split_branches(const TowerSplit& split);

/// Image of an element of depth <= split level in a branch tower.
TowerElement project_to_branch(const TowerElement& a, const TowerSplit& split, const Tower& branch);

/// p / gcd(p, p'), monic.
TowerPoly squarefree_part(const TowerPoly& p);

/// Yun decomposition: p = lc * prod f_k^k with f_k squarefree, coprime.
std::vector<std::pair<TowerPoly, int>> squarefree_decomposition(const TowerPoly& p);

/// Returns the tower extended (if needed) by a root of squarefree_part(p),
/// and that root. Linear, Q(i)-split quadratic and rational roots are found
/// without extension.
std::pair<Tower, TowerElement> adjoin_root(const Tower& tower, const TowerPoly& p,
                                           FieldContext* ctx = nullptr);

/// All roots of p with multiplicities, extending the tower as needed.
std::pair<Tower, std::vector<std::pair<TowerElement, int>>> all_roots(const Tower& tower, const TowerPoly& p,
                                                                      FieldContext* ctx = nullptr);

/// Primitive N-th root of unity.
std::pair<Tower, TowerElement> adjoin_root_of_unity(const Tower& tower, int n, FieldContext* ctx = nullptr);

/// The N-th cyclotomic polynomial over Z.
TowerPoly cyclotomic_polynomial(int n);

/// Polynomial in a formal parameter u with tower coefficients.
class ParametricPolynomial {
 public:
  ParametricPolynomial() = default;
  explicit ParametricPolynomial(TowerPoly p) : p_(std::move(p)) {}
  static ParametricPolynomial constant(const TowerElement& c) { return ParametricPolynomial(TowerPoly({c})); }
  static ParametricPolynomial u_power(const TowerElement& c, std::size_t k) {
    return ParametricPolynomial(TowerPoly::monomial(c, k));
  }

  bool is_zero() const;  // every coefficient semantically zero
  const TowerPoly& poly() const { return p_; }
  friend ParametricPolynomial operator+(const ParametricPolynomial& a, const ParametricPolynomial& b) {
    return ParametricPolynomial(a.p_ + b.p_);
  }
  friend ParametricPolynomial operator*(const ParametricPolynomial& a, const ParametricPolynomial& b) {
    return ParametricPolynomial(a.p_ * b.p_);
  }
  std::string str() const { return p_.str("u"); }

 private:
  TowerPoly p_;
};

}  // namespace polarclust
