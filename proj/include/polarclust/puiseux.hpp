#pragma once

// Truncated fractional power series in y with exact tower coefficients.

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarclust/algebra.hpp"

namespace polarclust {

using Exponent = boost::rational<std::int64_t>;

std::string exponent_str(const Exponent& e);

/// A rational number or +infinity.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Exponent v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtRational(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Throws std::logic_error when infinite.
  const Exponent& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return a.value_ + b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : exponent_str(value_); }

 private:
  bool infinite_ = false;
  Exponent value_{0};
};

inline ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }
inline ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

/// An order or contact query that the stored truncation cannot answer.
class Unresolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeriesTerm {
  Exponent exponent;
  TowerElement coeff;
};

/// sum of c_k y^{e_k} + O(y^omega); omega = inf means the series is exact.
class PuiseuxSeries {
 public:
  PuiseuxSeries() : omega_(ExtRational::infinity()) {}
  /// Terms need not be sorted; semantically zero coefficients and terms at
  /// or beyond omega are dropped, equal exponents are merged.
  PuiseuxSeries(std::vector<SeriesTerm> terms, ExtRational omega);
  static PuiseuxSeries monomial(const TowerElement& c, Exponent e);

  const std::vector<SeriesTerm>& terms() const { return terms_; }
  const ExtRational& omega() const { return omega_; }
  bool is_exact() const { return omega_.is_infinite(); }
  bool has_terms() const { return !terms_.empty(); }

  /// Exponent of the first term, +inf for the exact zero series.
  ExtRational ord() const;
  /// Lower bound for the order: first exponent, or omega when no terms.
  ExtRational order_bound() const;
  const TowerElement& leading_coeff() const;
  /// Coefficient of y^e; throws Unresolved when e >= omega.
  TowerElement coeff_at(const Exponent& e) const;
  /// lcm of exponent denominators of the stored terms.
  std::int64_t ramification() const;

  PuiseuxSeries truncate(const ExtRational& e) const;
  PuiseuxSeries with_omega(const ExtRational& omega) const { return truncate(omega); }

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  PuiseuxSeries scaled(const TowerElement& c) const;

  /// Structural equality of terms and truncation.
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

  /// Pretty form such as "y^2 - 1/2*y^(9/2) + O(y^5)"; max_terms < 0 prints all.
  std::string str(int max_terms = -1) const;

 private:
  std::vector<SeriesTerm> terms_;
  ExtRational omega_;
};

/// ord(a - b); +inf iff a == b exactly. Throws Unresolved when the
/// difference vanishes below min(omega_a, omega_b) but is not exact.
ExtRational contact(const PuiseuxSeries& a, const PuiseuxSeries& b);

/// One Puiseux branch: a representative and its ramification N.
struct ArcClass {
  PuiseuxSeries representative;
  std::int64_t ramification = 1;
  int multiplicity = 1;  // multiplicity as a root of the source polynomial
};

class SameBranch : public std::runtime_error {
 public:
  SameBranch() : std::runtime_error("arcs define the same branch") {}
};

/// The N conjugates (coefficient of y^{n/N} times eps^{kn}); may extend the
/// tower by a primitive N-th root of unity.
std::vector<PuiseuxSeries> conjugates(const ArcClass& c, Tower& tower, FieldContext* ctx = nullptr);

/// Max over conjugate pairs of the series contact.
ExtRational branch_contact(const ArcClass& a, const ArcClass& b, Tower& tower, FieldContext* ctx = nullptr);

}  // namespace polarclust
