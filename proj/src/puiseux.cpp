#include "polarclust/puiseux.hpp"

#include <algorithm>
#include <numeric>

namespace polarclust {

std::string exponent_str(const Exponent& e) {
  if (e.denominator() == 1) return std::to_string(e.numerator());
  return std::to_string(e.numerator()) + "/" + std::to_string(e.denominator());
}

const Exponent& ExtRational::value() const {
  if (infinite_) throw std::logic_error("value() of infinite order");
  return value_;
}

PuiseuxSeries::PuiseuxSeries(std::vector<SeriesTerm> terms, ExtRational omega) : omega_(std::move(omega)) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const SeriesTerm& a, const SeriesTerm& b) { return a.exponent < b.exponent; });
  for (auto& t : terms) {
    if (!(ExtRational(t.exponent) < omega_)) break;
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const SeriesTerm& t) { return t.coeff.is_zero(); });
}

PuiseuxSeries PuiseuxSeries::monomial(const TowerElement& c, Exponent e) {
  return PuiseuxSeries({{e, c}}, ExtRational::infinity());
}

ExtRational PuiseuxSeries::ord() const {
  if (!terms_.empty()) return terms_.front().exponent;
  if (omega_.is_infinite()) return ExtRational::infinity();
  throw Unresolved("order of a series with no known terms below y^" + omega_.str());
}

ExtRational PuiseuxSeries::order_bound() const {
  if (!terms_.empty()) return terms_.front().exponent;
  return omega_;
}

const TowerElement& PuiseuxSeries::leading_coeff() const {
  if (terms_.empty()) throw Unresolved("leading coefficient of a series with no known terms");
  return terms_.front().coeff;
}

TowerElement PuiseuxSeries::coeff_at(const Exponent& e) const {
  if (!(ExtRational(e) < omega_)) throw Unresolved("coefficient of y^" + exponent_str(e) + " beyond truncation");
  for (const auto& t : terms_)
    if (t.exponent == e) return t.coeff;
  return {};
}

std::int64_t PuiseuxSeries::ramification() const {
  std::int64_t n = 1;
  for (const auto& t : terms_) n = std::lcm(n, t.exponent.denominator());
  return n;
}

PuiseuxSeries PuiseuxSeries::truncate(const ExtRational& e) const {
  PuiseuxSeries r;
  r.omega_ = min(omega_, e);
  for (const auto& t : terms_) {
    if (!(ExtRational(t.exponent) < r.omega_)) break;
    r.terms_.push_back(t);
  }
  return r;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::vector<SeriesTerm> all;
  all.reserve(a.terms_.size() + b.terms_.size());
  std::merge(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), std::back_inserter(all),
             [](const SeriesTerm& x, const SeriesTerm& y) { return x.exponent < y.exponent; });
  return PuiseuxSeries(std::move(all), min(a.omega_, b.omega_));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.terms_.empty() && a.omega_.is_infinite()) return {};
  if (b.terms_.empty() && b.omega_.is_infinite()) return {};
  ExtRational omega = min(a.omega_ + b.order_bound(), b.omega_ + a.order_bound());
  std::vector<SeriesTerm> prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Exponent e = x.exponent + y.exponent;
      if (!(ExtRational(e) < omega)) break;
      prod.push_back({e, x.coeff * y.coeff});
    }
  }
  return PuiseuxSeries(std::move(prod), omega);
}

PuiseuxSeries PuiseuxSeries::scaled(const TowerElement& c) const {
  std::vector<SeriesTerm> t = terms_;
  for (auto& x : t) x.coeff = x.coeff * c;
  return PuiseuxSeries(std::move(t), omega_);
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.omega_ != b.omega_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponent != b.terms_[i].exponent || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

std::string PuiseuxSeries::str(int max_terms) const {
  std::string out;
  int shown = 0;
  bool cut = false;
  for (const auto& t : terms_) {
    if (max_terms >= 0 && shown == max_terms) {
      cut = true;
      break;
    }
    ++shown;
    const bool constant = t.exponent == Exponent(0);
    std::string mono = constant ? "" : "y";
    if (!constant && t.exponent != Exponent(1)) {
      mono += t.exponent.denominator() == 1 ? "^" + exponent_str(t.exponent) : "^(" + exponent_str(t.exponent) + ")";
    }
    std::string cs = t.coeff.str();
    bool negative = false;
    if (cs.front() == '-' && cs.find_first_of("+ ", 1) == std::string::npos) {
      negative = true;
      cs = cs.substr(1);
    }
    if (cs.find_first_of("+ -", 1) != std::string::npos && cs.front() != '(') cs = "(" + cs + ")";
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
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
  if (out.empty()) out = "0";
  if (cut) out += " + ...";
  if (omega_.is_finite()) {
    out += " + O(y^" + (omega_.value().denominator() == 1 ? omega_.str() : "(" + omega_.str() + ")") + ")";
  }
  return out;
}

ExtRational contact(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries d = a - b;
  if (d.has_terms()) return d.terms().front().exponent;
  if (d.omega().is_infinite()) return ExtRational::infinity();
  throw Unresolved("contact not resolved below y^" + d.omega().str());
}

std::vector<PuiseuxSeries> conjugates(const ArcClass& c, Tower& tower, FieldContext* ctx) {
  const std::int64_t n = c.ramification;
  if (n <= 1) return {c.representative};
  auto [t, eps] = adjoin_root_of_unity(tower, static_cast<int>(n), ctx);
  tower = t;
  std::vector<PuiseuxSeries> out;
  for (std::int64_t k = 0; k < n; ++k) {
    std::vector<SeriesTerm> terms;
    for (const auto& term : c.representative.terms()) {
      std::int64_t num = (term.exponent * n).numerator();
      long power = static_cast<long>(((k * num) % n + n) % n);
      terms.push_back({term.exponent, term.coeff * eps.pow(power)});
    }
    out.emplace_back(std::move(terms), c.representative.omega());
  }
  return out;
}

ExtRational branch_contact(const ArcClass& a, const ArcClass& b, Tower& tower, FieldContext* ctx) {
  auto ca = conjugates(a, tower, ctx);
  ExtRational best = 0;
  bool first = true;
  for (const auto& x : ca) {
    ExtRational c = contact(x, b.representative);
    if (c.is_infinite()) throw SameBranch();
    if (first || best < c) best = c;
    first = false;
  }
  return best;
}

}  // namespace polarclust
