#include "polarclust/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polarclust {

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result(1), b = *this;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(sn, sd);
}

}  // namespace

std::optional<GaussianRational> GaussianRational::sqrt() const {
  if (sgn(im_) == 0) {
    if (sgn(re_) >= 0) {
      if (auto s = rational_sqrt(re_)) return GaussianRational(*s, 0);
      return std::nullopt;
    }
    if (auto s = rational_sqrt(-re_)) return GaussianRational(0, *s);
    return std::nullopt;
  }
  auto n = rational_sqrt(norm());
  if (!n) return std::nullopt;
  auto x = rational_sqrt((re_ + *n) / 2);
  if (!x || sgn(*x) == 0) return std::nullopt;
  return GaussianRational(*x, im_ / (2 * *x));
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string s = "(" + re_.get_str();
  if (sgn(im_) > 0) s += "+";
  return s + imag + ")";
}

// ---------------------------------------------------------------------------
// TowerElement

namespace {

bool is_ancestor_or_self(const LevelPtr& anc, const LevelPtr& level) {
  if (!anc) return true;
  const TowerLevel* p = level.get();
  while (p && p->depth > anc->depth) p = p->parent.get();
  return p == anc.get();
}

const LevelPtr& deeper_level(const TowerElement& a, const TowerElement& b) {
  const LevelPtr& la = a.level();
  const LevelPtr& lb = b.level();
  if (a.depth() >= b.depth()) {
    if (!is_ancestor_or_self(lb, la)) throw AlgebraError("elements belong to different towers");
    return la;
  }
  if (!is_ancestor_or_self(la, lb)) throw AlgebraError("elements belong to different towers");
  return lb;
}

std::vector<TowerElement> poly_mul_raw(const std::vector<TowerElement>& a, const std::vector<TowerElement>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<TowerElement> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_structurally_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_structurally_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Reduce modulo the (monic) modulus of `level`.
void reduce_mod(std::vector<TowerElement>& c, const TowerLevel& level) {
  const std::size_t d = level.degree();
  for (std::size_t k = c.size(); k-- > d;) {
    if (c[k].is_structurally_zero()) continue;
    TowerElement top = c[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (level.modulus[j].is_structurally_zero()) continue;
      c[k - d + j] -= top * level.modulus[j];
    }
  }
  if (c.size() > d) c.resize(d);
}

std::complex<double> approx_eval(const std::vector<TowerElement>& c, std::complex<double> x) {
  std::complex<double> r = 0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * x + c[k].approx();
  return r;
}

std::vector<std::complex<double>> approx_roots(const std::vector<std::complex<double>>& monic) {
  // Durand-Kerner on a monic polynomial, low -> high.
  const std::size_t n = monic.size() - 1;
  std::vector<std::complex<double>> z(n);
  const std::complex<double> seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<double>(i));
  for (int iter = 0; iter < 500; ++iter) {
    double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> p = 0;
      for (std::size_t k = monic.size(); k-- > 0;) p = p * z[i] + monic[k];
      std::complex<double> den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      if (std::abs(den) < 1e-300) den = 1e-300;
      auto delta = p / den;
      z[i] -= delta;
      change = std::max(change, std::abs(delta));
    }
    if (change < 1e-15) break;
  }
  return z;
}

}  // namespace

TowerElement TowerElement::generator(const LevelPtr& level) {
  if (level->degree() == 1) return -level->modulus[0];
  return from_coeffs(level, {TowerElement(0), TowerElement(1)});
}

std::vector<TowerElement> TowerElement::coeffs_at(const LevelPtr& level) const {
  if (level_ == level && level_) return coeffs_;
  if (is_structurally_zero()) return {};
  return {*this};
}

TowerElement TowerElement::from_coeffs(const LevelPtr& level, std::vector<TowerElement> c) {
  while (!c.empty() && c.back().is_structurally_zero()) c.pop_back();
  if (c.empty()) return {};
  if (c.size() == 1) return c.front();
  TowerElement e;
  e.level_ = level;
  e.coeffs_ = std::move(c);
  return e;
}

TowerElement TowerElement::operator-() const {
  if (!level_) return TowerElement(-base_);
  TowerElement e = *this;
  for (auto& c : e.coeffs_) c = -c;
  return e;
}

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
  if (a.is_structurally_zero()) return b;
  if (b.is_structurally_zero()) return a;
  if (!a.level_ && !b.level_) return TowerElement(a.base_ + b.base_);
  const LevelPtr& l = deeper_level(a, b);
  auto ca = a.coeffs_at(l);
  auto cb = b.coeffs_at(l);
  if (ca.size() < cb.size()) ca.resize(cb.size());
  for (std::size_t i = 0; i < cb.size(); ++i) ca[i] += cb[i];
  return TowerElement::from_coeffs(l, std::move(ca));
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) { return a + (-b); }

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  if (a.is_structurally_zero() || b.is_structurally_zero()) return {};
  if (!a.level_ && !b.level_) return TowerElement(a.base_ * b.base_);
  if (a.is_structurally_one()) return b;
  if (b.is_structurally_one()) return a;
  const LevelPtr& l = deeper_level(a, b);
  auto ca = a.coeffs_at(l);
  auto cb = b.coeffs_at(l);
  if (ca.size() == 1 || cb.size() == 1) {
    // scalar times polynomial in t_l
    const auto& s = ca.size() == 1 ? ca[0] : cb[0];
    auto& v = ca.size() == 1 ? cb : ca;
    for (auto& c : v) c = c * s;
    return TowerElement::from_coeffs(l, std::move(v));
  }
  auto r = poly_mul_raw(ca, cb);
  reduce_mod(r, *l);
  return TowerElement::from_coeffs(l, std::move(r));
}

TowerElement operator/(const TowerElement& a, const TowerElement& b) { return a * b.inverse(); }

bool operator==(const TowerElement& a, const TowerElement& b) {
  if (a.level_ != b.level_) return false;
  if (!a.level_) return a.base_ == b.base_;
  return a.coeffs_ == b.coeffs_;
}

TowerElement TowerElement::inverse() const {
  if (!level_) return TowerElement(base_.inverse());
  TowerPoly a(coeffs_);
  TowerPoly m(level_->modulus);
  auto [s, g] = TowerPoly::inverse_mod(a, m);
  if (g.degree() > 0) throw TowerSplit(level_, g, TowerPoly::divmod(m, g).first);
  if (g.is_zero()) throw DivisionByZero();
  // g is monic of degree 0, i.e. 1
  auto c = s.coeffs();
  reduce_mod(c, *level_);
  return from_coeffs(level_, std::move(c));
}

TowerElement TowerElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  TowerElement result(1), b = *this;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

bool TowerElement::is_zero() const {
  if (is_structurally_zero()) return true;
  if (!level_) return false;
  const auto& m = level_->modulus;
  if (level_->degree() == 2 && coeffs_.size() == 2) {
    // Resultant of a0 + a1 t with t^2 + b t + c.
    const auto& a0 = coeffs_[0];
    const auto& a1 = coeffs_[1];
    TowerElement n = a0 * a0 - m[1] * a0 * a1 + m[0] * a1 * a1;
    if (!n.is_zero()) return false;
    TowerElement root = -(a0 / a1);
    TowerPoly factor = TowerPoly::linear_root(root);
    TowerPoly cofactor(std::vector<TowerElement>{m[1] + root, TowerElement(1)});
    throw TowerSplit(level_, factor, cofactor);
  }
  TowerPoly g = TowerPoly::gcd(TowerPoly(coeffs_), TowerPoly(m));
  if (g.degree() <= 0) return false;
  throw TowerSplit(level_, g, TowerPoly::divmod(TowerPoly(m), g).first);
}

std::string TowerElement::str() const {
  if (!level_) return base_.str();
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto& c = coeffs_[k];
    if (c.is_structurally_zero()) continue;
    std::string cs = c.str();
    bool compound = cs.find_first_of("+ ") != std::string::npos && cs.front() != '(';
    if (compound) cs = "(" + cs + ")";
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      std::string mono = level_->name + (k > 1 ? "^" + std::to_string(k) : "");
      if (c.is_structurally_one()) {
        term = mono;
      } else if (!c.level() && c.base() == GaussianRational(-1)) {
        term = "-" + mono;
      } else {
        term = cs + "*" + mono;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::complex<double> TowerElement::approx() const {
  if (!level_) return base_.approx();
  return approx_eval(coeffs_, level_->approx_root);
}

// ---------------------------------------------------------------------------
// TowerPoly

TowerPoly TowerPoly::monomial(TowerElement c, std::size_t deg) {
  std::vector<TowerElement> v(deg + 1);
  v[deg] = std::move(c);
  return TowerPoly(std::move(v));
}

TowerPoly TowerPoly::linear_root(const TowerElement& root) {
  return TowerPoly(std::vector<TowerElement>{-root, TowerElement(1)});
}

const TowerElement& TowerPoly::coeff(std::size_t k) const {
  static const TowerElement zero;
  return k < c_.size() ? c_[k] : zero;
}

void TowerPoly::trim() {
  while (!c_.empty() && c_.back().is_structurally_zero()) c_.pop_back();
}

void TowerPoly::trim_semantic() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TowerPoly TowerPoly::operator-() const {
  TowerPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TowerPoly operator+(const TowerPoly& a, const TowerPoly& b) {
  std::vector<TowerElement> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return TowerPoly(std::move(r));
}

TowerPoly operator-(const TowerPoly& a, const TowerPoly& b) { return a + (-b); }

TowerPoly operator*(const TowerPoly& a, const TowerPoly& b) { return TowerPoly(poly_mul_raw(a.c_, b.c_)); }

TowerPoly TowerPoly::scaled(const TowerElement& s) const {
  TowerPoly r = *this;
  for (auto& c : r.c_) c = c * s;
  r.trim();
  return r;
}

TowerPoly TowerPoly::monic() const {
  if (c_.empty()) return *this;
  if (lead().is_structurally_one()) return *this;
  return scaled(lead().inverse());
}

TowerPoly TowerPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<TowerElement> r(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * TowerElement(static_cast<long>(k));
  return TowerPoly(std::move(r));
}

TowerElement TowerPoly::evaluate(const TowerElement& x) const {
  TowerElement r;
  for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
  return r;
}

std::pair<TowerPoly, TowerPoly> TowerPoly::divmod(const TowerPoly& a, const TowerPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  TowerPoly rem = a;
  if (rem.degree() < b.degree()) return {TowerPoly(), rem};
  TowerElement inv = b.lead().inverse();
  const int db = b.degree();
  std::vector<TowerElement> q(rem.c_.size() - static_cast<std::size_t>(db));
  auto& r = rem.c_;
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (r[k].is_structurally_zero()) continue;
    TowerElement f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
    r[k] = TowerElement();
  }
  rem.trim();
  return {TowerPoly(std::move(q)), rem};
}

TowerPoly TowerPoly::gcd(TowerPoly a, TowerPoly b) {
  a.trim_semantic();
  b.trim_semantic();
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    r.trim_semantic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::pair<TowerPoly, TowerPoly> TowerPoly::inverse_mod(const TowerPoly& a, const TowerPoly& m) {
  TowerPoly r0 = m, r1 = a;
  TowerPoly s0, s1(std::vector<TowerElement>{TowerElement(1)});
  r1.trim_semantic();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r.trim_semantic();
    TowerPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {TowerPoly(), TowerPoly()};
  TowerElement inv = r0.lead().inverse();
  s0 = divmod(s0.scaled(inv), m).second;
  return {s0, r0.scaled(inv)};
}

std::string TowerPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_structurally_zero()) continue;
    std::string cs = c_[k].str();
    if (cs.find_first_of("+ ") != std::string::npos && cs.front() != '(') cs = "(" + cs + ")";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (c_[k].is_structurally_one()) {
      term = mono;
    } else {
      term = cs + "*" + mono;
    }
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// TowerSplit and Tower

TowerSplit::TowerSplit(LevelPtr level, TowerPoly factor, TowerPoly cofactor)
    : level_(std::move(level)), factor_(std::move(factor)), cofactor_(std::move(cofactor)) {
  msg_ = "tower split at " + level_->name + ": " + level_->signature + " = (" + factor_.str(level_->name) + ")*(" +
         cofactor_.str(level_->name) + ")";
}

std::vector<LevelPtr> Tower::levels() const {
  std::vector<LevelPtr> out;
  for (LevelPtr p = top_; p; p = p->parent) out.push_back(p);
  std::reverse(out.begin(), out.end());
  return out;
}

bool Tower::contains(const LevelPtr& level) const { return is_ancestor_or_self(level, top_); }

namespace {

LevelPtr make_level(const LevelPtr& parent, const TowerPoly& modulus, const std::string& signature) {
  auto lvl = std::make_shared<TowerLevel>();
  lvl->parent = parent;
  lvl->depth = parent ? parent->depth + 1 : 1;
  lvl->name = "t" + std::to_string(lvl->depth);
  lvl->modulus = modulus.coeffs();
  lvl->signature = signature;
  std::vector<std::complex<double>> approx;
  for (const auto& c : lvl->modulus) approx.push_back(c.approx());
  auto roots = approx_roots(approx);
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    if (std::abs(a.real() - b.real()) > 1e-9) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  lvl->approx_root = roots.empty() ? 0.0 : roots.front();
  return lvl;
}

}  // namespace

std::pair<Tower, TowerElement> Tower::extend(const TowerPoly& modulus_in, FieldContext* ctx) const {
  TowerPoly modulus = modulus_in.monic();
  if (modulus.degree() < 1) throw AlgebraError("cannot adjoin a root of a constant polynomial");
  std::string parent_sig = top_ ? top_->signature : "Q(i)";
  std::string var = "t" + std::to_string(depth() + 1);
  std::string sig = parent_sig + "|" + modulus.str(var);
  // Apply recorded split choices (possibly repeatedly).
  while (ctx) {
    const TowerPoly* choice = ctx->split_choice(sig);
    if (!choice) break;
    modulus = *choice;
    sig = sig + "#" + modulus.str(var);
  }
  if (modulus.degree() == 1) return {*this, -modulus.coeff(0)};
  LevelPtr lvl = make_level(top_, modulus, sig);
  if (ctx) lvl = ctx->intern(lvl);
  return {Tower(lvl), TowerElement::generator(lvl)};
}

std::string Tower::describe() const {
  std::string out;
  for (const auto& l : levels()) {
    if (!out.empty()) out += ", ";
    out += l->name + ": " + TowerPoly(l->modulus).str(l->name) + " = 0";
  }
  return out.empty() ? "Q(i)" : "Q(i)[" + out + "]";
}

LevelPtr FieldContext::intern(const LevelPtr& candidate) {
  auto [it, inserted] = levels_.emplace(candidate->signature, candidate);
  return it->second;
}

void FieldContext::record_split(const TowerSplit& split) {
  splits_[split.level()->signature] = split.factor().monic();
}

void FieldContext::remember_root(const TowerElement& r) {
  if (r.is_base()) return;
  for (const auto& k : roots_)
    if (k.level() == r.level() && (k - r).is_zero()) return;
  roots_.push_back(r);
}

std::vector<TowerElement> FieldContext::roots_in(const Tower& tower) const {
  std::vector<TowerElement> out;
  for (const auto& r : roots_)
    if (tower.contains(r.level())) out.push_back(r);
  return out;
}

const TowerPoly* FieldContext::split_choice(const std::string& signature) const {
  auto it = splits_.find(signature);
  return it == splits_.end() ? nullptr : &it->second;
}

std::vector<Tower> split_branches(const TowerSplit& split) {
  std::vector<Tower> out;
  int idx = 0;
  for (const auto* p : {&split.factor(), &split.cofactor()}) {
    auto m = p->monic();
    out.emplace_back(make_level(split.level()->parent, m, split.level()->signature + "#b" + std::to_string(idx++)));
  }
  return out;
}

TowerElement project_to_branch(const TowerElement& a, const TowerSplit& split, const Tower& branch) {
  if (a.level() != split.level()) {
    if (a.depth() >= split.level()->depth) throw AlgebraError("element lies above the split level");
    return a;
  }
  const LevelPtr& nl = branch.top();
  auto rem = TowerPoly::divmod(TowerPoly(a.coeffs()), TowerPoly(nl->modulus)).second;
  if (nl->degree() == 1) return rem.coeff(0);
  return TowerElement::from_coeffs(nl, rem.coeffs());
}

// ---------------------------------------------------------------------------
// Root finding

TowerPoly squarefree_part(const TowerPoly& p_in) {
  TowerPoly p = p_in;
  p.trim_semantic();
  if (p.is_zero()) throw AlgebraError("squarefree_part of zero polynomial");
  if (p.degree() == 0) return TowerPoly(std::vector<TowerElement>{TowerElement(1)});
  TowerPoly g = TowerPoly::gcd(p, p.derivative());
  return TowerPoly::divmod(p, g).first.monic();
}

std::vector<std::pair<TowerPoly, int>> squarefree_decomposition(const TowerPoly& p_in) {
  TowerPoly p = p_in;
  p.trim_semantic();
  std::vector<std::pair<TowerPoly, int>> out;
  if (p.degree() <= 0) return out;
  p = p.monic();
  TowerPoly a = TowerPoly::gcd(p, p.derivative());
  TowerPoly b = TowerPoly::divmod(p, a).first;
  TowerPoly c = TowerPoly::divmod(p.derivative(), a).first;
  TowerPoly d = c - b.derivative();
  d.trim_semantic();
  int i = 1;
  while (b.degree() > 0) {
    TowerPoly ai = TowerPoly::gcd(b, d);
    b = TowerPoly::divmod(b, ai).first;
    c = TowerPoly::divmod(d, ai).first;
    if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
    ++i;
    d = c - b.derivative();
    d.trim_semantic();
  }
  return out;
}

namespace {

bool all_rational(const TowerPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const TowerElement& c) { return c.is_base() && c.base().is_rational(); });
}

std::vector<mpz_class> small_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  unsigned long v = n.get_ui();
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      if (d != v / d) out.emplace_back(v / d);
    }
  }
  return out;
}

// A rational root of a rational polynomial, if any.
std::optional<TowerElement> rational_root(const TowerPoly& p) {
  if (!all_rational(p) || p.degree() < 1) return std::nullopt;
  if (p.coeff(0).is_structurally_zero()) return TowerElement(0);
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.base().re().get_den().get_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& c : p.coeffs()) ic.emplace_back(mpq_class(c.base().re() * l).get_num());
  auto nums = small_divisors(ic.front());
  auto dens = small_divisors(ic.back());
  if (nums.empty() || dens.empty()) return std::nullopt;
  std::sort(nums.begin(), nums.end());
  std::sort(dens.begin(), dens.end());
  for (const auto& dn : dens) {
    for (const auto& nm : nums) {
      for (int sign : {1, -1}) {
        mpq_class x(nm * sign, dn);
        x.canonicalize();
        if (x.get_den() != dn) continue;
        mpq_class v = 0;
        for (std::size_t k = ic.size(); k-- > 0;) v = v * x + ic[k];
        if (sgn(v) == 0) return TowerElement(GaussianRational(x));
      }
    }
  }
  return std::nullopt;
}

// Square root of d, reusing an existing quadratic level when d/d0 is a
// square in Q(i).
std::pair<Tower, TowerElement> square_root(const Tower& tower, const TowerElement& d, FieldContext* ctx) {
  if (d.is_base()) {
    if (auto s = d.base().sqrt()) return {tower, TowerElement(*s)};
    for (const auto& lvl : tower.levels()) {
      if (lvl->degree() != 2 || !lvl->modulus[1].is_structurally_zero() || !lvl->modulus[0].is_base()) continue;
      GaussianRational d0 = -lvl->modulus[0].base();
      if (auto s = (d.base() / d0).sqrt()) return {tower, TowerElement::generator(lvl) * TowerElement(*s)};
    }
  }
  return tower.extend(TowerPoly(std::vector<TowerElement>{-d, TowerElement(0), TowerElement(1)}), ctx);
}

void roots_of_squarefree(Tower& tower, TowerPoly q, int mult, std::vector<std::pair<TowerElement, int>>& out,
                         FieldContext* ctx) {
  q = q.monic();
  while (q.degree() >= 1) {
    if (q.degree() == 1) {
      out.emplace_back(-q.coeff(0), mult);
      return;
    }
    if (ctx) {
      bool found = false;
      for (const auto& r : ctx->roots_in(tower)) {
        if (!q.evaluate(r).is_zero()) continue;
        out.emplace_back(r, mult);
        q = TowerPoly::divmod(q, TowerPoly::linear_root(r)).first.monic();
        found = true;
        break;
      }
      if (found) continue;
    }
    if (q.degree() == 2) {
      const auto& b = q.coeff(1);
      TowerElement disc = b * b - TowerElement(4) * q.coeff(0);
      auto [t, s] = square_root(tower, disc, ctx);
      tower = t;
      TowerElement half(GaussianRational(mpq_class(1, 2)));
      out.emplace_back((s - b) * half, mult);
      out.emplace_back((-s - b) * half, mult);
      if (ctx) {
        ctx->remember_root(out[out.size() - 2].first);
        ctx->remember_root(out.back().first);
      }
      return;
    }
    if (auto r = rational_root(q)) {
      out.emplace_back(*r, mult);
      q = TowerPoly::divmod(q, TowerPoly::linear_root(*r)).first;
      continue;
    }
    auto [t, theta] = tower.extend(q, ctx);
    tower = t;
    if (ctx) ctx->remember_root(theta);
    out.emplace_back(theta, mult);
    q = TowerPoly::divmod(q, TowerPoly::linear_root(theta)).first.monic();
  }
}

}  // namespace

std::pair<Tower, TowerElement> adjoin_root(const Tower& tower, const TowerPoly& p, FieldContext* ctx) {
  TowerPoly q = squarefree_part(p);
  if (q.degree() < 1) throw AlgebraError("adjoin_root of a constant polynomial");
  if (q.degree() == 1) return {tower, -q.coeff(0)};
  if (auto r = rational_root(q)) return {tower, *r};
  if (q.degree() == 2 && q.coeff(1).is_structurally_zero() && q.coeff(0).is_base()) {
    if (auto s = (-q.coeff(0).base()).sqrt()) return {tower, TowerElement(*s)};
  }
  return tower.extend(q, ctx);
}

std::pair<Tower, std::vector<std::pair<TowerElement, int>>> all_roots(const Tower& tower, const TowerPoly& p,
                                                                      FieldContext* ctx) {
  Tower t = tower;
  std::vector<std::pair<TowerElement, int>> out;
  for (const auto& [q, k] : squarefree_decomposition(p)) roots_of_squarefree(t, q, k, out, ctx);
  return {t, out};
}

TowerPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw AlgebraError("cyclotomic index must be positive");
  // t^n - 1 divided by all Phi_d, d | n, d < n
  std::vector<TowerElement> c(static_cast<std::size_t>(n) + 1);
  c[0] = TowerElement(-1);
  c[n] = TowerElement(1);
  TowerPoly p(std::move(c));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = TowerPoly::divmod(p, cyclotomic_polynomial(d)).first;
  return p;
}

std::pair<Tower, TowerElement> adjoin_root_of_unity(const Tower& tower, int n, FieldContext* ctx) {
  if (n < 1) throw AlgebraError("root of unity order must be positive");
  if (n == 1) return {tower, TowerElement(1)};
  if (n == 2) return {tower, TowerElement(-1)};
  if (n == 4) return {tower, TowerElement(GaussianRational::imaginary_unit())};
  const TowerPoly phi = cyclotomic_polynomial(n);
  if (ctx) {
    // a ratio of two known roots of the same binomial often is one already
    auto known = ctx->roots_in(tower);
    for (const auto& r : known)
      if (phi.evaluate(r).is_zero()) return {tower, r};
    for (std::size_t a = 0; a < known.size(); ++a)
      for (std::size_t b = 0; b < known.size(); ++b) {
        if (a == b) continue;
        TowerElement z = known[a] / known[b];
        if (phi.evaluate(z).is_zero()) return {tower, z};
      }
  }
  auto res = tower.extend(phi, ctx);
  if (ctx) ctx->remember_root(res.second);
  return res;
}

bool ParametricPolynomial::is_zero() const {
  return std::all_of(p_.coeffs().begin(), p_.coeffs().end(), [](const TowerElement& c) { return c.is_zero(); });
}

}  // namespace polarclust
