#include "liedeg/scalars.hpp"

#include <stdexcept>
#include <utility>

namespace liedeg {

// ---------------------------------------------------------------------------
// Rat

Rat::Rat(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rat(mpq_class(1 / q_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rat::to_string() const { return q_.get_str(); }

// ---------------------------------------------------------------------------
// GaussRat

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rat n = norm();
  return {re_ / n, -im_ / n};
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rat re = re_ * o.re_ - im_ * o.im_;
  Rat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

// "i", "2*i", "1/2*i" for a positive multiple of i.
std::string imaginary_magnitude(const Rat& m) {
  if (m == Rat(1)) return "i";
  return m.to_string() + "*i";
}

}  // namespace

std::string GaussRat::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) {
    return (im_.sign() < 0 ? "-" : "") + imaginary_magnitude(im_.sign() < 0 ? -im_ : im_);
  }
  std::string s = re_.to_string();
  s += im_.sign() < 0 ? " - " : " + ";
  s += imaginary_magnitude(im_.sign() < 0 ? -im_ : im_);
  return s;
}

bool GaussRat::is_compound() const { return !re_.is_zero() && !im_.is_zero(); }

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(GaussRat constant) {
  if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms)
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::monomial(GaussRat coeff, int exponent) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(exponent, std::move(coeff));
  return p;
}

GaussRat LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? GaussRat() : it->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::scaled(const GaussRat& c) const {
  if (c.is_zero()) return {};
  LaurentPoly p;
  for (const auto& [e, v] : terms_) p.terms_.emplace_hint(p.terms_.end(), e, v * c);
  return p;
}

void LaurentPoly::add_term(int exponent, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e, -c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    // Split off an overall sign when the coefficient is purely real or imaginary.
    bool negative = false;
    GaussRat mag = c;
    if (!c.is_compound()) {
      const Rat& part = c.is_real() ? c.re() : c.im();
      if (part.sign() < 0) {
        negative = true;
        mag = -c;
      }
    }
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    if (e == 1) {
      mono = "t";
    } else if (e != 0) {
      mono = "t^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += factor_string(mag);
    } else if (mag == GaussRat(1)) {
      s += mono;
    } else {
      s += factor_string(mag) + "*" + mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers for gcd reduction. Index = exponent.

namespace {

using Dense = std::vector<GaussRat>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense to_dense(const LaurentPoly& p) {
  Dense d;
  if (p.is_zero()) return d;
  d.resize(static_cast<size_t>(p.high_exponent()) + 1);
  for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d) {
  LaurentPoly::Terms terms;
  for (size_t e = 0; e < d.size(); ++e)
    if (!d[e].is_zero()) terms.emplace(static_cast<int>(e), d[e]);
  return LaurentPoly(std::move(terms));
}

// a = q*b + r; b must be non-zero (trimmed).
void divmod(Dense a, const Dense& b, Dense& q, Dense& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, GaussRat());
  GaussRat lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    GaussRat f = a.back() * lead_inv;
    q[shift] = f;
    for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Dense exact_quotient(const Dense& a, const Dense& b) {
  Dense q, r;
  divmod(a, b, q, r);
  trim(q);
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(GaussRat constant) : num_(std::move(constant)), den_(1) {}

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1);
    return;
  }
  // Pull the t-power and leading unit of den into num.
  int den_shift = den.low_exponent();
  GaussRat den_unit_inv = den.coeff(den_shift).inverse();
  den = den.shifted(-den_shift).scaled(den_unit_inv);
  num = num.shifted(-den_shift).scaled(den_unit_inv);
  if (den == LaurentPoly(1)) {
    num_ = std::move(num);
    den_ = std::move(den);
    return;
  }
  int num_shift = num.low_exponent();
  Dense p = to_dense(num.shifted(-num_shift));
  Dense q = to_dense(den);
  Dense g = gcd(p, q);
  if (g.size() > 1) {
    // g(0) != 0 because q(0) = 1.
    p = exact_quotient(p, g);
    q = exact_quotient(q, g);
    GaussRat unit = q.front().inverse();
    for (auto& c : p) c *= unit;
    for (auto& c : q) c *= unit;
  }
  num_ = from_dense(p).shifted(num_shift);
  den_ = from_dense(q);
}

std::optional<int> RatFunc::valuation() const {
  if (num_.is_zero()) return std::nullopt;
  return num_.low_exponent();
}

std::optional<GaussRat> RatFunc::limit_at_zero() const {
  if (num_.is_zero()) return GaussRat();
  if (num_.low_exponent() < 0) return std::nullopt;
  return num_.coeff(0);  // den(0) = 1
}

std::vector<GaussRat> RatFunc::taylor(int order) const {
  if (order < 0) throw std::invalid_argument("taylor: negative order");
  if (!num_.is_zero() && num_.low_exponent() < 0)
    throw std::domain_error("taylor: negative valuation " + std::to_string(num_.low_exponent()));
  std::vector<GaussRat> c(static_cast<size_t>(order) + 1);
  // num = den * series, den(0) = 1.
  for (int j = 0; j <= order; ++j) {
    GaussRat v = num_.coeff(j);
    for (const auto& [e, d] : den_.terms()) {
      if (e == 0 || e > j) continue;
      v -= d * c[static_cast<size_t>(j - e)];
    }
    c[static_cast<size_t>(j)] = std::move(v);
  }
  return c;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    *this = den_ == LaurentPoly(1) ? RatFunc(num_ + o.num_, den_, Normalized{})
                                   : RatFunc(num_ + o.num_, den_);
  } else {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) {
    *this = RatFunc();
  } else if (den_ == LaurentPoly(1) && o.den_ == LaurentPoly(1)) {
    *this = RatFunc(num_ * o.num_, den_, Normalized{});
  } else {
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
  }
  return *this;
}

std::string RatFunc::to_string() const {
  if (den_ == LaurentPoly(1)) return num_.to_string();
  return factor_string(num_) + "/(" + den_.to_string() + ")";
}

bool RatFunc::is_compound() const { return den_ == LaurentPoly(1) && num_.is_compound(); }

}  // namespace liedeg
