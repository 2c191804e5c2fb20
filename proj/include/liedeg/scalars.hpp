#pragma once

// Exact coefficient tower used throughout liedeg:
//
//   Rat        arbitrary-precision rationals (GMP backed)
//   GaussRat   Q(i), the base field k
//   LaurentPoly  k[t, 1/t]
//   RatFunc    k(t) with its t-adic valuation
//
// Every type is an immutable value type; all operations are pure.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liedeg {

class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(implicit)
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class q);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat inverse() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

  /// "p" or "p/q" with the sign on the numerator.
  std::string to_string() const;

 private:
  mpq_class q_{0};
};

/// re + im*i over the rationals.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long value) : re_(value) {}  // NOLINT(implicit)
  GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT(implicit)
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return {Rat(0), Rat(1)}; }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  /// re^2 + im^2
  Rat norm() const { return re_ * re_ + im_ * im_; }
  GaussRat conj() const { return {re_, -im_}; }
  GaussRat inverse() const;

  GaussRat operator-() const { return {-re_, -im_}; }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Scalar syntax: "3/2", "-i", "2*i", "1/2 - 3*i".
  std::string to_string() const;
  /// True when to_string() needs parentheses to be used as a factor.
  bool is_compound() const;

 private:
  Rat re_;
  Rat im_;
};

/// Finite sum of c_e t^e with GaussRat coefficients; no stored zeros.
class LaurentPoly {
 public:
  using Terms = std::map<int, GaussRat>;

  LaurentPoly() = default;
  LaurentPoly(GaussRat constant);  // NOLINT(implicit)
  LaurentPoly(long constant) : LaurentPoly(GaussRat(constant)) {}  // NOLINT(implicit)
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(GaussRat coeff, int exponent);
  static LaurentPoly t() { return monomial(GaussRat(1), 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Only meaningful when non-zero.
  int low_exponent() const { return terms_.begin()->first; }
  int high_exponent() const { return terms_.rbegin()->first; }
  GaussRat coeff(int exponent) const;
  bool is_polynomial() const { return is_zero() || low_exponent() >= 0; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && low_exponent() == 0); }

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(const GaussRat& c) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;
  /// True when to_string() is a sum and needs parentheses as a factor.
  bool is_compound() const {
    return terms_.size() > 1 || (terms_.size() == 1 && low_exponent() == 0 && terms_.begin()->second.is_compound());
  }

 private:
  void add_term(int exponent, const GaussRat& c);
  Terms terms_;
};

/// An element of k(t) in normal form: den is an ordinary polynomial with
/// constant term 1 and gcd(num, den) = 1, so the valuation is the lowest
/// exponent of num.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long constant) : RatFunc(GaussRat(constant)) {}  // NOLINT(implicit)
  RatFunc(GaussRat constant);  // NOLINT(implicit)
  RatFunc(LaurentPoly num);  // NOLINT(implicit)
  /// Normalizes; throws std::domain_error when den is zero.
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc t() { return RatFunc(LaurentPoly::t()); }
  static RatFunc t_pow(int k) { return RatFunc(LaurentPoly::monomial(GaussRat(1), k)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_ == LaurentPoly(1); }
  /// Only meaningful when is_constant().
  GaussRat constant() const { return num_.coeff(0); }

  /// t-adic valuation; std::nullopt stands for +infinity (f = 0).
  std::optional<int> valuation() const;
  /// Value at t = 0 when the valuation is non-negative.
  std::optional<GaussRat> limit_at_zero() const;
  /// Power-series coefficients c_0..c_order at t = 0.
  /// Throws std::domain_error when the valuation is negative.
  std::vector<GaussRat> taylor(int order) const;

  RatFunc inverse() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Re-normalizes an already normalized value; used to check idempotence.
  RatFunc renormalized() const { return RatFunc(num_, den_); }

  std::string to_string() const;
  bool is_compound() const;

 private:
  struct Normalized {};
  RatFunc(LaurentPoly num, LaurentPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

/// Parenthesized form of x.to_string() when it is a sum.
template <typename S>
std::string factor_string(const S& x) {
  return x.is_compound() ? "(" + x.to_string() + ")" : x.to_string();
}

}  // namespace liedeg
