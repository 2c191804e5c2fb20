#include "doctest.h"

#include "liedeg/scalar_syntax.hpp"
#include "liedeg/scalars.hpp"
#include "support.hpp"

using namespace liedeg;
using testing::Rng;

namespace {

RatFunc rf(const char* s) { return parse_ratfunc(s); }
GaussRat gr(const char* s) { return parse_gaussrat(s); }

std::vector<GaussRat> coeffs(std::initializer_list<long> xs) {
  std::vector<GaussRat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("scalars") {
  TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
    Rat q(mpz_class(6), mpz_class(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q.to_string() == "-3/2");
    CHECK(Rat(mpz_class(4), mpz_class(2)).to_string() == "2");
    CHECK_THROWS_AS(Rat(mpz_class(1), mpz_class(0)), std::domain_error);
    CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
  }

  TEST_CASE("gaussian rationals") {
    GaussRat a = gr("3/2 + i");
    CHECK(a.re() == Rat(mpz_class(3), mpz_class(2)));
    CHECK(a.im() == Rat(1));
    CHECK(a.to_string() == "3/2 + i");
    CHECK(GaussRat::i().to_string() == "i");
    CHECK((-GaussRat::i()).to_string() == "-i");
    CHECK((GaussRat(2) * GaussRat::i()).to_string() == "2*i");
    CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
    CHECK(gr("1 + i").inverse() == gr("1/2 - 1/2*i"));
    CHECK(gr("1 + 2*i").norm() == Rat(5));
    CHECK_THROWS_AS(GaussRat(0).inverse(), std::domain_error);
  }

  TEST_CASE("laurent polynomials drop zero coefficients") {
    LaurentPoly p = LaurentPoly::t() + LaurentPoly(1);
    LaurentPoly q = p - LaurentPoly::t();
    CHECK(q == LaurentPoly(1));
    CHECK(q.terms().size() == 1);
    CHECK((p - p).is_zero());
    CHECK((p - p).terms().empty());
    CHECK(LaurentPoly::monomial(GaussRat(1), -1).to_string() == "t^-1");
    CHECK(rf("1 + 2*t - t^2").to_string() == "1 + 2*t - t^2");
    CHECK(rf("(1 + 2*i)*t").to_string() == "(1 + 2*i)*t");
  }

  TEST_CASE("valuation") {
    CHECK_FALSE(RatFunc(0).valuation().has_value());
    CHECK(rf("t^-2*(1+t)/(1-t)").valuation() == -2);
    CHECK(rf("(t^3+t^5)/(2+t)").valuation() == 3);
    CHECK(rf("5").valuation() == 0);
  }

  TEST_CASE("normal form: polynomial denominator with constant term 1") {
    RatFunc f = rf("(t^3+t^5)/(2+t)");
    CHECK(f.den().is_polynomial());
    CHECK(f.den().coeff(0) == GaussRat(1));
    CHECK(f.den() == rf("1 + 1/2*t").num());
    CHECK(f.num() == rf("1/2*t^3 + 1/2*t^5").num());

    RatFunc g = rf("(t^2 - 1)/(t - 1)");
    CHECK(g == rf("t + 1"));
    CHECK(g.den() == LaurentPoly(1));

    RatFunc h = rf("1/t^2");
    CHECK(h.num() == LaurentPoly::monomial(GaussRat(1), -2));
    CHECK(h.den() == LaurentPoly(1));
    CHECK_THROWS_AS(RatFunc(LaurentPoly(1), LaurentPoly()), std::domain_error);
  }

  TEST_CASE("limit at zero") {
    CHECK(rf("t/(1+t)").limit_at_zero() == GaussRat(0));
    CHECK(rf("(2+t)/(1+t)").limit_at_zero() == GaussRat(2));
    CHECK_FALSE(rf("t^-1").limit_at_zero().has_value());
    CHECK(rf("(3 + i*t)/(2 - t)").limit_at_zero() == gr("3/2"));
  }

  TEST_CASE("taylor coefficients") {
    CHECK(rf("1/(1-t)").taylor(2) == coeffs({1, 1, 1}));
    CHECK(rf("t^2").taylor(3) == coeffs({0, 0, 1, 0}));
    CHECK(rf("(1+t)/(1-t)").taylor(2) == coeffs({1, 2, 2}));
    // long division reference for (1+t)/(1-t)
    CHECK(testing::oracle_series(coeffs({1, 1}), coeffs({1, -1}), 2) == coeffs({1, 2, 2}));
    CHECK_THROWS_AS(rf("t^-1 + 1").taylor(2), std::domain_error);
  }

  TEST_CASE("taylor agrees with long division on random polynomial quotients") {
    Rng rng(11);
    for (int n = 0; n < testing::kPropertyCases; ++n) {
      LaurentPoly num = testing::rand_laurent(rng, 0, 4, 4);
      LaurentPoly den = testing::rand_laurent(rng, 1, 3, 2) + LaurentPoly(testing::rand_nonzero_gauss(rng));
      std::vector<GaussRat> a(6, GaussRat(0)), b(4, GaussRat(0));
      for (const auto& [e, c] : num.terms()) a[e] = c;
      for (const auto& [e, c] : den.terms()) b[e] = c;
      CHECK(RatFunc(num, den).taylor(5) == testing::oracle_series(a, b, 5));
    }
  }

  TEST_CASE("scalar text round-trips through to_string") {
    Rng rng(5);
    for (int n = 0; n < testing::kPropertyCases; ++n) {
      RatFunc f = testing::rand_ratfunc(rng);
      CHECK(parse_ratfunc(f.to_string()) == f);
      GaussRat g = testing::rand_gauss(rng);
      CHECK(parse_gaussrat(g.to_string()) == g);
    }
  }

  TEST_CASE("scalar syntax errors") {
    CHECK_THROWS_AS(parse_ratfunc("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("(1 + t"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("alpha"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("t^99999"), SyntaxError);
    CHECK_THROWS_AS(parse_gaussrat("t"), SyntaxError);
    CHECK_THROWS_AS(parse_ratfunc("0^-1"), SyntaxError);
    ParameterBindings b{{"alpha", gr("1/3")}};
    CHECK(parse_ratfunc("2 alpha", &b) == RatFunc(gr("2/3")));
    try {
      parse_ratfunc("1 + $");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 5);
      CHECK(e.kind() == SyntaxError::Kind::Lexical);
    }
  }
}

TEST_SUITE("property") {
  TEST_CASE("field axioms on GaussRat") {
    Rng rng(1);
    for (int n = 0; n < 2 * testing::kPropertyCases; ++n) {
      GaussRat a = testing::rand_gauss(rng), b = testing::rand_gauss(rng), c = testing::rand_gauss(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == GaussRat(0));
      if (!a.is_zero()) CHECK(a * a.inverse() == GaussRat(1));
    }
  }

  TEST_CASE("field axioms on RatFunc") {
    Rng rng(2);
    for (int n = 0; n < 2 * testing::kPropertyCases; ++n) {
      RatFunc a = testing::rand_ratfunc(rng), b = testing::rand_ratfunc(rng), c = testing::rand_ratfunc(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == RatFunc(0));
      if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
    }
  }

  TEST_CASE("valuation axioms") {
    Rng rng(3);
    for (int n = 0; n < testing::kPropertyCases; ++n) {
      RatFunc f = testing::rand_ratfunc(rng), g = testing::rand_ratfunc(rng);
      auto vf = f.valuation(), vg = g.valuation();
      auto vfg = (f * g).valuation();
      if (vf && vg) {
        CHECK(vfg == *vf + *vg);
      } else {
        CHECK_FALSE(vfg.has_value());
      }
      auto vsum = (f + g).valuation();
      if (vf && vg && vsum) CHECK(*vsum >= std::min(*vf, *vg));
      if (!vf && vg) CHECK(vsum == vg);
      if (vf && vf >= 0) CHECK(f.limit_at_zero() == f.taylor(0)[0]);
      if (vf && vf < 0) CHECK_FALSE(f.limit_at_zero().has_value());
      CHECK(f.renormalized() == f);
    }
  }
}
