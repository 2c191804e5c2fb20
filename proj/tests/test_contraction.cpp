#include "doctest.h"

#include "liedeg/catalog.hpp"
#include "liedeg/contraction.hpp"
#include "liedeg/deformation.hpp"
#include "liedeg/degeneration.hpp"
#include "liedeg/invariants.hpp"
#include "liedeg/scalar_syntax.hpp"
#include "support.hpp"

using namespace liedeg;
using testing::Rng;

namespace {

RatFunc rf(const char* s) { return parse_ratfunc(s); }

Matrix<RatFunc> rf_matrix(std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<RatFunc>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (const char* s : row) out.back().push_back(rf(s));
  }
  return Matrix<RatFunc>::from_rows(out);
}

// new basis f1 = t e1, f2 = e2 + e3, f3 = t e2 (columns)
Witness r2c_witness() {
  return make_witness(rf_matrix({{"t", "0", "0"}, {"0", "1", "t"}, {"0", "1", "0"}}), Convention::NewBasis);
}

Vec<GaussRat> v3(long a, long b, long c) { return {GaussRat(a), GaussRat(b), GaussRat(c)}; }

}  // namespace

TEST_SUITE("contraction") {
  TEST_CASE("universal scaling t^-1 I") {
    for (const Law& mu : testing::base_laws()) {
      ContractionResult r = contract(mu, scaling_witness(mu.dim()));
      LawT expect = lift(mu).map([](const RatFunc& x) { return RatFunc::t() * x; });
      CHECK(r.transported == expect);
      REQUIRE(r.limit);
      CHECK(*r.limit == Law(mu.dim()));
    }
  }

  TEST_CASE("identity witness changes nothing") {
    Law mu = catalog("r3");
    ContractionResult r = contract(mu, make_witness(Matrix<RatFunc>::identity(3), Convention::Action));
    CHECK(r.transported == lift(mu));
    CHECK(*r.limit == mu);
  }

  TEST_CASE("r2+C contracts to n3") {
    Law mu = catalog("r2+C");
    LawT tr = transport(mu, r2c_witness());
    // hand expansion: [f1,f2] = t[e1,e2+e3] = t e2 = f3, [f1,f3] = t^2 e2 = t f3, [f2,f3] = 0
    LawT expect(3);
    expect.set(0, 1, 2, RatFunc(1));
    expect.set(0, 2, 2, RatFunc::t());
    CHECK(tr == expect);
    ContractionResult r = limit(tr);
    REQUIRE(r.limit);
    CHECK(*r.limit == catalog("n3"));
    CHECK(r.min_valuation == 0);
  }

  TEST_CASE("negative valuation means no limit") {
    LawT tr(2);
    tr.set(0, 1, 1, RatFunc::t_pow(-1));
    ContractionResult r = limit(tr);
    CHECK_FALSE(r.limit);
    CHECK(r.min_valuation == -1);
    REQUIRE(r.offending);
    CHECK(*r.offending == std::array<size_t, 3>{0, 1, 1});

    // scaling by t instead of t^-1 blows r2 up
    ContractionResult up = contract(catalog("r2"), make_witness(Matrix<RatFunc>::identity(2).scaled(RatFunc::t()),
                                                               Convention::Action));
    CHECK_FALSE(up.limit);
  }

  TEST_CASE("singular witnesses are rejected") {
    CHECK_THROWS_AS(make_witness(rf_matrix({{"t", "t"}, {"1", "1"}}), Convention::Action), std::invalid_argument);
  }

  TEST_CASE("transport composes") {
    Law mu = catalog("sl2");
    Witness g = make_witness(rf_matrix({{"1", "t", "0"}, {"0", "1", "0"}, {"0", "0", "t^-1"}}), Convention::Action);
    Witness h = r2c_witness();
    CHECK(transport(mu, g.compose(h)) == act(g, transport(mu, h)));
  }

  TEST_CASE("Inonu-Wigner: sl2 along span{e3}") {
    Law sl2 = catalog("sl2");
    IwContraction iw = iw_contract(sl2, {v3(0, 0, 1)});
    REQUIRE(iw.result.limit);
    Law expect(3);
    expect.set(0, 2, 0, GaussRat(-2));
    expect.set(1, 2, 1, GaussRat(2));
    CHECK(*iw.result.limit == expect);
    // rescale e3 by -1/2 and reverse the basis order: r3_m1
    Matrix<GaussRat> h = Matrix<GaussRat>::from_rows({{GaussRat(0), GaussRat(0), GaussRat(1)},
                                                      {GaussRat(0), GaussRat(1), GaussRat(0)},
                                                      {parse_gaussrat("-1/2"), GaussRat(0), GaussRat(0)}});
    CHECK(act(BasisChange<GaussRat>::from_new_basis(h), *iw.result.limit) == catalog("r3_m1"));
  }

  TEST_CASE("Inonu-Wigner: trivial and central cases") {
    Law c3(3);
    IwContraction a = iw_contract(c3, {v3(1, 1, 0)});
    CHECK(*a.result.limit == c3);
    IwContraction n = iw_contract(catalog("n3"), {v3(0, 0, 1)});
    CHECK(*n.result.limit == c3);
    IwContraction whole = iw_contract(catalog("sl2"), {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
    CHECK(*whole.result.limit == catalog("sl2"));
  }

  TEST_CASE("Inonu-Wigner rejects non-subalgebras and dependent vectors") {
    CHECK_THROWS_AS(iw_contract(catalog("sl2"), {v3(1, 0, 0), v3(0, 1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(iw_contract(catalog("sl2"), {v3(1, 0, 0), v3(2, 0, 0)}), std::invalid_argument);
  }

  TEST_CASE("Inonu-Wigner limit structure") {
    struct Case {
      const char* name;
      std::vector<Vec<GaussRat>> u;
    };
    std::vector<Case> cases = {{"sl2", {v3(0, 0, 1)}},
                               {"sl2", {v3(1, 0, 0), v3(0, 0, 1)}},
                               {"sl2", {v3(0, 1, 0), v3(0, 0, 1)}},
                               {"r3", {v3(1, 0, 0)}},
                               {"r3", {v3(0, 1, 0), v3(0, 0, 1)}},
                               {"r2+C", {v3(1, 0, 0), v3(0, 1, 0)}},
                               {"r3_alpha(2)", {v3(1, 0, 0), v3(0, 0, 1)}}};
    for (const auto& c : cases) {
      CAPTURE(c.name);
      Law mu = catalog_ref(c.name);
      IwContraction iw = iw_contract(mu, c.u);
      REQUIRE(iw.result.limit);
      const Law& lim = *iw.result.limit;
      CHECK(validate(lim).ok());
      for (const auto& x : iw.complement)
        for (const auto& y : iw.complement) CHECK(lim.bracket(x, y) == Vec<GaussRat>(3, GaussRat(0)));
      CHECK(is_ideal(lim, iw.complement));
      for (const auto& x : iw.subalgebra)
        for (const auto& y : iw.subalgebra) CHECK(lim.bracket(x, y) == mu.bracket(x, y));
    }
  }

  TEST_CASE("End(V_A) formulation") {
    Law r2c = catalog("r2+C");
    auto lp = [](std::vector<std::vector<long>> rows, int tpos = -1) {
      Matrix<LaurentPoly> m(rows.size(), rows.size());
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) m(i, j) = LaurentPoly(rows[i][j]);
      if (tpos >= 0) m(tpos, tpos) = LaurentPoly::t();
      return m;
    };
    EndoContractionReport id = check_endo_contraction(r2c, lp({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id.in_lattice);
    CHECK(*id.result.limit == r2c);
    CHECK(id.kernel.empty());
    CHECK(id.image.size() == 3);
    CHECK(id.exact_sequence_verified());

    Matrix<LaurentPoly> tI(3, 3);
    for (size_t k = 0; k < 3; ++k) tI(k, k) = LaurentPoly::t();
    EndoContractionReport scaled = check_endo_contraction(catalog("sl2"), tI);
    CHECK(scaled.in_lattice);
    CHECK(*scaled.result.limit == Law(3));
    CHECK(scaled.image.empty());
    CHECK(scaled.kernel.size() == 3);
    CHECK(scaled.exact_sequence_verified());

    EndoContractionReport d = check_endo_contraction(r2c, lp({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, 2));
    CHECK(d.in_lattice);
    CHECK(*d.result.limit == r2c);
    CHECK(d.image.size() == 2);
    CHECK(d.image_is_subalgebra);
    CHECK(d.kernel_is_ideal);
    CHECK(d.kernel_is_nilpotent);
    CHECK(d.exact_sequence_verified());

    Matrix<LaurentPoly> bad(3, 3);
    CHECK_THROWS_AS(check_endo_contraction(r2c, bad), std::invalid_argument);
    Matrix<LaurentPoly> neg = lp({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    neg(0, 0) = LaurentPoly::monomial(GaussRat(1), -1);
    CHECK_THROWS_AS(check_endo_contraction(r2c, neg), std::invalid_argument);
  }

  TEST_CASE("induced deformations") {
    Law sl2 = catalog("sl2");
    TruncatedDeformation s = induced_deformation(sl2, scaling_witness(3), 3);
    CHECK(s.base == Law(3));
    REQUIRE(s.order() == 3);
    CHECK(s.terms[0] == sl2);
    CHECK(s.terms[1] == Law(3));
    CHECK(s.terms[2] == Law(3));

    TruncatedDeformation id = induced_deformation(sl2, make_witness(Matrix<RatFunc>::identity(3), Convention::Action), 2);
    CHECK(id.base == sl2);
    CHECK(id.terms[0] == Law(3));

    TruncatedDeformation r = induced_deformation(catalog("r2+C"), r2c_witness(), 1);
    CHECK(r.base == catalog("n3"));
    Law phi1(3);
    phi1.set(0, 2, 2, GaussRat(1));
    CHECK(r.terms[0] == phi1);
    CHECK(is_two_cocycle(r.base, r.terms[0]).is_cocycle);

    CHECK_THROWS_AS(induced_deformation(catalog("r2"), make_witness(Matrix<RatFunc>::identity(2).scaled(RatFunc::t()),
                                                                   Convention::Action),
                                        1),
                    std::domain_error);
  }
}

TEST_SUITE("property") {
  TEST_CASE("every existing limit is a Lie algebra") {
    Rng rng(41);
    static const std::vector<Law> laws = testing::base_laws();
    int with_limit = 0;
    for (int n = 0; n < testing::kPropertyCases; ++n) {
      const Law& mu = laws[static_cast<size_t>(n) % laws.size()];
      ContractionResult r = contract(mu, make_witness(testing::rand_monomial_witness(rng, mu.dim()), Convention::Action));
      if (!r.limit) continue;
      ++with_limit;
      CHECK(validate(*r.limit).ok());
    }
    MESSAGE(with_limit << " of " << testing::kPropertyCases << " witnesses had a limit");
    CHECK(with_limit >= 100);
  }

  TEST_CASE("contraction-induced deformations have no Jacobi defect up to order 3") {
    Rng rng(42);
    static const std::vector<Law> laws = testing::base_laws();
    int checked = 0;
    for (int n = 0; checked < testing::kPropertyCases; ++n) {
      const Law& mu = laws[static_cast<size_t>(n) % laws.size()];
      Witness g = make_witness(testing::rand_monomial_witness(rng, mu.dim()), Convention::Action);
      if (!contract(mu, g).limit) continue;
      ++checked;
      TruncatedDeformation d = induced_deformation(mu, g, 3);
      for (const auto& defect : jacobi_defect(d)) CHECK(defect.is_zero());
      if (d.order() >= 1) CHECK(is_two_cocycle(d.base, d.terms[0]).is_cocycle);
    }
  }

  TEST_CASE("monotonicity battery along verified witnesses") {
    Rng rng(43);
    static const std::vector<Law> laws = testing::base_laws();
    int checked = 0, strict = 0;
    for (int n = 0; checked < testing::kPropertyCases; ++n) {
      const Law& mu = laws[static_cast<size_t>(n) % laws.size()];
      Witness g = make_witness(testing::rand_monomial_witness(rng, mu.dim()), Convention::Action);
      ContractionResult r = contract(mu, g);
      if (!r.limit) continue;
      ++checked;
      CHECK(verify(mu, *r.limit, g).status == VerdictStatus::Verified);
      InvariantProfile a = profile(mu), b = profile(*r.limit);
      DegenerationVerdict v = obstruct(a, b);
      CHECK(v.status == VerdictStatus::Consistent);
      if (!(a == b)) {
        ++strict;
        CHECK(a.orbit_dim > b.orbit_dim);
      }
    }
    MESSAGE(strict << " proper degenerations among " << checked);
  }
}
