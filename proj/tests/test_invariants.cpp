#include "doctest.h"

#include "liedeg/catalog.hpp"
#include "liedeg/invariants.hpp"
#include "support.hpp"

using namespace liedeg;
using testing::Rng;

namespace {

using Dims = std::vector<size_t>;

size_t binomial(size_t n, size_t k) {
  size_t r = 1;
  for (size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

bool is_zero_matrix(const Matrix<GaussRat>& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

long euler(const Dims& betti) {
  long s = 0;
  for (size_t p = 0; p < betti.size(); ++p) s += (p % 2 ? -1 : 1) * static_cast<long>(betti[p]);
  return s;
}

// tr ad x = 0 for every basis vector
bool unimodular(const Law& mu) {
  for (size_t i = 0; i < mu.dim(); ++i) {
    GaussRat tr(0);
    for (size_t j = 0; j < mu.dim(); ++j) tr += mu(i, j, j);
    if (!tr.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("series dimensions") {
    Series n3 = series_dims(catalog("n3"));
    CHECK(n3.lower_central.dims == Dims{3, 1, 0});
    CHECK(n3.derived.dims == Dims{3, 1, 0});
    Series c3 = series_dims(catalog("C3"));
    CHECK(c3.lower_central.dims == Dims{3, 0});
    CHECK(c3.derived.dims == Dims{3, 0});
    Series r2c = series_dims(catalog("r2+C"));
    CHECK(r2c.lower_central.at(0) == 3);
    CHECK(r2c.lower_central.at(1) == 1);
    CHECK(r2c.lower_central.at(2) == 1);
    CHECK(r2c.lower_central.at(7) == 1);
    CHECK(r2c.derived.dims == Dims{3, 1, 0});
    Series sl2 = series_dims(catalog("sl2"));
    CHECK(sl2.lower_central.dims == Dims{3});
    CHECK(sl2.derived.dims == Dims{3});
  }

  TEST_CASE("center") {
    CHECK(center_dim(catalog("n3")) == 1);
    CHECK(center_dim(catalog("sl2")) == 0);
    CHECK(center_dim(Law(5)) == 5);
    CHECK(center_dim(catalog("h3+C")) == 2);
  }

  TEST_CASE("derivations and orbit dimension") {
    CHECK(der_dim(catalog("sl2")) == 3);
    CHECK(der_dim(Law(3)) == 9);
    CHECK(der_dim(catalog("sl2+C")) == 4);
    CHECK(der_dim(catalog("r2+r2")) == 4);
    CHECK(profile(catalog("sl2")).orbit_dim == 6);
    CHECK(profile(catalog("sl2+C")).orbit_dim == 12);
    CHECK(profile(catalog("r2+r2")).orbit_dim == 12);
    // every returned matrix is a derivation: D[x,y] = [Dx,y] + [x,Dy]
    Law mu = catalog("r3");
    for (const auto& d : derivations(mu))
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
          Vec<GaussRat> lhs = d * mu.bracket_basis(i, j);
          Vec<GaussRat> a = mu.bracket(d.column(i), basis_vector(3, j));
          Vec<GaussRat> b = mu.bracket(basis_vector(3, i), d.column(j));
          for (size_t r = 0; r < 3; ++r) CHECK(lhs[r] == a[r] + b[r]);
        }
  }

  TEST_CASE("cohomology examples") {
    CHECK(cohomology_dims(catalog("n3"), Coefficients::Trivial) == Dims{1, 2, 2, 1});
    CHECK(cohomology_dims(catalog("sl2"), Coefficients::Adjoint)[2] == 0);
    CHECK(cohomology_dims(catalog("sl2"), Coefficients::Trivial) == Dims{1, 0, 0, 1});
    for (size_t n = 1; n <= 5; ++n) {
      Dims b = cohomology_dims(Law(n), Coefficients::Trivial);
      for (size_t p = 0; p <= n; ++p) CHECK(b[p] == binomial(n, p));
    }
  }

  TEST_CASE("n3 betti numbers match the brute-force differential") {
    Law n3 = catalog("n3");
    CHECK(testing::oracle_betti(n3) == Dims{1, 2, 2, 1});
    CHECK(testing::oracle_betti(n3) == cohomology_dims(n3, Coefficients::Trivial));
    // the explicit matrices agree up to the coordinate order both use
    for (size_t p = 0; p < 3; ++p) {
      auto oracle = testing::oracle_trivial_differential(n3, p);
      Matrix<GaussRat> d = coboundary_matrix(n3, p, Coefficients::Trivial);
      REQUIRE(d.rows() == oracle.size());
      for (size_t i = 0; i < d.rows(); ++i)
        for (size_t j = 0; j < d.cols(); ++j) CHECK(d(i, j) == oracle[i][j]);
    }
  }

  TEST_CASE("profiles") {
    InvariantProfile c3 = profile(catalog("C3"));
    CHECK(c3.center_dim == 3);
    CHECK(c3.der_dim == 9);
    CHECK(c3.orbit_dim == 0);
    CHECK(c3.abelian);
    InvariantProfile n3 = profile(catalog("n3"));
    CHECK(n3.center_dim == 1);
    CHECK(n3.der_dim == 6);
    CHECK(n3.orbit_dim == 3);
    CHECK(n3.betti_trivial == Dims{1, 2, 2, 1});
    CHECK(n3.nilpotent);
    InvariantProfile r31 = profile(catalog("r3_1"));
    CHECK(r31.center_dim == 0);
    CHECK(r31.der_dim == 6);
    CHECK(r31.orbit_dim == 3);
    CHECK(r31.solvable);
    CHECK_FALSE(r31.nilpotent);
    InvariantProfile sl2 = profile(catalog("sl2"));
    CHECK_FALSE(sl2.solvable);
  }

  TEST_CASE("catalog identities: d o d = 0, Euler characteristic, H^0 and H^1") {
    for (const Law& mu : testing::base_laws()) {
      size_t n = mu.dim();
      for (Coefficients c : {Coefficients::Trivial, Coefficients::Adjoint}) {
        for (size_t p = 0; p + 1 < n; ++p)
          CHECK(is_zero_matrix(coboundary_matrix(mu, p + 1, c) * coboundary_matrix(mu, p, c)));
        Dims b = cohomology_dims(mu, c);
        CHECK(b.size() == n + 1);
        CHECK(euler(b) == 0);
      }
      Dims triv = cohomology_dims(mu, Coefficients::Trivial);
      Dims adj = cohomology_dims(mu, Coefficients::Adjoint);
      CHECK(triv[0] == 1);
      CHECK(triv[1] == n - series_dims(mu).derived.at(1));
      CHECK(adj[0] == center_dim(mu));
      CHECK(adj[1] == der_dim(mu) - (n - center_dim(mu)));
    }
    for (const char* name : {"n3", "h3+C"}) {
      Dims b = cohomology_dims(catalog(name), Coefficients::Trivial);
      for (size_t p = 0; p < b.size(); ++p) CHECK(b[p] == b[b.size() - 1 - p]);
    }
  }
}

TEST_SUITE("property") {
  TEST_CASE("profiles are invariant under basis change") {
    Rng rng(31);
    for (int n = 0; n < testing::kPropertyCases; ++n) {
      Law mu = testing::rand_lie_law(rng);
      auto g = BasisChange<GaussRat>::from_action(testing::rand_invertible(rng, mu.dim()));
      CHECK(profile(act(g, mu)) == profile(mu));
    }
  }

  TEST_CASE("d o d = 0 and Euler characteristic zero") {
    Rng rng(32);
    for (int n = 0; n < testing::kPropertyCases; ++n) {
      Law mu = testing::rand_lie_law(rng);
      Coefficients c = n % 2 ? Coefficients::Adjoint : Coefficients::Trivial;
      size_t d = mu.dim();
      size_t p = static_cast<size_t>(testing::uniform(rng, 0, static_cast<long>(d) - 2));
      CHECK(is_zero_matrix(coboundary_matrix(mu, p + 1, c) * coboundary_matrix(mu, p, c)));
      Dims b = cohomology_dims(mu, c);
      CHECK(euler(b) == 0);
      long chain = 0;
      for (size_t q = 0; q <= d; ++q) chain += (q % 2 ? -1 : 1) * static_cast<long>(cochain_dim(d, q, c));
      CHECK(chain == 0);
      if (c == Coefficients::Trivial && unimodular(mu))
        for (size_t q = 0; q <= d; ++q) CHECK(b[q] == b[d - q]);
    }
  }

  TEST_CASE("trivial betti numbers agree with the brute-force differential") {
    Rng rng(33);
    for (int n = 0; n < testing::kPropertyCases; ++n) {
      Law mu = testing::rand_lie_law(rng, 3);
      CHECK(testing::oracle_betti(mu) == cohomology_dims(mu, Coefficients::Trivial));
    }
  }
}
