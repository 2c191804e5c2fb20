#pragma once

// Shared generators and independent reference computations for the tests.

#include "liedeg/catalog.hpp"
#include "liedeg/lie_core.hpp"
#include "liedeg/scalars.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace liedeg;

// Every randomized property runs at least this many cases.
constexpr int kPropertyCases = 500;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rat rand_rat(Rng& rng, long range = 5) {
  return Rat(mpz_class(uniform(rng, -range, range)), mpz_class(uniform(rng, 1, 4)));
}

inline GaussRat rand_gauss(Rng& rng) {
  if (uniform(rng, 0, 2) == 0) return GaussRat(rand_rat(rng), rand_rat(rng));
  return GaussRat(rand_rat(rng));
}

inline GaussRat rand_nonzero_gauss(Rng& rng) {
  for (;;) {
    GaussRat g = rand_gauss(rng);
    if (!g.is_zero()) return g;
  }
}

inline LaurentPoly rand_laurent(Rng& rng, int lo = -3, int hi = 3, int max_terms = 3) {
  LaurentPoly p;
  int terms = static_cast<int>(uniform(rng, 0, max_terms));
  for (int k = 0; k < terms; ++k)
    p += LaurentPoly::monomial(rand_gauss(rng), static_cast<int>(uniform(rng, lo, hi)));
  return p;
}

inline RatFunc rand_ratfunc(Rng& rng) {
  LaurentPoly den;
  while (den.is_zero()) den = rand_laurent(rng, -1, 3, 2);
  return RatFunc(rand_laurent(rng), den);
}

inline Matrix<GaussRat> rand_matrix(Rng& rng, size_t n, long range = 2) {
  Matrix<GaussRat> m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = GaussRat(uniform(rng, -range, range));
  return m;
}

inline Matrix<GaussRat> rand_invertible(Rng& rng, size_t n) {
  for (;;) {
    Matrix<GaussRat> m = rand_matrix(rng, n);
    if (uniform(rng, 0, 3) == 0) m(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)) += GaussRat::i();
    if (!determinant(m).is_zero()) return m;
  }
}

/// Catalog laws of dimension 2..4 with fixed parameters.
inline std::vector<Law> base_laws() {
  std::vector<Law> out;
  for (const char* ref : {"C2", "r2", "C3", "n3", "r2+C", "r3", "r3_alpha(2)", "r3_alpha(1/3)", "r3_alpha(i)", "r3_m1",
                          "r3_1", "sl2", "C4", "sl2+C", "r2+r2", "h3+C", "g4(0,1)", "g4(2,-1)", "g4(i,1/2)", "g5(1/2)",
                          "g5(-2)"})
    out.push_back(catalog_ref(ref));
  return out;
}

/// A random Lie law: a catalog law moved by a random invertible matrix.
inline Law rand_lie_law(Rng& rng, size_t max_dim = 4) {
  static const std::vector<Law> laws = base_laws();
  for (;;) {
    const Law& mu = laws[uniform(rng, 0, static_cast<long>(laws.size()) - 1)];
    if (mu.dim() > max_dim) continue;
    return act(BasisChange<GaussRat>::from_action(rand_invertible(rng, mu.dim())), mu);
  }
}

/// g = A diag(t^k) B with A, B constant; entries are Laurent monomials
/// combinations, so limits exist for a sizeable fraction of draws.
inline Matrix<RatFunc> rand_monomial_witness(Rng& rng, size_t n) {
  Matrix<RatFunc> d(n, n);
  for (size_t i = 0; i < n; ++i) d(i, i) = RatFunc::t_pow(static_cast<int>(uniform(rng, -2, 1)));
  Matrix<RatFunc> a = lift(uniform(rng, 0, 1) ? rand_invertible(rng, n) : Matrix<GaussRat>::identity(n));
  Matrix<RatFunc> b = lift(uniform(rng, 0, 2) == 0 ? rand_invertible(rng, n) : Matrix<GaussRat>::identity(n));
  return a * d * b;
}

// ---- Reference computations written independently of the library ----

/// Rank over Q(i) by plain row reduction on a copy, pivoting on the first
/// non-zero entry of each column.
inline size_t oracle_rank(std::vector<std::vector<GaussRat>> m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      GaussRat f = m[i][c] / m[r][c];
      for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Sign of the permutation sorting 'v' (entries distinct), 0 when repeated.
inline int sort_sign(std::vector<size_t>& v) {
  int sign = 1;
  for (size_t a = 0; a < v.size(); ++a)
    for (size_t b = a + 1; b < v.size(); ++b) {
      if (v[a] == v[b]) return 0;
      if (v[a] > v[b]) {
        std::swap(v[a], v[b]);
        sign = -sign;
      }
    }
  return sign;
}

/// All increasing p-tuples of {0..n-1}.
inline std::vector<std::vector<size_t>> oracle_subsets(size_t n, size_t p) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (size_t k = start; k < n; ++k) {
      cur.push_back(k);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Trivial-coefficient coboundary d^p, built by evaluating
///   (df)(x_0..x_p) = sum_{a<b} (-1)^{a+b} f([x_a,x_b], x_0..^a..^b..x_p)
/// on basis tuples and extending f to unsorted arguments by antisymmetry.
inline std::vector<std::vector<GaussRat>> oracle_trivial_differential(const Law& mu, size_t p) {
  size_t n = mu.dim();
  auto src = oracle_subsets(n, p);
  auto dst = oracle_subsets(n, p + 1);
  std::vector<std::vector<GaussRat>> d(dst.size(), std::vector<GaussRat>(src.size(), GaussRat(0)));
  for (size_t row = 0; row < dst.size(); ++row) {
    const auto& x = dst[row];
    for (size_t a = 0; a < x.size(); ++a)
      for (size_t b = a + 1; b < x.size(); ++b) {
        int s0 = ((a + b) % 2 == 0) ? 1 : -1;
        for (size_t r = 0; r < n; ++r) {
          const GaussRat& c = mu(x[a], x[b], r);
          if (c.is_zero()) continue;
          std::vector<size_t> args{r};
          for (size_t k = 0; k < x.size(); ++k)
            if (k != a && k != b) args.push_back(x[k]);
          int s = sort_sign(args);
          if (s == 0) continue;
          for (size_t col = 0; col < src.size(); ++col)
            if (src[col] == args) d[row][col] += GaussRat(s0 * s) * c;
        }
      }
  }
  return d;
}

/// Betti numbers with trivial coefficients from the oracle differentials.
inline std::vector<size_t> oracle_betti(const Law& mu) {
  size_t n = mu.dim();
  std::vector<size_t> ranks(n + 1, 0);
  for (size_t p = 0; p < n; ++p) ranks[p] = oracle_rank(oracle_trivial_differential(mu, p));
  std::vector<size_t> out;
  for (size_t p = 0; p <= n; ++p) {
    size_t dim = oracle_subsets(n, p).size();
    size_t below = p == 0 ? 0 : ranks[p - 1];
    out.push_back(dim - ranks[p] - below);
  }
  return out;
}

/// Power-series coefficients of num/den by long division (den(0) != 0).
inline std::vector<GaussRat> oracle_series(const std::vector<GaussRat>& num, const std::vector<GaussRat>& den,
                                           size_t order) {
  std::vector<GaussRat> rem = num;
  rem.resize(order + den.size() + 1, GaussRat(0));
  std::vector<GaussRat> q(order + 1, GaussRat(0));
  for (size_t k = 0; k <= order; ++k) {
    q[k] = rem[k] / den[0];
    for (size_t j = 0; j < den.size(); ++j) rem[k + j] -= q[k] * den[j];
  }
  return q;
}

}  // namespace testing
