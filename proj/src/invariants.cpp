#include "liedeg/invariants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace liedeg {

namespace {

SeriesDims descend(size_t n, const std::function<std::vector<Vec<GaussRat>>(const std::vector<Vec<GaussRat>>&)>& step) {
  std::vector<Vec<GaussRat>> current;
  for (size_t k = 0; k < n; ++k) current.push_back(basis_vector(n, k));
  SeriesDims out;
  out.dims.push_back(n);
  for (;;) {
    std::vector<Vec<GaussRat>> next = span_basis(step(current), n);
    if (next.size() == out.dims.back()) break;
    out.dims.push_back(next.size());
    current = std::move(next);
  }
  return out;
}

}  // namespace

Series series_dims(const Law& mu) {
  size_t n = mu.dim();
  Series s;
  s.lower_central = descend(n, [&](const std::vector<Vec<GaussRat>>& prev) {
    std::vector<Vec<GaussRat>> gens;
    for (size_t a = 0; a < n; ++a)
      for (const auto& y : prev) gens.push_back(mu.bracket(basis_vector(n, a), y));
    return gens;
  });
  s.derived = descend(n, [&](const std::vector<Vec<GaussRat>>& prev) {
    std::vector<Vec<GaussRat>> gens;
    for (size_t a = 0; a < prev.size(); ++a)
      for (size_t b = a + 1; b < prev.size(); ++b) gens.push_back(mu.bracket(prev[a], prev[b]));
    return gens;
  });
  return s;
}

size_t center_dim(const Law& mu) {
  size_t n = mu.dim();
  if (n == 0) return 0;
  Matrix<GaussRat> m(n * n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t r = 0; r < n; ++r) m(j * n + r, i) = mu(i, j, r);
  return n - rank(m);
}

std::vector<Matrix<GaussRat>> derivations(const Law& mu) {
  size_t n = mu.dim();
  size_t pairs = n * (n - 1) / 2;
  Matrix<GaussRat> eqs(std::max<size_t>(pairs * n, 1), n * n);
  auto var = [n](size_t row, size_t col) { return row * n + col; };
  size_t row = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t r = 0; r < n; ++r, ++row) {
        for (size_t s = 0; s < n; ++s) eqs(row, var(r, s)) += mu(i, j, s);
        for (size_t k = 0; k < n; ++k) {
          eqs(row, var(k, i)) -= mu(k, j, r);
          eqs(row, var(k, j)) -= mu(i, k, r);
        }
      }
  std::vector<Matrix<GaussRat>> out;
  for (const auto& v : kernel(eqs)) {
    Matrix<GaussRat> d(n, n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) d(a, b) = v[var(a, b)];
    out.push_back(std::move(d));
  }
  return out;
}

size_t der_dim(const Law& mu) { return derivations(mu).size(); }

std::vector<std::vector<size_t>> subsets(size_t n, size_t p) {
  std::vector<std::vector<size_t>> out;
  if (p > n) return out;
  std::vector<size_t> cur(p);
  for (size_t k = 0; k < p; ++k) cur[k] = k;
  for (;;) {
    out.push_back(cur);
    size_t k = p;
    while (k > 0 && cur[k - 1] == n - p + (k - 1)) --k;
    if (k == 0) break;
    ++cur[k - 1];
    for (size_t m = k; m < p; ++m) cur[m] = cur[m - 1] + 1;
  }
  return out;
}

namespace {

size_t binomial(size_t n, size_t p) {
  if (p > n) return 0;
  size_t r = 1;
  for (size_t k = 1; k <= p; ++k) r = r * (n - p + k) / k;
  return r;
}

size_t mask_of(const std::vector<size_t>& s) {
  size_t m = 0;
  for (size_t x : s) m |= size_t{1} << x;
  return m;
}

}  // namespace

size_t cochain_dim(size_t n, size_t p, Coefficients coeffs) {
  return binomial(n, p) * (coeffs == Coefficients::Adjoint ? n : 1);
}

Matrix<GaussRat> coboundary_matrix(const Law& mu, size_t p, Coefficients coeffs) {
  size_t n = mu.dim();
  if (n > 20) throw std::invalid_argument("cohomology: dimension too large");
  size_t m = coeffs == Coefficients::Adjoint ? n : 1;
  auto src = subsets(n, p);
  auto dst = subsets(n, p + 1);
  Matrix<GaussRat> d(dst.size() * m, src.size() * m);
  if (dst.empty() || src.empty()) return d;

  std::vector<size_t> index_of(size_t{1} << n, 0);
  for (size_t k = 0; k < src.size(); ++k) index_of[mask_of(src[k])] = k;

  for (size_t row_set = 0; row_set < dst.size(); ++row_set) {
    const auto& T = dst[row_set];
    size_t tmask = mask_of(T);
    // Bracket terms: (-1)^{a+b} f([x_a, x_b], rest).
    for (size_t a = 0; a < T.size(); ++a)
      for (size_t b = a + 1; b < T.size(); ++b) {
        size_t rest = tmask & ~(size_t{1} << T[a]) & ~(size_t{1} << T[b]);
        bool sign_ab = (a + b) % 2 == 1;
        for (size_t s = 0; s < n; ++s) {
          const GaussRat& c = mu(T[a], T[b], s);
          if (c.is_zero() || (rest >> s & 1)) continue;
          // Sorting (s, rest) costs one transposition per element of rest below s.
          size_t below = static_cast<size_t>(__builtin_popcountll(rest & ((size_t{1} << s) - 1)));
          bool negative = sign_ab != (below % 2 == 1);
          size_t col_set = index_of[rest | (size_t{1} << s)];
          GaussRat v = negative ? -c : c;
          for (size_t comp = 0; comp < m; ++comp) d(row_set * m + comp, col_set * m + comp) += v;
        }
      }
    if (coeffs != Coefficients::Adjoint) continue;
    // Action terms: (-1)^a [x_a, f(x_0..^a..x_p)].
    for (size_t a = 0; a < T.size(); ++a) {
      size_t col_set = index_of[tmask & ~(size_t{1} << T[a])];
      bool negative = a % 2 == 1;
      for (size_t comp = 0; comp < n; ++comp)
        for (size_t r = 0; r < n; ++r) {
          const GaussRat& c = mu(T[a], comp, r);
          if (c.is_zero()) continue;
          d(row_set * m + r, col_set * m + comp) += negative ? -c : c;
        }
    }
  }
  return d;
}

std::vector<size_t> cohomology_dims(const Law& mu, Coefficients coeffs) {
  size_t n = mu.dim();
  std::vector<size_t> ranks(n + 1, 0);
  for (size_t p = 0; p < n; ++p) ranks[p] = rank(coboundary_matrix(mu, p, coeffs));
  std::vector<size_t> h(n + 1);
  for (size_t p = 0; p <= n; ++p) {
    size_t prev = p == 0 ? 0 : ranks[p - 1];
    h[p] = cochain_dim(n, p, coeffs) - ranks[p] - prev;
  }
  return h;
}

InvariantProfile profile(const Law& mu) {
  InvariantProfile pr;
  pr.dim = mu.dim();
  Series s = series_dims(mu);
  pr.lower_central = s.lower_central;
  pr.derived = s.derived;
  pr.center_dim = center_dim(mu);
  pr.der_dim = der_dim(mu);
  pr.orbit_dim = pr.dim * pr.dim - pr.der_dim;
  pr.betti_trivial = cohomology_dims(mu, Coefficients::Trivial);
  pr.betti_adjoint = cohomology_dims(mu, Coefficients::Adjoint);
  pr.nilpotent = pr.lower_central.dims.back() == 0;
  pr.solvable = pr.derived.dims.back() == 0;
  pr.abelian = mu.is_zero();
  return pr;
}

}  // namespace liedeg
