#include "liedeg/contraction.hpp"

#include <stdexcept>

namespace liedeg {

Witness make_witness(const Matrix<RatFunc>& m, Convention convention) {
  if (!m.is_square()) throw std::invalid_argument("witness matrix must be square");
  return convention == Convention::Action ? Witness::from_action(m) : Witness::from_new_basis(m);
}

Witness scaling_witness(size_t n) {
  return Witness::from_action(Matrix<RatFunc>::identity(n).scaled(RatFunc::t_pow(-1)));
}

LawT transport(const Law& mu, const Witness& g) {
  if (g.dim() != mu.dim()) throw std::invalid_argument("witness dimension does not match the law");
  return act(g, lift(mu));
}

ContractionResult limit(LawT transported) {
  ContractionResult res;
  size_t n = transported.dim();
  bool any = false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t r = 0; r < n; ++r) {
        auto v = transported(i, j, r).valuation();
        if (!v) continue;
        if (!any || *v < res.min_valuation) res.min_valuation = *v;
        any = true;
        if (*v < 0 && !res.offending) res.offending = std::array<size_t, 3>{i, j, r};
      }
  if (!res.offending) {
    res.limit = transported.map([](const RatFunc& f) { return *f.limit_at_zero(); });
  }
  res.transported = std::move(transported);
  return res;
}

ContractionResult contract(const Law& mu, const Witness& g) { return limit(transport(mu, g)); }

bool is_subalgebra(const Law& mu, const std::vector<Vec<GaussRat>>& basis) {
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b)
      if (!in_span(basis, mu.bracket(basis[a], basis[b]))) return false;
  return true;
}

bool is_ideal(const Law& mu, const std::vector<Vec<GaussRat>>& basis) {
  size_t n = mu.dim();
  for (size_t a = 0; a < n; ++a)
    for (const auto& y : basis)
      if (!in_span(basis, mu.bracket(basis_vector(n, a), y))) return false;
  return true;
}

bool is_nilpotent_subalgebra(const Law& mu, const std::vector<Vec<GaussRat>>& basis) {
  size_t n = mu.dim();
  std::vector<Vec<GaussRat>> current = span_basis(basis, n);
  const std::vector<Vec<GaussRat>> full = current;
  while (!current.empty()) {
    std::vector<Vec<GaussRat>> gens;
    for (const auto& x : full)
      for (const auto& y : current) gens.push_back(mu.bracket(x, y));
    std::vector<Vec<GaussRat>> next = span_basis(gens, n);
    if (next.size() == current.size()) return false;
    current = std::move(next);
  }
  return true;
}

IwContraction iw_contract(const Law& mu, const std::vector<Vec<GaussRat>>& subspace_basis) {
  size_t n = mu.dim();
  for (const auto& v : subspace_basis)
    if (v.size() != n) throw std::invalid_argument("subspace vector has the wrong dimension");
  if (span_dim(subspace_basis, n) != subspace_basis.size())
    throw std::invalid_argument("subspace basis is not linearly independent");
  if (!is_subalgebra(mu, subspace_basis)) throw std::invalid_argument("subspace is not a subalgebra");

  std::vector<Vec<GaussRat>> u = span_basis(subspace_basis, n);
  std::vector<bool> pivot(n, false);
  for (const auto& row : u)
    for (size_t j = 0; j < n; ++j)
      if (!row[j].is_zero()) {
        pivot[j] = true;
        break;
      }
  std::vector<Vec<GaussRat>> v;
  for (size_t j = 0; j < n; ++j)
    if (!pivot[j]) v.push_back(basis_vector(n, j));

  std::vector<Vec<GaussRat>> cols = u;
  cols.insert(cols.end(), v.begin(), v.end());
  Matrix<GaussRat> B = Matrix<GaussRat>::from_columns(cols, n);
  Matrix<GaussRat> B_inv = *inverse(B);
  Matrix<GaussRat> D(n, n);
  for (size_t k = 0; k < u.size(); ++k) D(k, k) = GaussRat(1);
  Matrix<GaussRat> P = B * D * B_inv;

  Matrix<RatFunc> g(n, n);
  RatFunc t_inv = RatFunc::t_pow(-1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      GaussRat q = (i == j ? GaussRat(1) : GaussRat(0)) - P(i, j);
      g(i, j) = RatFunc(P(i, j)) + t_inv * RatFunc(q);
    }
  Witness w = Witness::from_action(g);
  ContractionResult res = contract(mu, w);
  return {std::move(w), std::move(res), std::move(u), std::move(v), std::move(P)};
}

EndoContractionReport check_endo_contraction(const Law& mu, const Matrix<LaurentPoly>& phi) {
  size_t n = mu.dim();
  if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("phi must be an n x n matrix");
  Matrix<RatFunc> phi_t(n, n);
  Matrix<GaussRat> phi0(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!phi(i, j).is_polynomial())
        throw std::invalid_argument("phi has a negative power of t; it must lie in End(V_A)");
      phi_t(i, j) = RatFunc(phi(i, j));
      phi0(i, j) = phi(i, j).coeff(0);
    }

  EndoContractionReport rep;
  rep.result = contract(mu, Witness::from_new_basis(phi_t));
  rep.in_lattice = rep.result.limit.has_value();
  rep.phi0 = phi0;
  std::vector<Vec<GaussRat>> columns;
  for (size_t j = 0; j < n; ++j) columns.push_back(phi0.column(j));
  rep.image = span_basis(columns, n);
  rep.kernel = kernel(phi0);
  rep.image_is_subalgebra = is_subalgebra(mu, rep.image);
  if (rep.in_lattice) {
    const Law& mu0 = *rep.result.limit;
    rep.kernel_is_ideal = is_ideal(mu0, rep.kernel);
    rep.kernel_is_nilpotent = rep.kernel_is_ideal && is_nilpotent_subalgebra(mu0, rep.kernel);
    rep.phi0_is_homomorphism = true;
    for (size_t i = 0; i < n && rep.phi0_is_homomorphism; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (phi0 * mu0.bracket_basis(i, j) != mu.bracket(phi0.column(i), phi0.column(j))) {
          rep.phi0_is_homomorphism = false;
          break;
        }
  }
  return rep;
}

TruncatedDeformation induced_deformation(const Law& mu, const Witness& g, size_t order) {
  ContractionResult res = contract(mu, g);
  if (!res.limit) throw std::domain_error("induced deformation: the contraction has no limit");
  size_t n = mu.dim();
  std::vector<std::vector<GaussRat>> series;
  series.reserve(n * n * n);
  for (const auto& f : res.transported.entries()) series.push_back(f.taylor(static_cast<int>(order)));
  auto coefficient = [&](size_t k) {
    std::vector<GaussRat> c;
    c.reserve(series.size());
    for (const auto& s : series) c.push_back(s[k]);
    return Law::from_raw(n, std::move(c));
  };
  TruncatedDeformation d;
  d.base = coefficient(0);
  for (size_t k = 1; k <= order; ++k) d.terms.push_back(coefficient(k));
  return d;
}

}  // namespace liedeg
