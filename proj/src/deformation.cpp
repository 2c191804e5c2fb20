#include "liedeg/deformation.hpp"

#include "liedeg/invariants.hpp"

#include <stdexcept>

namespace liedeg {

bool DefectTensor::is_zero() const { return !first_nonzero().has_value(); }

std::optional<std::array<size_t, 4>> DefectTensor::first_nonzero() const {
  for (size_t t = 0; t < triples.size(); ++t)
    for (size_t s = 0; s < values[t].size(); ++s)
      if (!values[t][s].is_zero()) return std::array<size_t, 4>{triples[t][0], triples[t][1], triples[t][2], s};
  return std::nullopt;
}

namespace {

void require_antisymmetric(const Law& phi, const char* what) {
  auto rep = validate(phi);
  if (rep.kind == ValidationReport<GaussRat>::Kind::Antisymmetry)
    throw std::invalid_argument(std::string(what) + " is not antisymmetric: " + rep.describe());
}

DefectTensor empty_defect(size_t n) {
  DefectTensor d;
  d.n = n;
  for (const auto& s : subsets(n, 3)) {
    d.triples.push_back({s[0], s[1], s[2]});
    d.values.emplace_back(n, GaussRat(0));
  }
  return d;
}

void axpy(Vec<GaussRat>& acc, const Vec<GaussRat>& v, int sign) {
  for (size_t k = 0; k < acc.size(); ++k)
    if (!v[k].is_zero()) acc[k] += sign > 0 ? v[k] : -v[k];
}

// a(b(x,y),z) + a(b(y,z),x) + a(b(z,x),y) on basis vectors
Vec<GaussRat> cyclic_composite(const Law& a, const Law& b, size_t x, size_t y, size_t z) {
  size_t n = a.dim();
  Vec<GaussRat> out(n, GaussRat(0));
  auto term = [&](size_t p, size_t q, size_t r) {
    for (size_t s = 0; s < n; ++s) {
      const GaussRat& c = b(p, q, s);
      if (c.is_zero()) continue;
      for (size_t w = 0; w < n; ++w)
        if (!a(s, r, w).is_zero()) out[w] += c * a(s, r, w);
    }
  };
  term(x, y, z);
  term(y, z, x);
  term(z, x, y);
  return out;
}

}  // namespace

CocycleCheck is_two_cocycle(const Law& mu, const Law& phi) {
  if (mu.dim() != phi.dim()) throw std::invalid_argument("cocycle check: dimension mismatch");
  require_antisymmetric(phi, "cochain");
  size_t n = mu.dim();
  CocycleCheck out;
  out.coboundary = empty_defect(n);
  auto e = [n](size_t k) { return basis_vector(n, k); };
  for (size_t t = 0; t < out.coboundary.triples.size(); ++t) {
    auto [x, y, z] = out.coboundary.triples[t];
    Vec<GaussRat>& acc = out.coboundary.values[t];
    axpy(acc, phi.bracket(mu.bracket_basis(x, y), e(z)), -1);
    axpy(acc, phi.bracket(mu.bracket_basis(x, z), e(y)), +1);
    axpy(acc, phi.bracket(mu.bracket_basis(y, z), e(x)), -1);
    axpy(acc, mu.bracket(e(x), phi.bracket_basis(y, z)), +1);
    axpy(acc, mu.bracket(e(y), phi.bracket_basis(x, z)), -1);
    axpy(acc, mu.bracket(e(z), phi.bracket_basis(x, y)), +1);
  }
  out.is_cocycle = out.coboundary.is_zero();
  return out;
}

void check_deformation(const TruncatedDeformation& d) {
  auto rep = validate(d.base);
  if (!rep.ok()) throw std::invalid_argument("deformation base is not a Lie law: " + rep.describe());
  for (size_t k = 0; k < d.terms.size(); ++k) {
    if (d.terms[k].dim() != d.base.dim())
      throw std::invalid_argument("deformation term " + std::to_string(k + 1) + " has the wrong dimension");
    require_antisymmetric(d.terms[k], ("deformation term " + std::to_string(k + 1)).c_str());
  }
}

std::vector<DefectTensor> jacobi_defect(const TruncatedDeformation& d) {
  check_deformation(d);
  size_t n = d.base.dim();
  auto phi = [&](size_t k) -> const Law& { return k == 0 ? d.base : d.terms[k - 1]; };
  std::vector<DefectTensor> out;
  for (size_t k = 1; k <= d.order(); ++k) {
    DefectTensor def = empty_defect(n);
    for (size_t t = 0; t < def.triples.size(); ++t) {
      auto [x, y, z] = def.triples[t];
      for (size_t a = 0; a <= k; ++a) axpy(def.values[t], cyclic_composite(phi(a), phi(k - a), x, y, z), +1);
    }
    out.push_back(std::move(def));
  }
  return out;
}

std::string to_string(RigidityVerdict v) {
  switch (v) {
    case RigidityVerdict::FormallyRigidByH2: return "FormallyRigidByH2";
    case RigidityVerdict::UnobstructedByH3: return "UnobstructedByH3";
    case RigidityVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

RigidityCertificate rigidity(const Law& mu) {
  auto rep = validate(mu);
  if (!rep.ok()) throw std::invalid_argument("rigidity: not a Lie law: " + rep.describe());
  size_t n = mu.dim();
  std::vector<size_t> h = cohomology_dims(mu, Coefficients::Adjoint);
  RigidityCertificate cert;
  cert.h2 = n >= 2 ? h[2] : 0;
  cert.h3 = n >= 3 ? h[3] : 0;
  if (cert.h2 == 0) {
    cert.verdict = RigidityVerdict::FormallyRigidByH2;
  } else if (cert.h3 == 0 && n >= 3) {
    cert.verdict = RigidityVerdict::UnobstructedByH3;
  } else {
    cert.verdict = RigidityVerdict::Unknown;
  }
  return cert;
}

}  // namespace liedeg
