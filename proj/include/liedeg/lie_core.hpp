#pragma once

// Lie algebra laws as structure constants c[i][j][r] (coefficient of e_r in
// [e_i, e_j]), the GL_n action on them, and validation against
// skew-symmetry and the Jacobi identity. Indices are 0-based in code and
// 1-based in every printed form.

#include "liedeg/linalg.hpp"
#include "liedeg/scalars.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liedeg {

template <typename S>
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(size_t n) : n_(n), c_(n * n * n, S(0)) {}

  /// Unchecked tensor from all n^3 entries in [i][j][r] order; may violate
  /// skew-symmetry until validated.
  static StructureTensor from_raw(size_t n, std::vector<S> entries) {
    if (entries.size() != n * n * n) throw std::invalid_argument("structure tensor needs n^3 entries");
    StructureTensor t;
    t.n_ = n;
    t.c_ = std::move(entries);
    return t;
  }

  size_t dim() const { return n_; }

  const S& operator()(size_t i, size_t j, size_t r) const { return c_[(i * n_ + j) * n_ + r]; }
  /// Raw mutable entry; set_bracket keeps skew-symmetry, this does not.
  S& raw(size_t i, size_t j, size_t r) { return c_[(i * n_ + j) * n_ + r]; }
  const std::vector<S>& entries() const { return c_; }

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(size_t i, size_t j, const Vec<S>& value) {
    if (i >= n_ || j >= n_ || value.size() != n_) throw std::out_of_range("bracket index out of range");
    if (i == j) {
      for (const auto& v : value)
        if (!v.is_zero()) throw std::invalid_argument("[e_i, e_i] must vanish");
      return;
    }
    for (size_t r = 0; r < n_; ++r) {
      raw(i, j, r) = value[r];
      raw(j, i, r) = -value[r];
    }
  }

  /// Convenience: [e_i, e_j] = coeff * e_r (other components untouched).
  void set(size_t i, size_t j, size_t r, const S& coeff) {
    raw(i, j, r) = coeff;
    raw(j, i, r) = -coeff;
  }

  Vec<S> bracket_basis(size_t i, size_t j) const {
    Vec<S> v(n_);
    for (size_t r = 0; r < n_; ++r) v[r] = (*this)(i, j, r);
    return v;
  }

  /// Bilinear evaluation mu(x, y).
  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
    if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("bracket: vector dimension mismatch");
    Vec<S> out(n_, S(0));
    for (size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < n_; ++j) {
        if (y[j].is_zero() || i == j) continue;
        S f = x[i] * y[j];
        for (size_t r = 0; r < n_; ++r)
          if (!(*this)(i, j, r).is_zero()) out[r] += f * (*this)(i, j, r);
      }
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  template <typename F>
  auto map(F&& f) const {
    using T = decltype(f(c_.front()));
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return StructureTensor<T>::from_raw(n_, std::move(out));
  }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  size_t n_ = 0;
  std::vector<S> c_;
};

using Law = StructureTensor<GaussRat>;
using LawT = StructureTensor<RatFunc>;

inline Vec<GaussRat> basis_vector(size_t n, size_t k) {
  Vec<GaussRat> v(n, GaussRat(0));
  v.at(k) = GaussRat(1);
  return v;
}

/// An invertible n x n matrix g acting by (g.mu)(x,y) = g mu(g^-1 x, g^-1 y).
template <typename S>
class BasisChange {
 public:
  /// g itself; throws std::invalid_argument when singular.
  static BasisChange from_action(Matrix<S> g) {
    auto inv = inverse(g);
    if (!inv) throw std::invalid_argument("basis change is singular");
    return BasisChange(std::move(g), std::move(*inv));
  }
  /// h has the new basis vectors as columns (old coordinates); g = h^-1.
  static BasisChange from_new_basis(Matrix<S> h) {
    auto inv = inverse(h);
    if (!inv) throw std::invalid_argument("basis change is singular");
    return BasisChange(std::move(*inv), std::move(h));
  }
  static BasisChange identity(size_t n) {
    return BasisChange(Matrix<S>::identity(n), Matrix<S>::identity(n));
  }

  size_t dim() const { return g_.rows(); }
  const Matrix<S>& matrix() const { return g_; }
  const Matrix<S>& inverse_matrix() const { return g_inv_; }

  /// Composition (this o other): acts as other first, then this.
  BasisChange compose(const BasisChange& other) const {
    return BasisChange(g_ * other.g_, other.g_inv_ * g_inv_);
  }

 private:
  BasisChange(Matrix<S> g, Matrix<S> g_inv) : g_(std::move(g)), g_inv_(std::move(g_inv)) {}
  Matrix<S> g_;
  Matrix<S> g_inv_;
};

/// c'_{ij}^r = sum g_{r,s} c_{pq}^s (g^-1)_{p,i} (g^-1)_{q,j}, evaluated in
/// three n^4 stages.
template <typename S>
StructureTensor<S> act(const BasisChange<S>& g, const StructureTensor<S>& mu) {
  size_t n = mu.dim();
  if (g.dim() != n) throw std::invalid_argument("act: dimension mismatch");
  const Matrix<S>& G = g.matrix();
  const Matrix<S>& H = g.inverse_matrix();
  // B[i][q][s] = sum_p H[p][i] c[p][q][s]
  std::vector<S> B(n * n * n, S(0));
  for (size_t p = 0; p < n; ++p)
    for (size_t i = 0; i < n; ++i) {
      if (H(p, i).is_zero()) continue;
      for (size_t q = 0; q < n; ++q)
        for (size_t s = 0; s < n; ++s)
          if (!mu(p, q, s).is_zero()) B[(i * n + q) * n + s] += H(p, i) * mu(p, q, s);
    }
  // A[i][j][s] = sum_q B[i][q][s] H[q][j]
  std::vector<S> A(n * n * n, S(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t q = 0; q < n; ++q)
      for (size_t j = 0; j < n; ++j) {
        if (H(q, j).is_zero()) continue;
        for (size_t s = 0; s < n; ++s)
          if (!B[(i * n + q) * n + s].is_zero()) A[(i * n + j) * n + s] += B[(i * n + q) * n + s] * H(q, j);
      }
  std::vector<S> C(n * n * n, S(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t s = 0; s < n; ++s) {
        const S& a = A[(i * n + j) * n + s];
        if (a.is_zero()) continue;
        for (size_t r = 0; r < n; ++r)
          if (!G(r, s).is_zero()) C[(i * n + j) * n + r] += G(r, s) * a;
      }
  return StructureTensor<S>::from_raw(n, std::move(C));
}

/// Outcome of validate(); 'kind' names the first violated condition.
/// Indices are 0-based. For Jacobi, 'value' is component s of
/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
template <typename S>
struct ValidationReport {
  enum class Kind { Ok, Antisymmetry, Jacobi };
  Kind kind = Kind::Ok;
  size_t i = 0, j = 0, k = 0, s = 0;
  S value{};
  Vec<S> jacobiator;  // full vector for Jacobi failures

  bool ok() const { return kind == Kind::Ok; }
  std::string describe() const;
};

/// Jacobiator J(i,j,k) = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
template <typename S>
Vec<S> jacobiator(const StructureTensor<S>& mu, size_t i, size_t j, size_t k) {
  size_t n = mu.dim();
  Vec<S> out(n, S(0));
  auto add = [&](size_t a, size_t b, size_t c) {
    for (size_t r = 0; r < n; ++r) {
      const S& x = mu(a, b, r);
      if (x.is_zero()) continue;
      for (size_t s = 0; s < n; ++s)
        if (!mu(r, c, s).is_zero()) out[s] += x * mu(r, c, s);
    }
  };
  add(i, j, k);
  add(j, k, i);
  add(k, i, j);
  return out;
}

template <typename S>
ValidationReport<S> validate(const StructureTensor<S>& mu) {
  size_t n = mu.dim();
  ValidationReport<S> rep;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      for (size_t r = 0; r < n; ++r) {
        S sum = mu(i, j, r) + mu(j, i, r);
        if (!sum.is_zero()) {
          rep.kind = ValidationReport<S>::Kind::Antisymmetry;
          rep.i = i;
          rep.j = j;
          rep.s = r;
          rep.value = sum;
          return rep;
        }
      }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Vec<S> J = jacobiator(mu, i, j, k);
        for (size_t s = 0; s < n; ++s)
          if (!J[s].is_zero()) {
            rep.kind = ValidationReport<S>::Kind::Jacobi;
            rep.i = i;
            rep.j = j;
            rep.k = k;
            rep.s = s;
            rep.value = J[s];
            rep.jacobiator = std::move(J);
            return rep;
          }
      }
  return rep;
}

template <typename S>
std::string ValidationReport<S>::describe() const {
  auto one = [](size_t x) { return std::to_string(x + 1); };
  switch (kind) {
    case Kind::Ok: return "ok";
    case Kind::Antisymmetry:
      return "antisymmetry violated at (" + one(i) + "," + one(j) + "), component e" + one(s) +
             ": c_ij + c_ji = " + value.to_string();
    case Kind::Jacobi:
      return "Jacobi identity violated at (" + one(i) + "," + one(j) + "," + one(k) + "), component e" +
             one(s) + ": " + value.to_string();
  }
  return {};
}

/// Block-diagonal law on V + W with cross brackets zero.
template <typename S>
StructureTensor<S> direct_sum(const StructureTensor<S>& a, const StructureTensor<S>& b) {
  size_t p = a.dim(), q = b.dim(), n = p + q;
  StructureTensor<S> out(n);
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j)
      for (size_t r = 0; r < p; ++r) out.raw(i, j, r) = a(i, j, r);
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j)
      for (size_t r = 0; r < q; ++r) out.raw(p + i, p + j, p + r) = b(i, j, r);
  return out;
}

inline LawT lift(const Law& mu) {
  return mu.map([](const GaussRat& x) { return RatFunc(x); });
}

inline Matrix<RatFunc> lift(const Matrix<GaussRat>& m) {
  Matrix<RatFunc> r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = RatFunc(m(i, j));
  return r;
}

}  // namespace liedeg
