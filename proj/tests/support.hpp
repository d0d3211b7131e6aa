#pragma once

// Shared fixtures for the test suites: input generators and oracles that
// evaluate the defining formulas on vectors, independently of the tensor
// pipeline in the library.

#include <algorithm>
#include <array>
#include <initializer_list>
#include <random>
#include <tuple>
#include <vector>

#include "hn3/hn3.hpp"

namespace hn3::testing {

inline const std::vector<Scalar>& lambda_values() {
  static const std::vector<Scalar> values{Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(3),
                                          Scalar(-3), Scalar(5, 2), Scalar(-7, 3)};
  return values;
}

inline Vector e(std::size_t i) { return basis_vector(7, i - 1); }  // 1-based, dimension 7

/// Builds a tensor from 1-based component lists.
inline Tensor covariant3(std::size_t n, std::initializer_list<std::pair<std::array<std::size_t, 3>, Scalar>> entries) {
  Tensor t = Tensor::covariant(n, 3);
  for (const auto& [idx, v] : entries) t(idx[0] - 1, idx[1] - 1, idx[2] - 1) = v;
  return t;
}

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

/// The example's structure tensors on a different Lie algebra. The axioms of
/// an almost contact HN-metric 3-structure only involve φ, ξ, η and g, so any
/// Lie algebra yields a valid input with new geometry.
inline HN3Manifold with_algebra(LieAlgebra l) {
  const HN3Manifold base = builtin_example(Scalar(1));
  return HN3Manifold(MetricLieAlgebra(std::move(l), base.metric()), base.structures());
}

inline HN3Manifold abelian_flat() { return with_algebra(abelian(7)); }

/// ℝ ⋉ ℝ⁶ with ad_{e_a} a random matrix on the complement of e_a.
inline LieAlgebra random_semidirect(std::mt19937& rng, std::size_t n = 7) {
  std::uniform_int_distribution<int> value(-2, 2);
  const std::size_t a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  LieAlgebra l(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (i != a && k != a)
        if (const int v = value(rng)) l.set_bracket(a, i, k, Scalar(v));
  return l;
}

/// Two-step nilpotent: brackets of the non-central basis vectors land in a
/// random central subspace spanned by basis vectors.
inline LieAlgebra random_two_step(std::mt19937& rng, std::size_t n = 7) {
  std::uniform_int_distribution<int> value(-2, 2);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t centre = 1 + rng() % 3;
  LieAlgebra l(n);
  for (std::size_t p = centre; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      for (std::size_t c = 0; c < centre; ++c)
        if (const int v = value(rng)) l.set_bracket(order[p], order[q], order[c], Scalar(v));
  return l;
}

/// [e1,e2] and [e3,e4] in span{e5,e6,e7} with random coefficients; every
/// member satisfies the class condition of the first structure.
inline LieAlgebra random_reeb_valued(std::mt19937& rng) {
  std::uniform_int_distribution<int> value(-3, 3);
  LieAlgebra l(7);
  for (std::size_t k = 4; k < 7; ++k) {
    l.set_bracket(0, 1, k, Scalar(value(rng)));
    l.set_bracket(2, 3, k, Scalar(value(rng)));
  }
  return l;
}

/// A mix of the generators above together with the example family.
inline std::vector<HN3Manifold> generic_inputs(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<HN3Manifold> out;
  for (int n = 0; n < count; ++n) {
    switch (n % 4) {
      case 0: out.push_back(with_algebra(random_semidirect(rng))); break;
      case 1: out.push_back(with_algebra(random_two_step(rng))); break;
      case 2: out.push_back(with_algebra(random_reeb_valued(rng))); break;
      default: out.push_back(builtin_example(lambda_values()[rng() % lambda_values().size()])); break;
    }
  }
  return out;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(num(rng), den(rng));
  return m;
}

inline Tensor random_tensor(std::mt19937& rng, std::size_t n, std::size_t upper, std::size_t lower) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Tensor t(n, upper, lower);
  for (std::size_t i = 0; i < t.size(); ++i) t.flat(i) = Scalar(num(rng), den(rng));
  return t;
}

// ---------------------------------------------------------------------------
// Vector-level oracles.

/// ∇_x y from 2g(∇_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y), solved
/// one basis covector at a time on basis pairs and extended bilinearly.
class Koszul {
 public:
  explicit Koszul(const MetricLieAlgebra& m) : m_(m), g_inv_(m.metric_inverse()) {
    const std::size_t n = m.dim();
    const auto& l = m.algebra();
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector x = basis_vector(n, i), y = basis_vector(n, j);
        Vector lowered(n);
        for (std::size_t k = 0; k < n; ++k) {
          const Vector z = basis_vector(n, k);
          lowered[k] =
              Scalar(1, 2) * (m.g(l.bracket(x, y), z) - m.g(l.bracket(y, z), x) + m.g(l.bracket(z, x), y));
        }
        table_[i * n + j] = g_inv_ * lowered;
      }
  }

  Vector operator()(const Vector& x, const Vector& y) const {
    const std::size_t n = m_.dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(y[j])) {
          const Scalar c = x[i] * y[j];
          const Vector& v = table_[i * n + j];
          for (std::size_t k = 0; k < n; ++k) out[k] += c * v[k];
        }
    }
    return out;
  }

  const MetricLieAlgebra& metric_algebra() const { return m_; }
  const Matrix& metric_inverse() const { return g_inv_; }

 private:
  const MetricLieAlgebra& m_;
  Matrix g_inv_;
  std::vector<Vector> table_;
};

inline Vector nabla(const MetricLieAlgebra& m, const Vector& x, const Vector& y) { return Koszul(m)(x, y); }

/// F_α(x,y,z) = g(∇_x(φy) - φ∇_x y, z).
inline Scalar F(const HN3Manifold& h, const Koszul& nab, Alpha a, const Vector& x, const Vector& y, const Vector& z) {
  const Matrix& phi = h.structure(a).phi;
  return h.metric_algebra().g(nab(x, phi * y) - phi * nab(x, y), z);
}

inline Scalar F(const HN3Manifold& h, Alpha a, const Vector& x, const Vector& y, const Vector& z) {
  return F(h, Koszul(h.metric_algebra()), a, x, y, z);
}

/// Componentwise F_α table through the vector oracle.
inline Tensor F_table(const HN3Manifold& h, Alpha a) {
  const std::size_t n = h.dim();
  const Koszul nab(h.metric_algebra());
  Tensor t = Tensor::covariant(n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        t(i, j, k) = F(h, nab, a, basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
  return t;
}

/// N_α(x,y) = φ²[x,y] + [φx,φy] - φ[φx,y] - φ[x,φy] + ξ dη(x,y),
/// with dη(x,y) = -η([x,y]).
inline Vector N(const HN3Manifold& h, Alpha a, const Vector& x, const Vector& y) {
  const auto& s = h.structure(a);
  const auto& l = h.algebra();
  const Matrix& p = s.phi;
  const Scalar d_eta = -dot(s.eta, l.bracket(x, y));
  return p * (p * l.bracket(x, y)) + l.bracket(p * x, p * y) - p * l.bracket(p * x, y) - p * l.bracket(x, p * y) +
         d_eta * s.xi;
}

/// {x, y} = ∇_x y + ∇_y x.
inline Vector brace(const Koszul& nab, const Vector& x, const Vector& y) { return nab(x, y) + nab(y, x); }

inline Vector brace(const MetricLieAlgebra& m, const Vector& x, const Vector& y) { return brace(Koszul(m), x, y); }

/// (𝔏_ξ g)(x, y) = g(∇_x ξ, y) + g(x, ∇_y ξ).
inline Scalar lie_g(const Koszul& nab, const Vector& xi, const Vector& x, const Vector& y) {
  const auto& m = nab.metric_algebra();
  return m.g(nab(x, xi), y) + m.g(x, nab(y, xi));
}

inline Scalar lie_g(const MetricLieAlgebra& m, const Vector& xi, const Vector& x, const Vector& y) {
  return lie_g(Koszul(m), xi, x, y);
}

/// N̂_α(x,y) = {φx,φy} + φ²{x,y} - φ{φx,y} - φ{x,φy} - ε (𝔏_ξ g)(x,y) ξ.
inline Vector Nhat(const HN3Manifold& h, const Koszul& nab, Alpha a, const Vector& x, const Vector& y) {
  const auto& s = h.structure(a);
  const Matrix& p = s.phi;
  return brace(nab, p * x, p * y) + p * (p * brace(nab, x, y)) - p * brace(nab, p * x, y) -
         p * brace(nab, x, p * y) - (Scalar(s.epsilon) * lie_g(nab, s.xi, x, y)) * s.xi;
}

inline Vector Nhat(const HN3Manifold& h, Alpha a, const Vector& x, const Vector& y) {
  return Nhat(h, Koszul(h.metric_algebra()), a, x, y);
}

/// D_x y for a connection given by its torsion: g(D_x y, z) = g(∇_x y, z) + ½T(x,y,z).
inline Vector connection_from_torsion(const HN3Manifold& h, const Koszul& nab, const Tensor& T, const Vector& x,
                                      const Vector& y) {
  const std::size_t n = h.dim();
  Vector lowered(n);
  const Vector base = nab(x, y);
  for (std::size_t k = 0; k < n; ++k)
    lowered[k] = h.metric_algebra().g(base, basis_vector(n, k)) +
                 Scalar(1, 2) * evaluate_form(T, {x, y, basis_vector(n, k)});
  return nab.metric_inverse() * lowered;
}

/// f(λ) is affine in λ when f(c) is reproduced by
/// interpolating f(a) and f(b).
inline bool affine_in_lambda(const Tensor& fa, const Tensor& fb, const Tensor& fc, const Scalar& a, const Scalar& b,
                             const Scalar& c) {
  const Scalar t = (c - a) / (b - a);
  return fa + t * (fb - fa) == fc;
}

}  // namespace hn3::testing
