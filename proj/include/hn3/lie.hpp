#pragma once

// Metric Lie algebras viewed as left-invariant geometries. Every tensor field
// has constant components in the chosen basis, so directional derivatives of
// component functions vanish and all calculus reduces to the structure
// constants.

#include <cstddef>
#include <string>
#include <utility>

#include "hn3/errors.hpp"
#include "hn3/matrix.hpp"
#include "hn3/report.hpp"
#include "hn3/tensor.hpp"

namespace hn3 {

/// Structure constants stored as a (1,2) tensor: c(i, j, k) is the
/// e_k-component of [e_i, e_j].
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim) : c_(Tensor::mixed(dim, 2)) {}
  explicit LieAlgebra(Tensor structure) : c_(std::move(structure)) {
    if (!c_.has_valence(1, 2)) throw DimensionError("LieAlgebra: structure constants must be a (1,2) tensor");
  }

  std::size_t dim() const noexcept { return c_.dim(); }
  const Tensor& structure() const noexcept { return c_; }

  /// Raw access; no antisymmetric completion.
  Scalar& constant(std::size_t i, std::size_t j, std::size_t k) { return c_(i, j, k); }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

  /// Sets [e_i, e_j] ∋ value·e_k together with the opposite entry.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
    c_(i, j, k) = value;
    c_(j, i, k) = -value;
  }

  Vector bracket(const Vector& x, const Vector& y) const { return evaluate_map(c_, {x, y}); }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  Tensor c_;
};

/// A Lie algebra with a (possibly indefinite) scalar product. Construction
/// only checks sizes so that malformed input can still be reported on.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(LieAlgebra algebra, Matrix metric) : algebra_(std::move(algebra)), g_(std::move(metric)) {
    if (!g_.is_square() || g_.rows() != algebra_.dim())
      throw DimensionError("MetricLieAlgebra: metric size does not match the algebra");
  }

  std::size_t dim() const noexcept { return algebra_.dim(); }
  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const Matrix& metric() const noexcept { return g_; }

  /// Throws SingularMatrixError for a degenerate metric.
  Matrix metric_inverse() const { return mat_inverse(g_); }

  Scalar g(const Vector& x, const Vector& y) const { return bilinear(g_, x, y); }

  friend bool operator==(const MetricLieAlgebra&, const MetricLieAlgebra&) = default;

 private:
  LieAlgebra algebra_;
  Matrix g_;
};

/// Christoffel symbols of a left-invariant connection: gamma(i, j, k) is the
/// e_k-component of D_{e_i} e_j.
class Connection {
 public:
  explicit Connection(Tensor gamma) : gamma_(std::move(gamma)) {
    if (!gamma_.has_valence(1, 2)) throw DimensionError("Connection: coefficients must be a (1,2) tensor");
  }

  std::size_t dim() const noexcept { return gamma_.dim(); }
  const Tensor& coefficients() const noexcept { return gamma_; }

  Vector apply(const Vector& x, const Vector& y) const { return evaluate_map(gamma_, {x, y}); }

  friend bool operator==(const Connection&, const Connection&) = default;

 private:
  Tensor gamma_;
};

/// Antisymmetry of the structure constants and the Jacobi identity.
inline Report validate_lie(const LieAlgebra& l) {
  Report report("lie-algebra");
  const std::size_t n = l.dim();
  bool antisymmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (l.constant(i, j, k) != -l.constant(j, i, k)) {
          report.add_violation("antisymmetry c(i,j,k) = -c(j,i,k)", {i, j, k}, l.constant(i, j, k),
                               -l.constant(j, i, k));
          antisymmetric = false;
        }

  // With antisymmetric constants the Jacobiator is alternating in (i, j, m),
  // so increasing triples suffice.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = antisymmetric ? i + 1 : 0; j < n; ++j)
      for (std::size_t m = antisymmetric ? j + 1 : 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) {
          Scalar s = 0;
          for (std::size_t p = 0; p < n; ++p) {
            s += l.constant(i, j, p) * l.constant(p, m, k);
            s += l.constant(j, m, p) * l.constant(p, i, k);
            s += l.constant(m, i, p) * l.constant(p, j, k);
          }
          if (!is_zero(s)) report.add_violation("Jacobi identity", {i, j, m, k}, s, Scalar(0));
        }
  return report;
}

/// Symmetry and nondegeneracy of the metric.
inline Report validate_metric(const MetricLieAlgebra& m) {
  Report report("metric");
  const Matrix& g = m.metric();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      report.compare("symmetry g(i,j) = g(j,i)", {i, j}, g(i, j), g(j, i));
  if (is_zero(determinant(g))) report.fail("metric is degenerate");
  return report;
}

namespace detail {

// Cl(i, j, k) = g([e_i, e_j], e_k).
inline Tensor lowered_brackets(const MetricLieAlgebra& m) { return lower(m.algebra().structure(), m.metric()); }

}  // namespace detail

/// Levi-Civita connection from the Koszul formula for left-invariant fields,
///   2 g(∇_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y),
/// solved for all (x, y) at once with g⁻¹ computed once.
inline Connection levi_civita(const MetricLieAlgebra& m) {
  const Matrix g_inv = m.metric_inverse();
  const Tensor cl = detail::lowered_brackets(m);
  Tensor koszul = cl - permute(cl, {1, 2, 0}) + permute(cl, {2, 0, 1});
  return Connection(raise_last(Scalar(1, 2) * koszul, g_inv));
}

/// Symmetric braces {x, y} = ∇_x y + ∇_y x, computed directly from
///   g({x,y}, z) = -g([y,z],x) + g([z,x],y).
inline Tensor braces(const MetricLieAlgebra& m) {
  const Matrix g_inv = m.metric_inverse();
  const Tensor cl = detail::lowered_brackets(m);
  return raise_last(permute(cl, {2, 0, 1}) - permute(cl, {1, 2, 0}), g_inv);
}

/// D t for a constant tensor t of type (0,s) or (1,s) (s may be 0). The
/// derivative direction is the FIRST slot of the result:
///   (D t)(x, y_1..y_s) = D_x(t(y..)) - Σ_j t(y_1, .., D_x y_j, .., y_s).
inline Tensor covariant_derivative(const Connection& conn, const Tensor& t) {
  if (t.dim() != conn.dim()) throw DimensionError("covariant_derivative: dimension mismatch");
  const std::size_t n = t.dim();
  const Tensor& gamma = conn.coefficients();
  Tensor out(n, t.upper(), t.lower() + 1);
  Index target(out.rank());

  for (std::size_t f = 0; f < t.size(); ++f) {
    const Scalar& v = t.flat(f);
    if (is_zero(v)) continue;
    const Index idx = t.index_of(f);
    for (std::size_t i = 0; i < n; ++i) {
      target[0] = i;
      std::copy(idx.begin(), idx.end(), target.begin() + 1);
      if (t.upper() == 1) {
        // out(i, y.., k) += Γ(i, m, k) t(y.., m)
        const std::size_t m = idx.back();
        for (std::size_t k = 0; k < n; ++k) {
          if (is_zero(gamma(i, m, k))) continue;
          target.back() = k;
          out.at(target) += gamma(i, m, k) * v;
        }
        target.back() = idx.back();
      }
      // out(i, .., j, ..) -= Γ(i, j, m) t(.., m, ..)
      for (std::size_t s = 0; s < t.lower(); ++s) {
        const std::size_t m = idx[s];
        for (std::size_t j = 0; j < n; ++j) {
          if (is_zero(gamma(i, j, m))) continue;
          target[s + 1] = j;
          out.at(target) -= gamma(i, j, m) * v;
        }
        target[s + 1] = idx[s];
      }
    }
  }
  return out;
}

/// Torsion T(x, y) = D_x y - D_y x - [x, y] as a (1,2) tensor.
inline Tensor torsion(const Connection& conn, const LieAlgebra& l) {
  const Tensor& gamma = conn.coefficients();
  return gamma - permute(gamma, {1, 0}) - l.structure();
}

/// (𝔏_ξ g)(x, y) = g(∇_x ξ, y) + g(x, ∇_y ξ).
inline Tensor lie_derivative_metric(const MetricLieAlgebra& m, const Vector& xi) {
  const Connection lc = levi_civita(m);
  // (∇ξ)(x, k): e_k-component of ∇_x ξ.
  const Tensor nabla_xi = covariant_derivative(lc, Tensor::from_vector(xi));
  const Tensor a = lower(nabla_xi, m.metric());
  return a + permute(a, {1, 0});
}

/// (𝔏_ξ η)(x) = ξ(η(x)) - η([ξ, x]) = -η([ξ, x]) for left-invariant data.
inline Tensor lie_derivative_form(const LieAlgebra& l, const Vector& xi, const Vector& eta) {
  const Tensor ad_xi = contract_slot(l.structure(), 0, xi);  // x ↦ [ξ, x]
  Tensor out = Tensor::covariant(l.dim(), 1);
  for (std::size_t x = 0; x < l.dim(); ++x)
    for (std::size_t k = 0; k < l.dim(); ++k) out(x) -= eta[k] * ad_xi(x, k);
  return out;
}

}  // namespace hn3
