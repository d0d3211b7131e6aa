#pragma once

// Almost contact 3-structures with a metric of Hermitian-Norden type, and the
// almost hypercomplex structure they induce on the product with a line.

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "hn3/lie.hpp"
#include "hn3/matrix.hpp"
#include "hn3/report.hpp"

namespace hn3 {

/// Structure index α ∈ {1, 2, 3}. Kept 1-based to match the usual labelling
/// of φ_1, φ_2, φ_3.
using Alpha = int;

/// Compatibility signs (ε_1, ε_2, ε_3) = (1, -1, -1): φ_1 is an isometry of g,
/// φ_2 and φ_3 are anti-isometries.
inline int epsilon(Alpha a) {
  if (a < 1 || a > 3) throw DimensionError("structure index must be 1, 2 or 3");
  return a == 1 ? 1 : -1;
}

/// Levi-Civita symbol ϵ_{αβγ} on {1,2,3}.
inline int levi_civita_symbol(Alpha a, Alpha b, Alpha c) {
  if (a == b || b == c || a == c) return 0;
  const int p = (a - 1) * 9 + (b - 1) * 3 + (c - 1);
  // even permutations of (1,2,3): 123, 231, 312
  return (p == 5 || p == 15 || p == 19) ? 1 : -1;
}

/// The third index of {α, β} when α ≠ β.
inline Alpha third_index(Alpha a, Alpha b) { return 6 - a - b; }

struct AlmostContactStructure {
  Matrix phi;  // endomorphism, column j is φ e_j
  Vector xi;   // Reeb vector
  Vector eta;  // contact 1-form
  int epsilon = 1;

  friend bool operator==(const AlmostContactStructure&, const AlmostContactStructure&) = default;
};

/// A metric Lie algebra with three almost contact structures. Construction
/// checks sizes and the fixed ε signs only; the axioms are checked by
/// validate_ac3() and validate_hn_metric().
class HN3Manifold {
 public:
  HN3Manifold(MetricLieAlgebra metric_algebra, std::array<AlmostContactStructure, 3> structures)
      : m_(std::move(metric_algebra)), s_(std::move(structures)) {
    for (Alpha a = 1; a <= 3; ++a) {
      const auto& s = structure(a);
      if (s.phi.rows() != dim() || s.phi.cols() != dim() || s.xi.size() != dim() || s.eta.size() != dim())
        throw DimensionError("HN3Manifold: structure " + std::to_string(a) + " has the wrong size");
      if (s.epsilon != epsilon(a))
        throw DimensionError("HN3Manifold: epsilon of structure " + std::to_string(a) + " must be " +
                             std::to_string(epsilon(a)));
    }
  }

  std::size_t dim() const noexcept { return m_.dim(); }
  const MetricLieAlgebra& metric_algebra() const noexcept { return m_; }
  const LieAlgebra& algebra() const noexcept { return m_.algebra(); }
  const Matrix& metric() const noexcept { return m_.metric(); }
  const AlmostContactStructure& structure(Alpha a) const {
    if (a < 1 || a > 3) throw DimensionError("structure index must be 1, 2 or 3");
    return s_[static_cast<std::size_t>(a - 1)];
  }
  const std::array<AlmostContactStructure, 3>& structures() const noexcept { return s_; }

  friend bool operator==(const HN3Manifold&, const HN3Manifold&) = default;

 private:
  MetricLieAlgebra m_;
  std::array<AlmostContactStructure, 3> s_;
};

/// The structure identities
///   φ_α φ_β = -δ_αβ I + ξ_α ⊗ η_β + ϵ_αβγ φ_γ,   φ_α ξ_β = ϵ_αβγ ξ_γ,
///   η_α ∘ φ_β = ϵ_αβγ η_γ,                       η_α(ξ_β) = δ_αβ,
/// for all α, β, plus the derived rank φ_α = dim - 1. Violation indices are
/// (α, β, row[, col]) with α, β 0-based like every other index.
inline Report validate_ac3(const HN3Manifold& h) {
  Report report("almost-contact-3-structure");
  const std::size_t n = h.dim();
  if (n % 4 != 3) report.note("dimension " + std::to_string(n) + " is not of the form 4k+3");

  for (Alpha a = 1; a <= 3; ++a)
    for (Alpha b = 1; b <= 3; ++b) {
      const auto& sa = h.structure(a);
      const auto& sb = h.structure(b);
      Matrix rhs = Matrix::outer(sa.xi, sb.eta);
      Vector xi_rhs(n);
      Vector eta_rhs(n);
      if (a == b) {
        rhs -= Matrix::identity(n);
      } else {
        const Alpha c = third_index(a, b);
        const Scalar sign = levi_civita_symbol(a, b, c);
        rhs += sign * h.structure(c).phi;
        xi_rhs = sign * h.structure(c).xi;
        eta_rhs = sign * h.structure(c).eta;
      }
      const std::size_t ia = static_cast<std::size_t>(a - 1);
      const std::size_t ib = static_cast<std::size_t>(b - 1);

      const Matrix lhs = sa.phi * sb.phi;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          report.compare("phi_a phi_b = -delta I + xi_a (x) eta_b + eps phi_c", {ia, ib, r, c}, lhs(r, c), rhs(r, c));

      const Vector phi_xi = sa.phi * sb.xi;
      for (std::size_t r = 0; r < n; ++r)
        report.compare("phi_a xi_b = eps xi_c", {ia, ib, r}, phi_xi[r], xi_rhs[r]);

      const Vector eta_phi = compose(sa.eta, sb.phi);
      for (std::size_t r = 0; r < n; ++r)
        report.compare("eta_a o phi_b = eps eta_c", {ia, ib, r}, eta_phi[r], eta_rhs[r]);

      report.compare("eta_a(xi_b) = delta", {ia, ib}, dot(sa.eta, sb.xi), Scalar(a == b ? 1 : 0));
    }

  for (Alpha a = 1; a <= 3; ++a) {
    const std::size_t r = rank(h.structure(a).phi);
    if (r + 1 != n)
      report.add_violation("rank phi_a = dim - 1", {static_cast<std::size_t>(a - 1)}, Scalar(static_cast<long>(r)),
                           Scalar(static_cast<long>(n - 1)));
  }
  return report;
}

/// g(φ_α x, φ_α y) = ε_α g(x,y) + η_α(x) η_α(y), η_α = -ε_α ξ_α ⌟ g and
/// g(ξ_α, ξ_α) = -ε_α, together with symmetry and nondegeneracy of g.
inline Report validate_hn_metric(const HN3Manifold& h) {
  Report report("hermitian-norden-metric");
  report.merge(validate_metric(h.metric_algebra()));
  const Matrix& g = h.metric();
  for (Alpha a = 1; a <= 3; ++a) {
    const auto& s = h.structure(a);
    const std::size_t ia = static_cast<std::size_t>(a - 1);
    const Scalar eps = s.epsilon;

    const Matrix lhs = s.phi.transpose() * g * s.phi;
    const Matrix rhs = eps * g + Matrix::outer(s.eta, s.eta);
    for (std::size_t i = 0; i < h.dim(); ++i)
      for (std::size_t j = 0; j < h.dim(); ++j)
        report.compare("g(phi x, phi y) = eps g(x,y) + eta(x) eta(y)", {ia, i, j}, lhs(i, j), rhs(i, j));

    const Vector xi_g = g * s.xi;  // (ξ ⌟ g)(y) = g(ξ, y)
    for (std::size_t i = 0; i < h.dim(); ++i)
      report.compare("eta = -eps xi -| g", {ia, i}, s.eta[i], -eps * xi_g[i]);

    report.compare("g(xi, xi) = -eps", {ia}, bilinear(g, s.xi, s.xi), -eps);
  }
  return report;
}

/// M × ℝ modelled as the (dim+1)-dimensional algebra with the t-direction
/// appended last and central, metric G = g ⊕ (-1), and
///   J_α(x, a ∂t) = (φ_α x - a ξ_α, η_α(x) ∂t).
class ProductExtension {
 public:
  explicit ProductExtension(const HN3Manifold& base)
      : base_(base), extended_(extend_algebra(base), extend_metric(base)) {
    const std::size_t n = base.dim();
    for (Alpha a = 1; a <= 3; ++a) {
      const auto& s = base.structure(a);
      Matrix j(n + 1, n + 1);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) j(r, c) = s.phi(r, c);
        j(r, n) = -s.xi[r];
        j(n, r) = s.eta[r];
      }
      j_[static_cast<std::size_t>(a - 1)] = std::move(j);
    }
  }

  const HN3Manifold& base() const noexcept { return base_; }
  const MetricLieAlgebra& metric_algebra() const noexcept { return extended_; }
  const Matrix& metric() const noexcept { return extended_.metric(); }
  std::size_t dim() const noexcept { return extended_.dim(); }
  const Matrix& J(Alpha a) const { return j_.at(static_cast<std::size_t>(a - 1)); }

 private:
  static LieAlgebra extend_algebra(const HN3Manifold& base) {
    const std::size_t n = base.dim();
    LieAlgebra l(n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) l.constant(i, j, k) = base.algebra().constant(i, j, k);
    return l;
  }

  static Matrix extend_metric(const HN3Manifold& base) {
    const std::size_t n = base.dim();
    Matrix g(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = base.metric()(i, j);
    g(n, n) = -1;
    return g;
  }

  HN3Manifold base_;
  MetricLieAlgebra extended_;
  std::array<Matrix, 3> j_;
};

/// Builds the product extension of a base that passes validate_ac3() and
/// validate_hn_metric(); throws PreconditionError otherwise.
inline ProductExtension build_product(const HN3Manifold& h) {
  const Report ac3 = validate_ac3(h);
  const Report hn = validate_hn_metric(h);
  if (!ac3.passed() || !hn.passed())
    throw PreconditionError("build_product: the base is not an almost contact HN-metric 3-structure");
  return ProductExtension(h);
}

/// J_α² = -I, G(J_α X, J_α Y) = ε_α G(X, Y), J_α J_β = ϵ_αβγ J_γ (α ≠ β),
/// for an arbitrary triple of endomorphisms and metric.
inline Report validate_hypercomplex_hn(const Matrix& G, const std::array<Matrix, 3>& J) {
  Report report("almost-hypercomplex-hn-structure");
  const std::size_t n = G.rows();
  for (const auto& j : J)
    if (j.rows() != n || j.cols() != n) throw DimensionError("validate_hypercomplex_hn: size mismatch");
  auto Ja = [&](Alpha a) -> const Matrix& { return J[static_cast<std::size_t>(a - 1)]; };
  for (Alpha a = 1; a <= 3; ++a) {
    const std::size_t ia = static_cast<std::size_t>(a - 1);
    const Matrix& j = Ja(a);
    const Matrix sq = j * j;
    const Matrix minus_id = -Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) report.compare("J_a^2 = -I", {ia, r, c}, sq(r, c), minus_id(r, c));

    const Matrix lhs = j.transpose() * G * j;
    const Matrix rhs = Scalar(epsilon(a)) * G;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        report.compare("G(J_a X, J_a Y) = eps_a G(X,Y)", {ia, r, c}, lhs(r, c), rhs(r, c));

    for (Alpha b = 1; b <= 3; ++b) {
      if (a == b) continue;
      const Alpha c = third_index(a, b);
      const Matrix prod = j * Ja(b);
      const Matrix expect = Scalar(levi_civita_symbol(a, b, c)) * Ja(c);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col)
          report.compare("J_a J_b = eps_abc J_c", {ia, static_cast<std::size_t>(b - 1), r, col}, prod(r, col),
                         expect(r, col));
    }
  }
  return report;
}

inline Report validate_hypercomplex_hn(const ProductExtension& p) {
  return validate_hypercomplex_hn(p.metric(), {p.J(1), p.J(2), p.J(3)});
}

}  // namespace hn3
