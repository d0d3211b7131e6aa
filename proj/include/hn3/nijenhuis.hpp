#pragma once

// Fundamental tensors F_α, Nijenhuis tensors N_α, the symmetric-brace
// analogues {φ_α, φ_α} and N̂_α, the four block tensors N̂^(1..4)_α, and the
// associated Nijenhuis tensors {J_α, J_β} of the product extension.
//
// Each quantity has a definitional route (from ∇, brackets or braces). The
// closed forms in terms of F_α are implemented separately so the two can be
// compared exactly.

#include <array>
#include <cstddef>

#include "hn3/errors.hpp"
#include "hn3/lie.hpp"
#include "hn3/structures.hpp"
#include "hn3/tensor.hpp"

namespace hn3 {

/// A (1,2) tensor together with its (0,3) form T(x,y,z) = g(T(x,y),z).
struct MixedAndLowered {
  Tensor mixed;
  Tensor lowered;
};

namespace detail {

inline MixedAndLowered with_lowered(Tensor t, const Matrix& g) {
  Tensor l = lower(t, g);
  return {std::move(t), std::move(l)};
}

// out(x, y, z) = a(x, y) w(z)
inline Tensor times_last(const Tensor& a, const Vector& w) { return tensor_product(a, Tensor::from_covector(w)); }

// out(x, y, z) = a(x, z) w(y)
inline Tensor times_middle(const Tensor& a, const Vector& w) { return permute(times_last(a, w), {0, 2, 1}); }

// out(x, y, z) = w(x) a(y, z)
inline Tensor times_first(const Vector& w, const Tensor& a) { return tensor_product(Tensor::from_covector(w), a); }

// P(x, y) = B(φx, φy) + φ²B(x, y) - φB(φx, y) - φB(x, φy) for a (1,2) tensor B.
inline Tensor phi_commutator(const Tensor& b, const Matrix& phi) {
  const Tensor b_phi_x = precompose(b, 0, phi);
  return precompose(b_phi_x, 1, phi) + postcompose(phi * phi, b) - postcompose(phi, b_phi_x) -
         postcompose(phi, precompose(b, 1, phi));
}

inline void require_b_metric(Alpha a, const char* what) {
  if (a != 2 && a != 3) throw DimensionError(std::string(what) + ": structure index must be 2 or 3");
}

}  // namespace detail

/// F_α(x, y, z) = g((∇_x φ_α) y, z).
inline Tensor fundamental_F(const HN3Manifold& h, Alpha a) {
  const Connection lc = levi_civita(h.metric_algebra());
  const Tensor nabla_phi = covariant_derivative(lc, Tensor::from_endomorphism(h.structure(a).phi));
  return lower(nabla_phi, h.metric());
}

/// dη_α(x, y) = (∇_x η_α)(y) - (∇_y η_α)(x), without a factor ½.
inline Tensor d_eta(const HN3Manifold& h, Alpha a) {
  const Connection lc = levi_civita(h.metric_algebra());
  const Tensor nabla_eta = covariant_derivative(lc, Tensor::from_covector(h.structure(a).eta));
  return nabla_eta - permute(nabla_eta, {1, 0});
}

/// The same 2-form from the structure constants: dη(x, y) = -η([x, y]).
inline Tensor d_eta_by_brackets(const HN3Manifold& h, Alpha a) {
  const Tensor& c = h.algebra().structure();
  const Vector& eta = h.structure(a).eta;
  Tensor out = Tensor::covariant(h.dim(), 2);
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      for (std::size_t k = 0; k < h.dim(); ++k) out(i, j) -= c(i, j, k) * eta[k];
  return out;
}

/// Checks the structural identities of a fundamental tensor:
///   F(x,y,z) = -ε F(x,z,y)
///            = -ε F(x,φy,φz) + F(x,ξ,z) η(y) + F(x,y,ξ) η(z),
/// and for α = 1 additionally
///   F(x,y,φz) = F(x,φy,z) + F(x,ξ,φy) η(z) + F(x,ξ,φz) η(y).
inline Report check_F_properties(const Tensor& F, const HN3Manifold& h, Alpha a) {
  Report report("fundamental-tensor-properties-" + std::to_string(a));
  const auto& s = h.structure(a);
  const Scalar eps = s.epsilon;

  report.compare("F(x,y,z) = -eps F(x,z,y)", F, -eps * permute(F, {0, 2, 1}));

  const Tensor reflected = -eps * precompose(precompose(F, 1, s.phi), 2, s.phi) +
                           detail::times_middle(contract_slot(F, 1, s.xi), s.eta) +
                           detail::times_last(contract_slot(F, 2, s.xi), s.eta);
  report.compare("F(x,y,z) = -eps F(x,phi y,phi z) + F(x,xi,z) eta(y) + F(x,y,xi) eta(z)", F, reflected);

  if (a == 1) {
    const Tensor f_xi_phi = precompose(contract_slot(F, 1, s.xi), 1, s.phi);  // F(x, ξ, φy)
    const Tensor rhs = precompose(F, 1, s.phi) + detail::times_last(f_xi_phi, s.eta) +
                       detail::times_middle(f_xi_phi, s.eta);
    report.compare("F(x,y,phi z) = F(x,phi y,z) + F(x,xi,phi y) eta(z) + F(x,xi,phi z) eta(y)",
                   precompose(F, 2, s.phi), rhs);
  }
  return report;
}

/// N_α = [φ_α, φ_α] + ξ_α ⊗ dη_α with
/// [φ,φ](x,y) = φ²[x,y] + [φx,φy] - φ[φx,y] - φ[x,φy].
inline MixedAndLowered nijenhuis_N(const HN3Manifold& h, Alpha a) {
  const auto& s = h.structure(a);
  Tensor n = detail::phi_commutator(h.algebra().structure(), s.phi) +
             tensor_product(Tensor::from_vector(s.xi), d_eta(h, a));
  return detail::with_lowered(std::move(n), h.metric());
}

/// {φ,φ}(x,y) = {φx,φy} + φ²{x,y} - φ{φx,y} - φ{x,φy}.
inline Tensor phi_braces(const HN3Manifold& h, Alpha a) {
  return detail::phi_commutator(braces(h.metric_algebra()), h.structure(a).phi);
}

/// N̂_α = {φ_α, φ_α} - ε_α ξ_α ⊗ 𝔏_{ξ_α} g.
inline MixedAndLowered assoc_nijenhuis(const HN3Manifold& h, Alpha a) {
  const auto& s = h.structure(a);
  const Tensor lie_g = lie_derivative_metric(h.metric_algebra(), s.xi);
  Tensor n = phi_braces(h, a) - Scalar(s.epsilon) * tensor_product(Tensor::from_vector(s.xi), lie_g);
  return detail::with_lowered(std::move(n), h.metric());
}

/// N_1, N̂_1 (as (0,3) tensors) and 𝔏_{ξ_1} g written through F_1.
struct F1Expressions {
  Tensor nijenhuis;
  Tensor assoc_nijenhuis;
  Tensor lie_g;
};

inline F1Expressions tensors_from_F1(const Tensor& F1, const HN3Manifold& h) {
  const auto& s = h.structure(1);
  // F(x, φy, ξ)
  const Tensor f_phi_xi = precompose(contract_slot(F1, 2, s.xi), 1, s.phi);
  // A(x,y,z) = F(φx,y,z) + F(x,y,φz) + F(x,φy,ξ) η(z)
  const Tensor half = precompose(F1, 0, s.phi) + precompose(F1, 2, s.phi) + detail::times_last(f_phi_xi, s.eta);
  const Tensor swapped = permute(half, {1, 0, 2});
  return {half - swapped, half + swapped, f_phi_xi + permute(f_phi_xi, {1, 0})};
}

/// N̂_α for a B-metric structure (α = 2, 3) through F_α:
///   N̂(x,y,z) = F(φx,y,z) - F(x,y,φz) + F(x,φy,ξ) η(z) + (x ↔ y).
inline Tensor Nhat2_from_F2(const Tensor& F, const HN3Manifold& h, Alpha a = 2) {
  detail::require_b_metric(a, "Nhat2_from_F2");
  const auto& s = h.structure(a);
  const Tensor f_phi_xi = precompose(contract_slot(F, 2, s.xi), 1, s.phi);
  const Tensor half = precompose(F, 0, s.phi) - precompose(F, 2, s.phi) + detail::times_last(f_phi_xi, s.eta);
  return half + permute(half, {1, 0, 2});
}

/// F_α for a B-metric structure recovered from N_α and N̂_α ((0,3) forms):
///   F(x,y,z) = -¼{N(φx,y,z) + N(φx,z,y) + N̂(φx,y,z) + N̂(φx,z,y)}
///              + ½ η(x){N(ξ,y,φz) + N̂(ξ,y,φz) + η(z) N̂(ξ,ξ,φy)}.
inline Tensor F2_from_N2(const Tensor& N, const Tensor& Nhat, const HN3Manifold& h, Alpha a = 2) {
  detail::require_b_metric(a, "F2_from_N2");
  const auto& s = h.structure(a);
  const Tensor sum = precompose(N + Nhat, 0, s.phi);
  const Tensor first = Scalar(-1, 4) * (sum + permute(sum, {0, 2, 1}));

  const Tensor xi_term = precompose(contract_slot(N + Nhat, 0, s.xi), 1, s.phi);  // (y, z)
  const Tensor nhat_xixi = precompose(contract_slot(contract_slot(Nhat, 0, s.xi), 0, s.xi), 0, s.phi);  // (y)
  const Tensor inner = xi_term + tensor_product(nhat_xixi, Tensor::from_covector(s.eta));
  return first + Scalar(1, 2) * detail::times_first(s.eta, inner);
}

/// 𝔏_{ξ_α} g for a B-metric structure recovered from N̂_α:
///   -½{N̂(φx,φy,ξ) + N̂(ξ,φx,φy) + N̂(ξ,φy,φx) + η(x) N̂(ξ,ξ,y) + η(y) N̂(ξ,ξ,x)}.
inline Tensor lie_g_from_Nhat2(const Tensor& Nhat, const HN3Manifold& h, Alpha a = 2) {
  detail::require_b_metric(a, "lie_g_from_Nhat2");
  const auto& s = h.structure(a);
  const Tensor phi_phi_xi = precompose(precompose(contract_slot(Nhat, 2, s.xi), 0, s.phi), 1, s.phi);
  const Tensor xi_phi_phi = precompose(precompose(contract_slot(Nhat, 0, s.xi), 0, s.phi), 1, s.phi);
  const Tensor bracket = phi_phi_xi + xi_phi_phi + permute(xi_phi_phi, {1, 0});
  const Tensor xixi = contract_slot(contract_slot(Nhat, 0, s.xi), 0, s.xi);  // (y)
  const Tensor eta_t = tensor_product(Tensor::from_covector(s.eta), xixi);
  return Scalar(-1, 2) * (bracket + eta_t + permute(eta_t, {1, 0}));
}

/// The four tensors whose vanishing is equivalent to {J_α, J_α} = 0:
///   N̂^(1)(x,y) = {φ,φ}(x,y) - ε (𝔏_ξ g)(x,y) ξ                      (1,2)
///   N̂^(2)(x,y) = -ε (𝔏_ξ g)(φx,y) - ε (𝔏_ξ g)(x,φy)                  (0,2)
///   N̂^(3) x    = {φ,φ}(φx,ξ) + (𝔏_ξ η)(φx) ξ + 2 η(x) φ ∇_ξ ξ       (1,1)
///   N̂^(4)(x)   = -(𝔏_ξ η)(x)                                        (0,1)
struct HatComponents {
  Tensor n1;
  Tensor n2;
  Tensor n3;
  Tensor n4;
};

inline HatComponents hat_components(const HN3Manifold& h, Alpha a) {
  const auto& s = h.structure(a);
  const Scalar eps = s.epsilon;
  const Tensor pb = phi_braces(h, a);
  const Tensor lie_g = lie_derivative_metric(h.metric_algebra(), s.xi);
  const Tensor lie_eta = lie_derivative_form(h.algebra(), s.xi, s.eta);
  const Tensor xi_v = Tensor::from_vector(s.xi);

  HatComponents out;
  out.n1 = pb - eps * tensor_product(xi_v, lie_g);
  out.n2 = -eps * (precompose(lie_g, 0, s.phi) + precompose(lie_g, 1, s.phi));

  const Vector nabla_xi_xi = levi_civita(h.metric_algebra()).apply(s.xi, s.xi);
  out.n3 = contract_slot(precompose(pb, 0, s.phi), 1, s.xi) + tensor_product(xi_v, precompose(lie_eta, 0, s.phi)) +
           Scalar(2) * tensor_product(Tensor::from_vector(s.phi * nabla_xi_xi), Tensor::from_covector(s.eta));
  out.n4 = -lie_eta;
  return out;
}

/// Braces of the product extension for left-invariant fields,
/// {(x, a∂t), (y, b∂t)} = ({x, y}, 0).
inline Tensor product_braces(const ProductExtension& p) {
  const std::size_t n = p.base().dim();
  const Tensor base = braces(p.base().metric_algebra());
  Tensor out = Tensor::mixed(n + 1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = base(i, j, k);
  return out;
}

/// {J_α, J_β}, stored without the factor 2 of its defining identity:
///   2{J_α,J_β}(X,Y) = {J_αX,J_βY} - J_α{J_βX,Y} - J_α{X,J_βY}
///                   + {J_βX,J_αY} - J_β{J_αX,Y} - J_β{X,J_αY}
///                   + (J_αJ_β + J_βJ_α){X,Y}.
/// For α = β this is {JX,JY} - J{JX,Y} - J{X,JY} - {X,Y}.
inline Tensor assoc_JJ(const ProductExtension& p, Alpha a, Alpha b) {
  const Tensor br = product_braces(p);
  const Matrix& ja = p.J(a);
  const Matrix& jb = p.J(b);
  auto half = [&](const Matrix& u, const Matrix& v) {
    return precompose(precompose(br, 0, u), 1, v) - postcompose(u, precompose(br, 0, v)) -
           postcompose(u, precompose(br, 1, v));
  };
  Tensor twice = half(ja, jb) + half(jb, ja) + postcompose(ja * jb + jb * ja, br);
  return Scalar(1, 2) * twice;
}

/// Reads {J_α, J_α} block by block against N̂^(1..4)_α:
///   {J,J}((x,0),(y,0))  = (N̂^(1)(x,y), N̂^(2)(x,y) ∂t),
///   {J,J}((x,0),(0,∂t)) = (N̂^(3) x,    N̂^(4)(x) ∂t).
inline Report check_block_identity(const ProductExtension& p, Alpha a) {
  Report report("product-block-identity-" + std::to_string(a));
  const std::size_t n = p.base().dim();
  const Tensor jj = assoc_JJ(p, a, a);
  const HatComponents hat = hat_components(p.base(), a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) report.compare("{J,J}((x,0),(y,0)) = N^(1)", {i, j, k}, jj(i, j, k), hat.n1(i, j, k));
      report.compare("{J,J}((x,0),(y,0)) dt-part = N^(2)", {i, j}, jj(i, j, n), hat.n2(i, j));
    }
    for (std::size_t k = 0; k < n; ++k) report.compare("{J,J}((x,0),(0,dt)) = N^(3)", {i, k}, jj(i, n, k), hat.n3(i, k));
    report.compare("{J,J}((x,0),(0,dt)) dt-part = N^(4)", {i}, jj(i, n, n), hat.n4(i));
  }
  return report;
}

/// Every tensor of the family for one structure.
struct NijenhuisSuite {
  Alpha alpha = 1;
  Tensor F;
  MixedAndLowered N;
  Tensor phi_braces;
  MixedAndLowered Nhat;
  Tensor lie_g;
  Tensor d_eta;
  HatComponents hat;
};

inline NijenhuisSuite nijenhuis_suite(const HN3Manifold& h, Alpha a) {
  NijenhuisSuite s;
  s.alpha = a;
  s.F = fundamental_F(h, a);
  s.N = nijenhuis_N(h, a);
  s.phi_braces = phi_braces(h, a);
  s.Nhat = assoc_nijenhuis(h, a);
  s.lie_g = lie_derivative_metric(h.metric_algebra(), h.structure(a).xi);
  s.d_eta = d_eta(h, a);
  s.hat = hat_components(h, a);
  return s;
}

}  // namespace hn3
