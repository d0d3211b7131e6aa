#pragma once

// Natural connections with totally skew-symmetric torsion for the three
// structures of an almost contact HN-metric 3-structure.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hn3/errors.hpp"
#include "hn3/lie.hpp"
#include "hn3/nijenhuis.hpp"
#include "hn3/report.hpp"
#include "hn3/structures.hpp"
#include "hn3/tensor.hpp"

namespace hn3 {

/// A (0,3) torsion tensor. Certified forms are totally antisymmetric and were
/// produced with their existence precondition satisfied; uncertified ones come
/// from forced evaluation of a torsion formula.
class TorsionForm {
 public:
  static TorsionForm certified(Tensor t) {
    if (!t.has_valence(0, 3) || !is_three_form(t))
      throw PreconditionError("TorsionForm: torsion is not totally skew-symmetric");
    return TorsionForm(std::move(t), true);
  }

  static TorsionForm uncertified(Tensor t) {
    if (!t.has_valence(0, 3)) throw DimensionError("TorsionForm: need a (0,3) tensor");
    return TorsionForm(std::move(t), false);
  }

  const Tensor& tensor() const noexcept { return t_; }
  bool is_certified() const noexcept { return certified_; }

 private:
  TorsionForm(Tensor t, bool certified) : t_(std::move(t)), certified_(certified) {}

  Tensor t_;
  bool certified_;
};

struct NaturalConnection {
  Alpha alpha;
  Connection connection;
  TorsionForm torsion;
};

/// F_1(φx,y,z) + F_1(φy,x,z) + F_1(x,y,φz) + F_1(y,x,φz) = 0, the class in
/// which the skew-torsion natural connection of the first structure exists.
inline Report class_condition_W(const Tensor& F1, const HN3Manifold& h) {
  Report report("class-condition-structure-1");
  const Matrix& phi = h.structure(1).phi;
  const Tensor a = precompose(F1, 0, phi) + precompose(F1, 2, phi);
  report.compare("F(phi x,y,z) + F(phi y,x,z) + F(x,y,phi z) + F(y,x,phi z) = 0", a + permute(a, {1, 0, 2}),
                 Tensor::covariant(h.dim(), 3));
  return report;
}

/// 𝔖 F_α = 0 and ξ_α Killing, α ∈ {2, 3}.
inline Report class_condition_F3F7(const Tensor& F, const HN3Manifold& h, Alpha a) {
  if (a != 2 && a != 3) throw DimensionError("class_condition_F3F7: structure index must be 2 or 3");
  Report report("class-condition-structure-" + std::to_string(a));
  report.compare("cyclic sum of F = 0", cyclic_sum(F), Tensor::covariant(h.dim(), 3));
  report.compare("L_xi g = 0", lie_derivative_metric(h.metric_algebra(), h.structure(a).xi),
                 Tensor::covariant(h.dim(), 2));
  return report;
}

namespace detail {

inline void require_condition(const Report& condition, bool force, const char* what) {
  if (!condition.passed() && !force)
    throw PreconditionError(std::string(what) + ": class condition fails, so no natural connection with totally "
                                                "skew-symmetric torsion exists (use force to evaluate anyway)");
}

inline TorsionForm finish_torsion(Tensor t, bool condition_holds) {
  if (condition_holds) return TorsionForm::certified(std::move(t));
  return TorsionForm::uncertified(std::move(t));
}

}  // namespace detail

/// T_1(x,y,z) = F_1(x,y,φz) - F_1(y,x,φz) - F_1(φz,x,y) + 2 F_1(x,φy,ξ) η(z).
inline TorsionForm torsion_T1(const Tensor& F1, const HN3Manifold& h, bool force = false) {
  const Report condition = class_condition_W(F1, h);
  detail::require_condition(condition, force, "torsion_T1");
  const auto& s = h.structure(1);
  const Tensor f_z = precompose(F1, 2, s.phi);
  Tensor t = f_z - permute(f_z, {1, 0, 2}) - permute(precompose(F1, 0, s.phi), {2, 0, 1}) +
             Scalar(2) * detail::times_last(precompose(contract_slot(F1, 2, s.xi), 1, s.phi), s.eta);
  return detail::finish_torsion(std::move(t), condition.passed());
}

/// T_1 = -η∧dη + d^φΦ + N_1 - η∧(ξ⌟N_1) with Φ(x,y) = g(x,φy),
/// dΦ(x,y,z) = 𝔖 (∇_x Φ)(y,z) and d^φΦ(x,y,z) = -dΦ(φx,φy,φz). Built from ∇,
/// brackets and N_1, without going through F_1.
inline TorsionForm torsion_T1_assembly(const HN3Manifold& h, bool force = false) {
  const Report condition = class_condition_W(fundamental_F(h, 1), h);
  detail::require_condition(condition, force, "torsion_T1_assembly");
  const auto& s = h.structure(1);
  const Tensor eta = Tensor::from_covector(s.eta);
  const Connection lc = levi_civita(h.metric_algebra());

  const Tensor fundamental_form = Tensor::from_bilinear_form(h.metric() * s.phi);
  const Tensor d_phi = cyclic_sum(covariant_derivative(lc, fundamental_form));
  const Tensor d_phi_phi = -precompose(precompose(precompose(d_phi, 0, s.phi), 1, s.phi), 2, s.phi);

  const Tensor n1 = nijenhuis_N(h, 1).lowered;
  // ξ⌟N_1 is a 2-form exactly when N_1 is a 3-form; the wedge is spelled out
  // as 𝔖(η ⊗ ·) so forced evaluation still goes through.
  const Tensor eta_xi_n = cyclic_sum(tensor_product(eta, interior(s.xi, n1)));

  Tensor t = -wedge_1_2(eta, d_eta(h, 1)) + d_phi_phi + n1 - eta_xi_n;
  return detail::finish_torsion(std::move(t), condition.passed());
}

/// T_α(x,y,z) = -½ 𝔖 {F_α(x,y,φz) - 3 η(x) F_α(y,φz,ξ)}, α ∈ {2, 3}.
inline TorsionForm torsion_T23(const Tensor& F, const HN3Manifold& h, Alpha a, bool force = false) {
  const Report condition = class_condition_F3F7(F, h, a);
  detail::require_condition(condition, force, "torsion_T23");
  const auto& s = h.structure(a);
  const Tensor inner = precompose(F, 2, s.phi) -
                       Scalar(3) * detail::times_first(s.eta, precompose(contract_slot(F, 2, s.xi), 1, s.phi));
  Tensor t = Scalar(-1, 2) * cyclic_sum(inner);
  return detail::finish_torsion(std::move(t), condition.passed());
}

/// The torsion of structure α from its own formula.
inline TorsionForm torsion_for(const HN3Manifold& h, Alpha a, bool force = false) {
  const Tensor F = fundamental_F(h, a);
  return a == 1 ? torsion_T1(F, h, force) : torsion_T23(F, h, a, force);
}

/// g(D_x y, z) = g(∇_x y, z) + ½ T(x, y, z). The torsion of the result is
/// recomputed and must reproduce T.
inline NaturalConnection build_connection(const HN3Manifold& h, Alpha a, const TorsionForm& torsion_form) {
  const Tensor& t = torsion_form.tensor();
  if (t.dim() != h.dim()) throw DimensionError("build_connection: dimension mismatch");
  if (!is_three_form(t)) throw PreconditionError("build_connection: torsion is not totally skew-symmetric");
  const Connection lc = levi_civita(h.metric_algebra());
  Connection d(lc.coefficients() + raise_last(Scalar(1, 2) * t, h.metric_algebra().metric_inverse()));
  if (lower(torsion(d, h.algebra()), h.metric()) != t)
    throw std::logic_error("build_connection: recomputed torsion differs from the prescribed one");
  return {a, std::move(d), torsion_form};
}

/// D φ_α = D ξ_α = D η_α = D g = 0 for the structure α.
inline Report check_natural(const Connection& d, const HN3Manifold& h, Alpha a) {
  Report report("natural-connection-structure-" + std::to_string(a));
  const auto& s = h.structure(a);
  const std::size_t n = h.dim();
  report.compare("D phi = 0", covariant_derivative(d, Tensor::from_endomorphism(s.phi)), Tensor::mixed(n, 2));
  report.compare("D xi = 0", covariant_derivative(d, Tensor::from_vector(s.xi)), Tensor::mixed(n, 1));
  report.compare("D eta = 0", covariant_derivative(d, Tensor::from_covector(s.eta)), Tensor::covariant(n, 2));
  report.compare("D g = 0", covariant_derivative(d, Tensor::from_bilinear_form(h.metric())), Tensor::covariant(n, 3));
  return report;
}

inline Report check_natural(const NaturalConnection& d, const HN3Manifold& h) {
  return check_natural(d.connection, h, d.alpha);
}

/// Which of D^1, D^2, D^3 coincide, decided twice: (a) by comparing the three
/// torsion expressions pointwise on basis triples, (b) by comparing the
/// Christoffel symbols of the constructed connections.
struct CoincidenceResult {
  std::array<bool, 3> expressions_equal{};  // pairs (1,2), (1,3), (2,3)
  std::array<bool, 3> connections_equal{};
  bool condition_holds = false;
  bool verdicts_agree = false;
  std::string summary;
  Report report;
};

namespace detail {

inline const char* superscript(Alpha a) { return a == 1 ? "¹" : a == 2 ? "²" : "³"; }

inline std::string coincidence_summary(const std::array<bool, 3>& eq) {
  auto D = [](Alpha a) { return std::string("D") + superscript(a); };
  if (eq[0] && eq[1] && eq[2]) return D(1) + " = " + D(2) + " = " + D(3);
  if (eq[0]) return D(1) + " = " + D(2) + " ≠ " + D(3);
  if (eq[1]) return D(1) + " = " + D(3) + " ≠ " + D(2);
  if (eq[2]) return D(2) + " = " + D(3) + " ≠ " + D(1);
  return D(1) + ", " + D(2) + ", " + D(3) + " pairwise distinct";
}

// Pointwise value of the torsion expression of structure a on (x, y, z),
// evaluated directly from F_a by multilinear evaluation.
inline Scalar star_expression(const Tensor& F, const HN3Manifold& h, Alpha a, const Vector& x, const Vector& y,
                              const Vector& z) {
  const auto& s = h.structure(a);
  if (a == 1) {
    const Vector pz = s.phi * z;
    return evaluate_form(F, {x, y, pz}) - evaluate_form(F, {y, x, pz}) - evaluate_form(F, {pz, x, y}) +
           Scalar(2) * evaluate_form(F, {x, s.phi * y, s.xi}) * dot(s.eta, z);
  }
  auto term = [&](const Vector& u, const Vector& v, const Vector& w) {
    const Vector pw = s.phi * w;
    return evaluate_form(F, {u, v, pw}) - Scalar(3) * dot(s.eta, u) * evaluate_form(F, {v, pw, s.xi});
  };
  return Scalar(-1, 2) * (term(x, y, z) + term(y, z, x) + term(z, x, y));
}

}  // namespace detail

/// Decides whether the three natural skew-torsion connections coincide. The
/// hypotheses are N̂_α = 0 for all α and ξ_1 Killing; PreconditionError
/// otherwise.
inline CoincidenceResult coincidence_check(const HN3Manifold& h) {
  for (Alpha a = 1; a <= 3; ++a)
    if (!assoc_nijenhuis(h, a).mixed.is_zero())
      throw PreconditionError("coincidence_check: associated Nijenhuis tensor " + std::to_string(a) +
                              " does not vanish");
  if (!lie_derivative_metric(h.metric_algebra(), h.structure(1).xi).is_zero())
    throw PreconditionError("coincidence_check: xi_1 is not a Killing vector field");

  CoincidenceResult result;
  result.report = Report("connection-coincidence");
  const std::array<Tensor, 3> F{fundamental_F(h, 1), fundamental_F(h, 2), fundamental_F(h, 3)};
  const std::array<std::pair<Alpha, Alpha>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};

  // (a) pointwise comparison of the expressions.
  std::vector<std::string> differences;
  result.expressions_equal = {true, true, true};
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = basis_vector(n, i), y = basis_vector(n, j), z = basis_vector(n, k);
        std::array<Scalar, 3> e;
        for (Alpha a = 1; a <= 3; ++a) e[a - 1] = detail::star_expression(F[a - 1], h, a, x, y, z);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const auto [a, b] = pairs[p];
          if (e[a - 1] != e[b - 1]) {
            result.expressions_equal[p] = false;
            differences.push_back("torsion expressions " + std::to_string(a) + " and " + std::to_string(b) +
                                  " differ at " + format_index({i, j, k}) + ": " + to_string(e[a - 1]) + " vs " +
                                  to_string(e[b - 1]));
          }
        }
      }

  // (b) the connections themselves.
  std::array<std::optional<NaturalConnection>, 3> d;
  for (Alpha a = 1; a <= 3; ++a) {
    d[a - 1] = build_connection(h, a, torsion_for(h, a));
    result.report.attach("T" + std::to_string(a), d[a - 1]->torsion.tensor());
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [a, b] = pairs[p];
    result.connections_equal[p] = d[a - 1]->connection == d[b - 1]->connection;
  }

  result.condition_holds = result.expressions_equal[0] && result.expressions_equal[1];
  result.verdicts_agree = result.expressions_equal == result.connections_equal;
  result.summary = detail::coincidence_summary(result.connections_equal);

  // Non-coincidence is a finding, not a failed check: the report fails only
  // when the two routes disagree.
  constexpr std::size_t shown = 12;
  for (std::size_t i = 0; i < differences.size() && i < shown; ++i) result.report.note(differences[i]);
  if (differences.size() > shown)
    result.report.note("... " + std::to_string(differences.size() - shown) + " further differing components");
  result.report.note(result.summary + (result.condition_holds ? "; condition (*) holds" : "; condition (*) fails"));
  if (result.condition_holds) {
    result.report.note("condition (*) holds: the connection with totally skew-symmetric torsion preserving the "
                       "whole almost contact HN-metric 3-structure exists and is unique");
  } else {
    result.report.note("condition (*) fails: there does not exist a unique connection with totally "
                       "skew-symmetric torsion preserving the almost contact HN-metric 3-structure");
  }
  if (!result.verdicts_agree) result.report.fail("pointwise expressions and connection coefficients disagree");
  return result;
}

/// The equivalent characterisations of the class admitting a skew-torsion
/// natural connection, evaluated independently for one structure.
struct StructureClassification {
  Alpha alpha = 1;
  bool class_condition = false;   // F_1 identity (α = 1) or 𝔖F_α = 0 ∧ Killing
  bool killing = false;           // 𝔏_ξ g = 0
  bool nhat_vanishes = false;     // N̂_α = 0
  bool phi_braces_vanish = false; // {φ_α, φ_α} = 0
  bool nijenhuis_three_form = false;  // N_α is a 3-form
  bool connection_natural = false;    // formula connection is skew and natural
};

inline StructureClassification classify_structure(const HN3Manifold& h, Alpha a) {
  StructureClassification c;
  c.alpha = a;
  const Tensor F = fundamental_F(h, a);
  c.class_condition = a == 1 ? class_condition_W(F, h).passed() : class_condition_F3F7(F, h, a).passed();
  c.killing = lie_derivative_metric(h.metric_algebra(), h.structure(a).xi).is_zero();
  c.nhat_vanishes = assoc_nijenhuis(h, a).mixed.is_zero();
  c.phi_braces_vanish = phi_braces(h, a).is_zero();
  c.nijenhuis_three_form = is_three_form(nijenhuis_N(h, a).lowered);

  const TorsionForm t = torsion_for(h, a, /*force=*/true);
  if (is_three_form(t.tensor())) c.connection_natural = check_natural(build_connection(h, a, t), h).passed();
  return c;
}

/// Runs the classification for all three structures and checks the
/// equivalences between the characterisations, and the two-implies-third
/// statements for the associated Nijenhuis tensors and the classes.
inline Report classify(const HN3Manifold& h, std::array<StructureClassification, 3>* out = nullptr) {
  Report report("classification");
  std::array<StructureClassification, 3> cs;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  for (Alpha a = 1; a <= 3; ++a) {
    const auto c = classify_structure(h, a);
    cs[a - 1] = c;
    const std::string tag = "structure " + std::to_string(a) + ": ";
    report.note(tag + "class condition " + yes(c.class_condition) + ", xi Killing " + yes(c.killing) +
                ", Nhat = 0 " + yes(c.nhat_vanishes) + ", {phi,phi} = 0 " + yes(c.phi_braces_vanish) +
                ", N 3-form " + yes(c.nijenhuis_three_form) + ", skew-torsion natural connection " +
                yes(c.connection_natural));

    const std::size_t ia = static_cast<std::size_t>(a - 1);
    auto agree = [&](const char* what, bool lhs, bool rhs) {
      if (lhs != rhs) report.add_violation(what, {ia}, Scalar(lhs ? 1 : 0), Scalar(rhs ? 1 : 0));
    };
    if (a == 1) {
      agree("class condition <=> Nhat = 0 and xi Killing", c.class_condition, c.nhat_vanishes && c.killing);
      agree("class condition <=> {phi,phi} = 0 and xi Killing", c.class_condition, c.phi_braces_vanish && c.killing);
      agree("class condition <=> N 3-form and xi Killing", c.class_condition, c.nijenhuis_three_form && c.killing);
    } else {
      agree("class condition <=> Nhat = 0", c.class_condition, c.nhat_vanishes);
      agree("class condition <=> {phi,phi} = 0 and xi Killing", c.class_condition, c.phi_braces_vanish && c.killing);
    }
    agree("class condition <=> natural skew-torsion connection", c.class_condition, c.connection_natural);
  }

  auto two_imply_third = [&](const char* what, auto pick) {
    int count = 0;
    for (const auto& c : cs) count += pick(c) ? 1 : 0;
    if (count == 2) report.add_violation(what, {}, Scalar(count), Scalar(3));
  };
  two_imply_third("two vanishing Nhat_a imply the third", [](const auto& c) { return c.nhat_vanishes; });
  two_imply_third("two class conditions imply the third", [](const auto& c) { return c.class_condition; });

  if (out) *out = cs;
  return report;
}

}  // namespace hn3
