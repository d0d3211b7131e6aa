#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

namespace hn3 {
namespace {

using testing::e;

Vector e8(std::size_t i) { return basis_vector(8, i - 1); }

HN3Manifold replace_structure(const HN3Manifold& h, Alpha a, const AlmostContactStructure& s) {
  auto all = h.structures();
  all[static_cast<std::size_t>(a - 1)] = s;
  return HN3Manifold(h.metric_algebra(), all);
}

TEST(Signs, EpsilonAndLeviCivita) {
  EXPECT_EQ(epsilon(1), 1);
  EXPECT_EQ(epsilon(2), -1);
  EXPECT_EQ(epsilon(3), -1);
  EXPECT_EQ(levi_civita_symbol(1, 2, 3), 1);
  EXPECT_EQ(levi_civita_symbol(2, 3, 1), 1);
  EXPECT_EQ(levi_civita_symbol(3, 1, 2), 1);
  EXPECT_EQ(levi_civita_symbol(2, 1, 3), -1);
  EXPECT_EQ(levi_civita_symbol(1, 1, 3), 0);
  EXPECT_EQ(third_index(1, 3), 2);
}

TEST(HN3Manifold, RejectsWrongEpsilon) {
  const auto h = builtin_example(Scalar(1));
  auto s = h.structure(2);
  s.epsilon = 1;
  EXPECT_THROW(replace_structure(h, 2, s), DimensionError);
}

TEST(ValidateAc3, ExamplePasses) {
  for (const auto& l : testing::lambda_values()) EXPECT_TRUE(validate_ac3(builtin_example(l)).passed());
}

TEST(ValidateAc3, ExampleImages) {
  const auto h = builtin_example(Scalar(2));
  EXPECT_EQ(h.structure(2).phi * e(7), e(5));
  EXPECT_EQ(h.structure(3).phi * e(5), e(6));
  EXPECT_EQ(h.structure(1).phi * e(4), Scalar(-1) * e(3));
  for (Alpha a = 1; a <= 3; ++a) EXPECT_TRUE(is_zero(h.structure(a).phi * h.structure(a).xi));
}

TEST(ValidateAc3, PerturbedEtaFails) {
  const auto h = builtin_example(Scalar(1));
  auto s = h.structure(1);
  s.eta[4] = 2;
  const Report r = validate_ac3(replace_structure(h, 1, s));
  EXPECT_FALSE(r.passed());
  bool found = false;
  for (const auto& v : r.violations())
    if (v.what == "eta_a(xi_b) = delta" && v.indices == Index{0, 0}) {
      found = true;
      EXPECT_EQ(v.lhs, Scalar(2));
      EXPECT_EQ(v.rhs, Scalar(1));
    }
  EXPECT_TRUE(found);
}

TEST(ValidateAc3, SwappedSignOfPhiThreeFails) {
  const auto h = builtin_example(Scalar(1));
  auto s = h.structure(3);
  s.phi = -s.phi;
  EXPECT_FALSE(validate_ac3(replace_structure(h, 3, s)).passed());
}

TEST(ValidateAc3, RankOfPhi) {
  const auto h = builtin_example(Scalar(1));
  for (Alpha a = 1; a <= 3; ++a) EXPECT_EQ(rank(h.structure(a).phi), 6u);
}

TEST(ValidateHnMetric, ExamplePasses) {
  const auto h = builtin_example(Scalar(2));
  EXPECT_TRUE(validate_hn_metric(h).passed());
  EXPECT_EQ(bilinear(h.metric(), h.structure(1).phi * e(1), h.structure(1).phi * e(1)), Scalar(1));
  EXPECT_EQ(bilinear(h.metric(), h.structure(2).phi * e(1), h.structure(2).phi * e(1)), Scalar(-1));
}

TEST(ValidateHnMetric, FlippedReebSignFails) {
  const auto h = builtin_example(Scalar(1));
  Matrix g = h.metric();
  g(4, 4) = 1;
  const HN3Manifold bad(MetricLieAlgebra(h.algebra(), g), h.structures());
  const Report r = validate_hn_metric(bad);
  EXPECT_FALSE(r.passed());
  bool found = false;
  for (const auto& v : r.violations())
    if (v.what == "g(xi, xi) = -eps" && v.indices == Index{0}) found = true;
  EXPECT_TRUE(found);
}

TEST(ValidateHnMetric, EtaIsMinusEpsilonXiLowered) {
  for (const auto& h : testing::generic_inputs(31, 4))
    for (Alpha a = 1; a <= 3; ++a) {
      const auto& s = h.structure(a);
      EXPECT_EQ(s.eta, Scalar(-s.epsilon) * (h.metric() * s.xi));
    }
}

TEST(BuildProduct, EightDimensionalExtension) {
  const auto h = builtin_example(Scalar(2));
  const ProductExtension p = build_product(h);
  EXPECT_EQ(p.dim(), 8u);
  EXPECT_EQ(signature(p.metric()), (Signature{4, 4, 0}));
  EXPECT_EQ(p.J(1) * e8(8), Scalar(-1) * e8(5));
  EXPECT_EQ(p.J(1) * e8(5), e8(8));
  EXPECT_EQ(p.J(1) * p.J(2), p.J(3));
  EXPECT_EQ(p.J(2) * p.J(1), -p.J(3));
  // t is central
  for (std::size_t i = 1; i <= 8; ++i) EXPECT_TRUE(is_zero(p.metric_algebra().algebra().bracket(e8(i), e8(8))));
}

TEST(BuildProduct, RejectsInvalidBase) {
  const auto h = builtin_example(Scalar(1));
  auto s = h.structure(1);
  s.xi = e(6);
  EXPECT_THROW(build_product(replace_structure(h, 1, s)), PreconditionError);
}

TEST(ValidateHypercomplex, ExamplePasses) {
  const auto p = build_product(builtin_example(Scalar(2)));
  EXPECT_TRUE(validate_hypercomplex_hn(p).passed());
  EXPECT_EQ(bilinear(p.metric(), p.J(2) * e8(1), p.J(2) * e8(1)), Scalar(-1));
  EXPECT_EQ(bilinear(p.metric(), p.J(1) * e8(8), p.J(1) * e8(8)), Scalar(-1));
}

TEST(ValidateHypercomplex, IdentityTripleFails) {
  const auto p = build_product(builtin_example(Scalar(2)));
  const Matrix id = Matrix::identity(8);
  const Report r = validate_hypercomplex_hn(p.metric(), {id, id, id});
  EXPECT_FALSE(r.passed());
  EXPECT_THROW(validate_hypercomplex_hn(p.metric(), {id, id, Matrix::identity(7)}), DimensionError);
}

TEST(StructuresProperty, GenericAlgebrasKeepValidStructures) {
  for (const auto& h : testing::generic_inputs(33, 12)) {
    EXPECT_TRUE(validate_ac3(h).passed());
    EXPECT_TRUE(validate_hn_metric(h).passed());
    EXPECT_TRUE(validate_hypercomplex_hn(build_product(h)).passed());
  }
}

}  // namespace
}  // namespace hn3
