#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

namespace hn3 {
namespace {

using testing::e;

TEST(Tensor, ComponentCount) {
  EXPECT_EQ(Tensor::covariant(7, 3).size(), 343u);
  EXPECT_EQ(Tensor::mixed(7, 2).size(), 343u);
  EXPECT_EQ(Tensor::mixed(8, 1).size(), 64u);
}

TEST(Tensor, EndomorphismSlotConvention) {
  const Matrix phi1 = builtin_example(Scalar(1)).structure(1).phi;
  const Tensor t = Tensor::from_endomorphism(phi1);
  EXPECT_EQ(evaluate_map(t, {e(1)}), e(2));
  EXPECT_EQ(t.to_matrix(), phi1);
}

TEST(Lower, PhiGivesFundamentalFormAfterTranspose) {
  const auto h = builtin_example(Scalar(2));
  const Tensor lowered = lower(Tensor::from_endomorphism(h.structure(1).phi), h.metric());
  // lowered(x, y) = g(φx, y), so Φ(x, y) = g(x, φy) = lowered(y, x).
  const Tensor fundamental = permute(lowered, {1, 0});
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = 1; j <= 7; ++j)
      EXPECT_EQ(fundamental(i - 1, j - 1), bilinear(h.metric(), e(i), h.structure(1).phi * e(j)));
}

TEST(Lower, ZeroAndExampleNhat) {
  const auto h = builtin_example(Scalar(2));
  EXPECT_TRUE(lower(Tensor::mixed(7, 2), h.metric()).is_zero());
  EXPECT_TRUE(lower(assoc_nijenhuis(h, 2).mixed, h.metric()).is_zero());
}

TEST(Lower, Errors) {
  EXPECT_THROW(lower(Tensor::mixed(3, 1), Matrix::identity(4)), DimensionError);
  EXPECT_THROW(lower(Tensor::mixed(2, 1), Matrix{{1, 1}, {1, 1}}), SingularMatrixError);
  EXPECT_THROW(lower(Tensor::covariant(2, 2), Matrix::identity(2)), DimensionError);
}

TEST(CyclicSum, ThreeFormTriples) {
  std::mt19937 rng(1);
  const Tensor w = alternation(testing::random_tensor(rng, 4, 0, 3));
  EXPECT_EQ(cyclic_sum(w), Scalar(3) * w);
}

TEST(CyclicSum, EtaTimesDEta) {
  const auto h = testing::with_algebra([] {
    LieAlgebra l(7);
    l.set_bracket(0, 1, 4, Scalar(1));  // [e1,e2] = e5 makes dη1 nonzero
    l.set_bracket(2, 3, 6, Scalar(2));
    return l;
  }());
  const Tensor eta = Tensor::from_covector(h.structure(1).eta);
  const Tensor deta = d_eta(h, 1);
  ASSERT_FALSE(deta.is_zero());
  const Tensor w = cyclic_sum(tensor_product(eta, deta));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      for (std::size_t k = 0; k < 7; ++k) {
        const Scalar expected = eta(i) * deta(j, k) + eta(j) * deta(k, i) + eta(k) * deta(i, j);
        EXPECT_EQ(w(i, j, k), expected);
      }
  EXPECT_TRUE(is_three_form(w));
  EXPECT_EQ(wedge_1_2(eta, deta), w);
}

TEST(CyclicSum, FundamentalTwoVanishesOnExample) {
  const auto h = builtin_example(Scalar(2));
  EXPECT_TRUE(cyclic_sum(testing::F_table(h, 2)).is_zero());
}

TEST(CyclicSum, WrongValence) { EXPECT_THROW(cyclic_sum(Tensor::covariant(3, 2)), DimensionError); }

TEST(IsThreeForm, Examples) {
  const auto h = builtin_example(Scalar(2));
  EXPECT_TRUE(is_three_form(torsion_T1(fundamental_F(h, 1), h).tensor()));
  const Tensor g_eta = tensor_product(Tensor::from_bilinear_form(h.metric()), Tensor::from_covector(h.structure(1).eta));
  EXPECT_FALSE(is_three_form(g_eta));
  EXPECT_TRUE(is_three_form(Tensor::covariant(7, 3)));
}

TEST(Interior, MetricGivesContactForms) {
  const auto h = builtin_example(Scalar(2));
  const Tensor g = Tensor::from_bilinear_form(h.metric());
  EXPECT_EQ(interior(h.structure(1).xi, g).to_vector(), Vector({0, 0, 0, 0, -1, 0, 0}));
  EXPECT_EQ(interior(h.structure(1).xi, g).to_vector(), Scalar(-1) * h.structure(1).eta);
  EXPECT_EQ(interior(h.structure(2).xi, g).to_vector(), h.structure(2).eta);
  EXPECT_TRUE(interior(e(3), Tensor::covariant(7, 3)).is_zero());
}

TEST(Interior, FirstSlotOfMixedTensor) {
  const auto h = builtin_example(Scalar(2));
  const Tensor c = h.algebra().structure();
  const Tensor ad = interior(e(1), c);  // y ↦ [e1, y]
  EXPECT_EQ(evaluate_map(ad, {e(2)}), Scalar(2) * e(7));
}

TEST(Wedge, ExampleVanishesAndZero) {
  const auto h = builtin_example(Scalar(2));
  const Tensor eta = Tensor::from_covector(h.structure(1).eta);
  EXPECT_TRUE(d_eta(h, 1).is_zero());
  EXPECT_TRUE(wedge_1_2(eta, d_eta(h, 1)).is_zero());
  EXPECT_TRUE(wedge_1_2(eta, Tensor::covariant(7, 2)).is_zero());
}

TEST(Wedge, RejectsSymmetricSecondFactor) {
  const auto h = builtin_example(Scalar(2));
  EXPECT_THROW(wedge_1_2(Tensor::from_covector(h.structure(1).eta), Tensor::from_bilinear_form(h.metric())),
               DimensionError);
}

// (η1 ∧ dη1)(x,y,z) = -2 𝔖 η1(x) F1(y, φ1 z, ξ1) when ξ1 is Killing.
TEST(Wedge, IdentityThroughFundamentalTensor) {
  int tested = 0;
  for (const auto& h : testing::generic_inputs(21, 24)) {
    if (!lie_derivative_metric(h.metric_algebra(), h.structure(1).xi).is_zero()) continue;
    const auto& s = h.structure(1);
    const Tensor lhs = wedge_1_2(Tensor::from_covector(s.eta), d_eta(h, 1));
    const Tensor F1 = testing::F_table(h, 1);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t k = 0; k < 7; ++k) {
          auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
            return s.eta[x] * evaluate_form(F1, {basis_vector(7, y), s.phi * basis_vector(7, z), s.xi});
          };
          EXPECT_EQ(lhs(i, j, k), Scalar(-2) * (term(i, j, k) + term(j, k, i) + term(k, i, j)));
        }
    ++tested;
  }
  EXPECT_GE(tested, 6);
}

TEST(TensorProperty, LowerThenRaiseIsIdentity) {
  std::mt19937 rng(2);
  const Matrix g = builtin_example(Scalar(1)).metric();
  for (int n = 0; n < 10; ++n) {
    const Tensor t = testing::random_tensor(rng, 7, 1, 2);
    EXPECT_EQ(raise_last(lower(t, g), mat_inverse(g)), t);
  }
}

TEST(TensorProperty, CyclicSumTwiceIsThreeTimes) {
  std::mt19937 rng(4);
  for (int n = 0; n < 10; ++n) {
    const Tensor t = testing::random_tensor(rng, 4, 0, 3);
    EXPECT_EQ(cyclic_sum(cyclic_sum(t)), Scalar(3) * cyclic_sum(t));
  }
}

TEST(TensorProperty, ThreeFormIffAlternationFixed) {
  std::mt19937 rng(6);
  for (int n = 0; n < 10; ++n) {
    const Tensor t = testing::random_tensor(rng, 4, 0, 3);
    EXPECT_EQ(is_three_form(t), alternation(t) == t);
    const Tensor w = alternation(t);
    EXPECT_TRUE(is_three_form(w));
    EXPECT_EQ(alternation(w), w);
  }
}

TEST(TensorProperty, InteriorIsBilinear) {
  std::mt19937 rng(9);
  for (int n = 0; n < 10; ++n) {
    const Tensor t = testing::random_tensor(rng, 4, 0, 3), u = testing::random_tensor(rng, 4, 0, 3);
    const Matrix m = testing::random_matrix(rng, 4, 2);
    const Vector v = m.column(0), w = m.column(1);
    const Scalar a(3, 2);
    EXPECT_EQ(interior(v + a * w, t), interior(v, t) + a * interior(w, t));
    EXPECT_EQ(interior(v, t + a * u), interior(v, t) + a * interior(v, u));
  }
}

TEST(Format, OneBasedSortedLines) {
  Tensor t = Tensor::covariant(7, 3);
  t(6, 0, 1) = Scalar(-1, 2);
  t(0, 1, 6) = 2;
  EXPECT_EQ(format_components("T", t), "T[1,2,7] = 2\nT[7,1,2] = -1/2\n");
}

}  // namespace
}  // namespace hn3
