#include <gtest/gtest.h>

#include <eulerops/diff_op.hpp>
#include <eulerops/errors.hpp>

#include "oracle.hpp"

namespace {

using namespace eulerops;
using oracle::fn;
using oracle::op;

const BundleModel kModel(2, 2);

// Structural equality of operators, cross-checked extensionally on a monomial
// basis through the oracle.
void expect_same_action(const DiffOp& a, const DiffOp& b, std::uint32_t max_degree) {
  for (const FiberPoly& u : oracle::monomials(a.model(), max_degree))
    EXPECT_EQ(oracle::apply(a, u), oracle::apply(b, u)) << "on " << u;
}

TEST(Apply, Examples) {
  EXPECT_EQ(apply(op("d/dxi1"), fn("xi1^2")).to_string(), "2*xi1");
  // x1 * d1 dbar1 (x1 xi1^2) = 2 x1 xi1
  const FiberPoly u = fn("x1*xi1^2 + xi2");
  const DiffOp t = op("x1*d/dx1*d/dxi1");
  EXPECT_EQ(apply(t, u), oracle::apply(t, u));
  EXPECT_EQ(apply(t, u).to_string(), "2*x1*xi1");
}

TEST(Apply, EulerFieldScalesByWeight) {
  RandomSource rng(201);
  for (int k = 0; k < 50; ++k) {
    const auto lambda = static_cast<std::uint32_t>(rng.integer(0, 4));
    const FiberPoly u = rng.homogeneous_poly(kModel, lambda, 3, 3);
    EXPECT_EQ(apply(euler_field(kModel), u), u * Rational(lambda));
  }
}

TEST(Apply, MultiplicationOperator) {
  const FiberPoly u = fn("x1 + xi2^2");
  const FiberPoly v = fn("3*xi1 - x2");
  EXPECT_EQ(apply(multiplication_operator(u), v), oracle::mul(u, v));
}

TEST(Compose, CanonicalCommutation) {
  EXPECT_EQ(compose(op("d/dx1"), multiplication_operator(fn("x1"))).to_string(), "x1*d/dx1 + 1");
}

TEST(Compose, MultiplicationOperatorsMultiply) {
  const FiberPoly u = fn("x1*xi1 + 2");
  const FiberPoly v = fn("xi2 - x2^2");
  EXPECT_EQ(compose(multiplication_operator(u), multiplication_operator(v)),
            multiplication_operator(oracle::mul(u, v)));
}

TEST(Compose, EulerSquareOnOneFiber) {
  const DiffOp t = op("xi1*d/dxi1", 1, 1);
  const DiffOp expected = op("xi1^2*d/dxi1^2 + xi1*d/dxi1", 1, 1);
  const DiffOp got = compose(t, t);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got.to_string(), "xi1^2*d/dxi1^2 + xi1*d/dxi1");
  // composition applied to every monomial of xi-degree <= 4
  for (std::uint32_t d = 0; d <= 4; ++d) {
    const FiberPoly u = FiberPoly::monomial(BundleModel(1, 1), {0}, {d});
    EXPECT_EQ(oracle::apply(got, u), oracle::apply(t, oracle::apply(t, u)));
  }
}

TEST(Compose, ModelMismatch) {
  EXPECT_THROW(compose(op("d/dx1"), op("d/dx1", 1, 1)), ModelMismatchError);
}

TEST(Bracket, Examples) {
  const DiffOp t = op("x1*d/dxi2 + xi1^2*d/dx1*d/dx2");
  EXPECT_TRUE(bracket(t, t).is_zero());
  EXPECT_EQ(bracket(op("d/dx1"), multiplication_operator(fn("x1"))), DiffOp::identity(kModel));
  EXPECT_TRUE(bracket(euler_field(kModel), euler_field(kModel)).is_zero());
  EXPECT_EQ(bracket(op("xi1*d/dxi1", 1, 1), op("d/dxi1", 1, 1)).to_string(), "-1*d/dxi1");
}

TEST(EulerField, Form) {
  EXPECT_EQ(euler_field(BundleModel(1, 1)).to_string(), "xi1*d/dxi1");
  EXPECT_EQ(euler_field(kModel).to_string(), "xi1*d/dxi1 + xi2*d/dxi2");
  EXPECT_TRUE(apply(euler_field(kModel), FiberPoly::one(kModel)).is_zero());
  EXPECT_EQ(apply(euler_field(kModel), fn("xi1*xi2")), fn("2*xi1*xi2"));
  EXPECT_EQ(is_homogeneous(euler_field(kModel)), EulerWeight{0});
  EXPECT_EQ(order(euler_field(kModel)), 1u);
}

TEST(LieDerivative, FiberDerivatives) {
  EXPECT_EQ(lie_derivative(op("d/dxi1")), op("-d/dxi1"));
  EXPECT_EQ(lie_derivative(op("d/dxi1^2*d/dxi2")), op("-3*d/dxi1^2*d/dxi2"));
  EXPECT_EQ(lie_derivative(op("d/dxi1*d/dxi2")), op("-2*d/dxi1*d/dxi2"));
}

TEST(LieDerivative, MultiplicationOperatorIsEigenvector) {
  RandomSource rng(202);
  for (int k = 0; k < 30; ++k) {
    const auto lambda = static_cast<std::uint32_t>(rng.integer(0, 3));
    const FiberPoly u = rng.homogeneous_poly(kModel, lambda, 2, 3);
    const DiffOp lie = lie_derivative(multiplication_operator(u));
    expect_same_action(lie, multiplication_operator(u) * Rational(lambda), 4);
    EXPECT_EQ(lie, multiplication_operator(u) * Rational(lambda));
  }
}

TEST(WeightDecompose, Examples) {
  const auto euler = weight_decompose(euler_field(kModel));
  ASSERT_EQ(euler.size(), 1u);
  EXPECT_EQ(euler.at(EulerWeight{0}), euler_field(kModel));

  const auto dbar = weight_decompose(op("d/dxi1"));
  ASSERT_EQ(dbar.size(), 1u);
  EXPECT_EQ(dbar.at(EulerWeight{-1}), op("d/dxi1"));

  const auto mixed = weight_decompose(op("x1*d/dx1 + xi1^2*d/dxi2 + d/dxi1"));
  ASSERT_EQ(mixed.size(), 3u);
  EXPECT_EQ(mixed.at(EulerWeight{0}), op("x1*d/dx1"));
  EXPECT_EQ(mixed.at(EulerWeight{1}), op("xi1^2*d/dxi2"));
  EXPECT_EQ(mixed.at(EulerWeight{-1}), op("d/dxi1"));
  for (const auto& [w, part] : mixed) EXPECT_EQ(bracket(euler_field(kModel), part), part * Rational(w.value));

  EXPECT_TRUE(weight_decompose(DiffOp(kModel)).empty());
}

TEST(Order, Examples) {
  EXPECT_EQ(order(multiplication_operator(fn("x1*xi2 + 3"))), 0u);
  EXPECT_EQ(order(euler_field(kModel)), 1u);
  EXPECT_EQ(order(op("x1*d/dx1*d/dxi2 + d/dx1")), 2u);
  EXPECT_FALSE(order(DiffOp(kModel)).has_value());
}

TEST(MultiplicationOperator, Examples) {
  EXPECT_EQ(multiplication_operator(FiberPoly::one(kModel)), DiffOp::identity(kModel));
  EXPECT_EQ(is_homogeneous(multiplication_operator(fn("xi1"))), EulerWeight{1});
  EXPECT_TRUE(multiplication_operator(FiberPoly(kModel)).is_zero());
  EXPECT_TRUE(bracket(multiplication_operator(fn("x1*xi2")), multiplication_operator(fn("xi1 + x2"))).is_zero());
}

TEST(IsHomogeneous, Examples) {
  EXPECT_EQ(is_homogeneous(euler_field(kModel)), EulerWeight{0});
  EXPECT_EQ(is_homogeneous(op("xi1*d/dx1")), EulerWeight{1});
  EXPECT_EQ(bracket(euler_field(kModel), op("xi1*d/dx1")), op("xi1*d/dx1"));
  EXPECT_FALSE(is_homogeneous(op("d/dx1 + d/dxi1")).has_value());
  EXPECT_FALSE(is_homogeneous(DiffOp(kModel)).has_value());
}

TEST(DiffOp, Rendering) {
  EXPECT_EQ(DiffOp(kModel).to_string(), "0");
  EXPECT_EQ(op("3").to_string(), "3");
  EXPECT_EQ(op("(x1 + xi1)*d/dx2").to_string(), "(x1 + xi1)*d/dx2");
  EXPECT_EQ(op("d/dx1*d/dx1*d/dxi2").to_string(), "d/dx1^2*d/dxi2");
}

// Grading, filtration, oracle equivalence, Jacobi and the coefficient law.

TEST(OperatorProperties, BracketWeightsAdd) {
  RandomSource rng(210);
  for (int k = 0; k < 200; ++k) {
    const auto lambda = rng.integer(-2, 2);
    const auto mu = rng.integer(-2, 2);
    const DiffOp t1 = rng.homogeneous_op(kModel, lambda, 2, 3, 2);
    const DiffOp t2 = rng.homogeneous_op(kModel, mu, 2, 3, 2);
    ASSERT_EQ(is_homogeneous(t1), EulerWeight{lambda});
    const DiffOp b = bracket(t1, t2);
    if (!b.is_zero()) EXPECT_EQ(is_homogeneous(b), EulerWeight{lambda + mu}) << t1 << " ; " << t2;
  }
}

TEST(OperatorProperties, Filtration) {
  RandomSource rng(211);
  for (int k = 0; k < 200; ++k) {
    const DiffOp d = rng.op(kModel, 3, 3, 3);
    const DiffOp t = rng.op(kModel, 3, 3, 3);
    const auto kd = *order(d);
    const auto kt = *order(t);
    EXPECT_EQ(order(compose(d, t)), kd + kt);
    const DiffOp b = bracket(d, t);
    if (!b.is_zero()) EXPECT_LE(static_cast<std::int64_t>(*order(b)), std::int64_t{kd} + kt - 1);
  }
}

TEST(OperatorProperties, ComposeMatchesSequentialApplication) {
  RandomSource rng(212);
  const auto basis = oracle::monomials(kModel, 5);
  for (int k = 0; k < 25; ++k) {
    const DiffOp d = rng.op(kModel, 3, 3, 3);
    const DiffOp t = rng.op(kModel, 3, 3, 3);
    const DiffOp dt = compose(d, t);
    for (const FiberPoly& u : basis) ASSERT_EQ(oracle::apply(dt, u), oracle::apply(d, oracle::apply(t, u)));
  }
}

TEST(OperatorProperties, ApplyMatchesOracle) {
  RandomSource rng(213);
  for (int k = 0; k < 100; ++k) {
    const DiffOp t = rng.op(kModel, 3, 3, 4);
    const FiberPoly u = rng.poly(kModel, 5, 5);
    EXPECT_EQ(apply(t, u), oracle::apply(t, u));
  }
}

TEST(OperatorProperties, Jacobi) {
  RandomSource rng(214);
  for (int k = 0; k < 50; ++k) {
    const DiffOp a = rng.op(kModel, 2, 2, 2);
    const DiffOp b = rng.op(kModel, 2, 2, 2);
    const DiffOp c = rng.op(kModel, 2, 2, 2);
    const DiffOp sum = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    EXPECT_TRUE(sum.is_zero()) << sum;
  }
}

TEST(OperatorProperties, Antisymmetry) {
  RandomSource rng(215);
  for (int k = 0; k < 100; ++k) {
    const DiffOp a = rng.op(kModel, 3, 3, 3);
    const DiffOp b = rng.op(kModel, 3, 3, 3);
    EXPECT_EQ(bracket(a, b), -bracket(b, a));
  }
}

TEST(OperatorProperties, EigenConsistencyAndCoefficientLaw) {
  RandomSource rng(216);
  for (int k = 0; k < 200; ++k) {
    const DiffOp t = rng.op(kModel, 3, 3, 4);
    DiffOp sum(kModel);
    for (const auto& [w, part] : weight_decompose(t)) {
      EXPECT_EQ(bracket(euler_field(kModel), part), part * Rational(w.value));
      ASSERT_EQ(is_homogeneous(part), w);
      for (const auto& [key, coeff] : part.terms()) {
        const auto beta = static_cast<std::int64_t>(part.beta(key).total());
        EXPECT_EQ(coeff.homogeneous_weight(), EulerWeight{w.value + beta});
      }
      sum += part;
    }
    EXPECT_EQ(sum, t);
  }
}

}  // namespace
