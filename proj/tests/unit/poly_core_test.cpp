#include <gtest/gtest.h>

#include <eulerops/errors.hpp>
#include <eulerops/fiber_poly.hpp>
#include <eulerops/rational.hpp>

#include "oracle.hpp"

namespace {

using namespace eulerops;
using oracle::fn;

const BundleModel kModel(2, 2);

TEST(Rational, LowestTerms) {
  EXPECT_EQ(Rational(6, 4).to_string(), "3/2");
  EXPECT_EQ(Rational(-6, -4).to_string(), "3/2");
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(binomial(4, 0), Rational(1));
  EXPECT_EQ(binomial(3, 3), Rational(1));
}

TEST(BundleModel, RejectsZeroDimensions) {
  EXPECT_THROW(BundleModel(0, 1), IndexError);
  EXPECT_THROW(BundleModel(1, 0), IndexError);
}

TEST(PolyMul, UnitLaw) {
  const FiberPoly u = fn("3/2*x1^2*xi1 - xi2 + 1");
  EXPECT_EQ(poly_mul(FiberPoly::one(kModel), u), u);
}

TEST(PolyMul, MonomialSquare) { EXPECT_EQ(poly_mul(fn("xi1"), fn("xi1")).to_string(), "xi1^2"); }

TEST(PolyMul, DifferenceOfSquaresMatchesTermOracle) {
  const FiberPoly a = fn("x1 + xi1");
  const FiberPoly b = fn("x1 - xi1");
  const FiberPoly expected = oracle::mul(a, b);
  EXPECT_EQ(expected.to_string(), "x1^2 - xi1^2");
  EXPECT_EQ(poly_mul(a, b), expected);
}

TEST(PolyMul, ModelMismatch) {
  EXPECT_THROW(poly_mul(fn("x1"), fn("x1", 1, 1)), ModelMismatchError);
}

TEST(PolyPartial, PowerRule) { EXPECT_EQ(poly_partial(fn("xi1^2"), Variable::fiber(0)).to_string(), "2*xi1"); }

TEST(PolyPartial, IndependentVariable) {
  EXPECT_TRUE(poly_partial(fn("xi2"), Variable::base(0)).is_zero());
}

TEST(PolyPartial, MatchesInterpolationOracle) {
  const FiberPoly u = fn("x1*xi2^3 + xi1");
  const FiberPoly d = poly_partial(u, Variable::fiber(1));
  EXPECT_EQ(d.to_string(), "3*x1*xi2^2");
  RandomSource rng(7);
  for (int k = 0; k < 20; ++k) {
    const Point a = rng.point(kModel);
    EXPECT_EQ(d.eval(a), oracle::partial_at(u, Variable::fiber(1), a));
  }
}

TEST(PolyPartial, IndexOutOfRange) {
  EXPECT_THROW(poly_partial(fn("x1"), Variable::base(2)), IndexError);
  EXPECT_THROW(poly_partial(fn("x1"), Variable::fiber(5)), IndexError);
}

TEST(PolyEval, Examples) {
  const Point p{{Rational(2), Rational(0)}, {Rational(3), Rational(0)}};
  EXPECT_EQ(poly_eval(FiberPoly::one(kModel), p), Rational(1));
  EXPECT_EQ(poly_eval(fn("x1 + xi1"), p), Rational(5));
  // (1/2)^2 * 4 = 1
  const Point q{{Rational(1, 2), Rational(9)}, {Rational(-1), Rational(4)}};
  EXPECT_EQ(poly_eval(fn("x1^2*xi2"), q), Rational(1));
}

TEST(PolyEval, DimensionMismatch) {
  const Point short_point{{Rational(1)}, {Rational(1), Rational(1)}};
  EXPECT_THROW(poly_eval(fn("x1"), short_point), ModelMismatchError);
}

TEST(WeightSplit, Examples) {
  const auto parts = weight_split(fn("xi1*xi2 + x1"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(EulerWeight{0}).to_string(), "x1");
  EXPECT_EQ(parts.at(EulerWeight{2}).to_string(), "xi1*xi2");
  EXPECT_TRUE(weight_split(FiberPoly(kModel)).empty());
}

TEST(WeightSplit, CubeComponentsAreEulerEigenvectors) {
  const FiberPoly u = fn("(x1 + xi1)^3");
  const auto parts = weight_split(u);
  ASSERT_EQ(parts.size(), 4u);
  const DiffOp euler = oracle::op("xi1*d/dxi1 + xi2*d/dxi2");
  FiberPoly sum(kModel);
  for (const auto& [w, part] : parts) {
    EXPECT_EQ(oracle::apply(euler, part), part * Rational(w.value));
    sum += part;
  }
  EXPECT_EQ(sum, u);
}

TEST(FiberPoly, CanonicalRendering) {
  EXPECT_EQ(FiberPoly(kModel).to_string(), "0");
  EXPECT_EQ(fn("1 - xi2 + 3/2*xi1*x1^2").to_string(), "3/2*x1^2*xi1 - xi2 + 1");
  EXPECT_EQ(fn("-x1").to_string(), "-x1");
  EXPECT_EQ(fn("x2 + x1").to_string(), "x1 + x2");
}

TEST(FiberPoly, NoZeroCoefficientsStored) {
  FiberPoly u = fn("x1 + xi1");
  u -= fn("xi1");
  EXPECT_EQ(u.term_count(), 1u);
  u -= fn("x1");
  EXPECT_TRUE(u.is_zero());
}

TEST(FiberPoly, SubstituteIsHomomorphism) {
  RandomSource rng(11);
  for (int k = 0; k < 30; ++k) {
    std::vector<FiberPoly> images;
    for (int g = 0; g < 4; ++g) images.push_back(rng.poly(kModel, 2, 2));
    const FiberPoly u = rng.poly(kModel, 2, 3);
    const FiberPoly v = rng.poly(kModel, 2, 3);
    EXPECT_EQ((u * v).substitute(images), u.substitute(images) * v.substitute(images));
    EXPECT_EQ(FiberPoly::one(kModel).substitute(images), FiberPoly::one(kModel));
  }
}

TEST(FiberPoly, IntegrateInvertsPartial) {
  const FiberPoly u = fn("x1^2*xi1 + 3*x2 + 1/2");
  EXPECT_EQ(u.integrate(Variable::base(0)).partial(Variable::base(0)), u);
}

// Grading, Leibniz, round trip and evaluation-homomorphism properties.

TEST(PolyProperties, ProductOfHomogeneousIsHomogeneous) {
  RandomSource rng(101);
  for (int k = 0; k < 200; ++k) {
    const auto lambda = static_cast<std::uint32_t>(rng.integer(0, 3));
    const auto mu = static_cast<std::uint32_t>(rng.integer(0, 3));
    const FiberPoly u = rng.homogeneous_poly(kModel, lambda, 2, 3);
    const FiberPoly v = rng.homogeneous_poly(kModel, mu, 2, 3);
    const auto parts = weight_split(poly_mul(u, v));
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts.begin()->first.value, lambda + mu);
  }
}

TEST(PolyProperties, WeightSplitRoundTrip) {
  RandomSource rng(102);
  for (int k = 0; k < 200; ++k) {
    const FiberPoly u = rng.poly(kModel, 4, 5);
    FiberPoly sum(kModel);
    for (const auto& [w, part] : weight_split(u)) {
      ASSERT_EQ(part.homogeneous_weight(), w);
      sum += part;
    }
    EXPECT_EQ(sum, u);
  }
}

TEST(PolyProperties, Leibniz) {
  RandomSource rng(103);
  for (int k = 0; k < 200; ++k) {
    const FiberPoly u = rng.poly(kModel, 3, 4);
    const FiberPoly v = rng.poly(kModel, 3, 4);
    const Variable var = oracle::var_at(kModel, static_cast<std::size_t>(rng.integer(0, 3)));
    EXPECT_EQ(poly_partial(poly_mul(u, v), var),
              poly_mul(poly_partial(u, var), v) + poly_mul(u, poly_partial(v, var)));
  }
}

TEST(PolyProperties, FiberPartialLowersWeightByOne) {
  RandomSource rng(104);
  for (int k = 0; k < 100; ++k) {
    const auto lambda = static_cast<std::uint32_t>(rng.integer(1, 3));
    const FiberPoly u = rng.homogeneous_poly(kModel, lambda, 2, 3);
    const FiberPoly d = poly_partial(u, Variable::fiber(static_cast<std::uint32_t>(rng.integer(0, 1))));
    if (!d.is_zero()) EXPECT_EQ(d.homogeneous_weight(), EulerWeight{lambda - 1});
  }
}

TEST(PolyProperties, EvaluationIsRingHomomorphism) {
  RandomSource rng(105);
  for (int k = 0; k < 100; ++k) {
    const FiberPoly u = rng.poly(kModel, 3, 4);
    const FiberPoly v = rng.poly(kModel, 3, 4);
    const Point a = rng.point(kModel);
    EXPECT_EQ(poly_eval(poly_mul(u, v), a), poly_eval(u, a) * poly_eval(v, a));
    EXPECT_EQ(poly_eval(u + v, a), poly_eval(u, a) + poly_eval(v, a));
    EXPECT_EQ(poly_eval(FiberPoly::one(kModel), a), Rational(1));
  }
}

TEST(PolyProperties, PartialMatchesInterpolationOnRandomInputs) {
  RandomSource rng(106);
  for (int k = 0; k < 50; ++k) {
    const FiberPoly u = rng.poly(kModel, 4, 4);
    const Variable var = oracle::var_at(kModel, static_cast<std::size_t>(rng.integer(0, 3)));
    const Point a = rng.point(kModel);
    EXPECT_EQ(poly_partial(u, var).eval(a), oracle::partial_at(u, var, a));
  }
}

}  // namespace
