#include <gtest/gtest.h>

#include <eulerops/errors.hpp>
#include <eulerops/json_io.hpp>
#include <eulerops/parser.hpp>

#include "oracle.hpp"

namespace {

using namespace eulerops;
using oracle::fn;
using oracle::op;
using oracle::sym;

const BundleModel kModel(2, 2);

std::size_t error_offset(const char* text, ExprKind kind, const BundleModel& model = kModel) {
  try {
    parse(text, kind, model);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return 0;
}

TEST(Parse, OperatorExamples) {
  const DiffOp t = parse_operator("xi1*d/dxi1", BundleModel(1, 1));
  EXPECT_EQ(t, DiffOp::term(MultiIndex{0, 1}, FiberPoly::fiber_var(BundleModel(1, 1), 0)));
  // products are compositions
  EXPECT_EQ(op("d/dx1*x1"), op("x1*d/dx1 + 1"));
  EXPECT_EQ(op("d/dx1*x1").to_string(), "x1*d/dx1 + 1");
}

TEST(Parse, FunctionExamples) {
  const FiberPoly u = fn("x1^2 + 3/2*xi2");
  EXPECT_EQ(u.term_count(), 2u);
  EXPECT_EQ(u.coefficient(MultiIndex{2, 0, 0, 0}), Rational(1));
  EXPECT_EQ(u.coefficient(MultiIndex{0, 0, 0, 1}), Rational(3, 2));
}

TEST(Parse, Precedence) {
  EXPECT_EQ(fn("2*x1^2"), fn("2*(x1^2)"));
  EXPECT_EQ(fn("1 - x1 - x2"), fn("1 - (x1 + x2)"));
  EXPECT_EQ(fn("-x1^2"), fn("-(x1^2)"));
  EXPECT_EQ(fn("(x1 + 1)^2"), fn("x1^2 + 2*x1 + 1"));
  EXPECT_EQ(fn("x1^0"), fn("1"));
  EXPECT_EQ(fn("  x1   *xi2 "), fn("x1*xi2"));
}

TEST(Parse, SymbolExamples) {
  const SymbolPoly s = sym("x1*p1*th2 - xi1");
  EXPECT_TRUE(s.has_momenta());
  EXPECT_EQ(s.symbol_degree(), 2u);
}

TEST(Parse, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(error_offset("x1 + ", ExprKind::function), 5u);
  EXPECT_EQ(error_offset("x1 $ 2", ExprKind::function), 3u);
  EXPECT_EQ(error_offset("(x1 + 2", ExprKind::function), 7u);
  EXPECT_EQ(error_offset("x1 x2", ExprKind::function), 3u);
  EXPECT_EQ(error_offset("x1^", ExprKind::function), 3u);
  EXPECT_EQ(error_offset("1/0", ExprKind::function), 0u);
}

TEST(Parse, IndexOutOfModel) {
  EXPECT_EQ(error_offset("x1 + x3", ExprKind::function), 5u);
  EXPECT_EQ(error_offset("d/dxi3", ExprKind::op), 0u);
  EXPECT_EQ(error_offset("x0", ExprKind::function), 0u);
}

TEST(Parse, KindViolations) {
  EXPECT_EQ(error_offset("x1*d/dx1", ExprKind::function), 3u);
  EXPECT_EQ(error_offset("xi1 + p1", ExprKind::function), 6u);
  EXPECT_EQ(error_offset("th1*d/dx1", ExprKind::op), 0u);
  EXPECT_EQ(error_offset("p1*d/dx1", ExprKind::symbol), 3u);
}

TEST(Parse, ErrorNameIsParse) {
  try {
    parse_function("x1 +", kModel);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "parse");
  }
}

TEST(ParseAssignment, Examples) {
  const auto [var, image] = parse_assignment("xi2 = 2*xi1 + x1", kModel);
  EXPECT_EQ(var.kind, VarKind::fiber);
  EXPECT_EQ(var.index, 1u);
  EXPECT_EQ(image, fn("2*xi1 + x1"));
  EXPECT_THROW(parse_assignment("2 = x1", kModel), ParseError);
  EXPECT_THROW(parse_assignment("x1 x1", kModel), ParseError);
}

// Render / parse round trip on random values.

TEST(RoundTrip, Functions) {
  RandomSource rng(501);
  for (int k = 0; k < 200; ++k) {
    const FiberPoly u = rng.poly(kModel, 4, 5);
    EXPECT_EQ(parse_function(u.to_string(), kModel), u) << u;
  }
}

TEST(RoundTrip, Operators) {
  RandomSource rng(502);
  for (int k = 0; k < 200; ++k) {
    const DiffOp t = rng.op(kModel, 3, 3, 4);
    EXPECT_EQ(parse_operator(t.to_string(), kModel), t) << t;
  }
}

TEST(RoundTrip, Symbols) {
  RandomSource rng(503);
  for (int k = 0; k < 200; ++k) {
    const SymbolPoly s = rng.symbol(kModel, 3, 4);
    EXPECT_EQ(parse_symbol(s.to_string(), kModel), s) << s;
  }
}

TEST(Json, FunctionDocument) {
  const auto doc = to_json(fn("3/2*x1^2*xi1 - 1"));
  EXPECT_EQ(doc["kind"], "function");
  EXPECT_EQ(doc["model"]["m"], 2);
  EXPECT_EQ(doc["text"], "3/2*x1^2*xi1 - 1");
  ASSERT_EQ(doc["terms"].size(), 2u);
  EXPECT_EQ(doc["terms"][0]["baseExp"], nlohmann::json({2, 0}));
  EXPECT_EQ(doc["terms"][0]["fiberExp"], nlohmann::json({1, 0}));
  EXPECT_EQ(doc["terms"][0]["coeff"], "3/2");
}

TEST(Json, OperatorDocument) {
  const auto doc = to_json(op("(x1 + xi1)*d/dx2 + d/dxi1^2"));
  EXPECT_EQ(doc["kind"], "operator");
  ASSERT_EQ(doc["terms"].size(), 2u);
  EXPECT_EQ(doc["terms"][0]["alpha"], nlohmann::json({0, 0}));
  EXPECT_EQ(doc["terms"][0]["beta"], nlohmann::json({2, 0}));
  EXPECT_EQ(doc["terms"][0]["coeff"], "1");
  EXPECT_EQ(doc["terms"][1]["coeff"], "x1 + xi1");
}

TEST(Json, RoundTrips) {
  RandomSource rng(504);
  for (int k = 0; k < 50; ++k) {
    const FiberPoly u = rng.poly(kModel, 3, 4);
    const DiffOp t = rng.op(kModel, 3, 3, 3);
    const SymbolPoly s = rng.symbol(kModel, 3, 3);
    EXPECT_EQ(function_from_json(nlohmann::json::parse(to_json(u).dump())), u);
    EXPECT_EQ(operator_from_json(nlohmann::json::parse(to_json(t).dump())), t);
    EXPECT_EQ(symbol_from_json(nlohmann::json::parse(to_json(s).dump())), s);
  }
}

TEST(Json, MalformedDocuments) {
  EXPECT_THROW(function_from_json(nlohmann::json::parse(R"({"kind":"function"})")), ParseError);
  EXPECT_THROW(operator_from_json(to_json(fn("x1"))), ParseError);
  auto doc = to_json(fn("x1"));
  doc["terms"][0]["coeff"] = "1/0";
  EXPECT_THROW(function_from_json(doc), Error);
}

}  // namespace
