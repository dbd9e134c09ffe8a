#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "eulerops/multi_index.hpp"
#include "eulerops/rational.hpp"

namespace eulerops {

// Single-chart model of a vector bundle R^m x R^n -> R^m: base coordinates
// x1..xm and fiber coordinates xi1..xin.
class BundleModel {
 public:
  // Throws IndexError unless m >= 1 and n >= 1.
  BundleModel(std::uint32_t m, std::uint32_t n);

  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }
  std::size_t variable_count() const { return std::size_t{m_} + n_; }

  // Throws ModelMismatchError when the dimensions differ.
  void require_same(const BundleModel& other, const char* context) const;

  friend bool operator==(const BundleModel&, const BundleModel&) = default;

 private:
  std::uint32_t m_;
  std::uint32_t n_;
};

// Eigenvalue of the Lie derivative along the Euler field.
struct EulerWeight {
  std::int64_t value = 0;

  friend bool operator==(const EulerWeight&, const EulerWeight&) = default;
  friend auto operator<=>(const EulerWeight&, const EulerWeight&) = default;
};

enum class VarKind { base, fiber };

// 0-based coordinate reference; rendered 1-based (`x1`, `xi1`).
struct Variable {
  VarKind kind;
  std::uint32_t index;

  static Variable base(std::uint32_t i) { return {VarKind::base, i}; }
  static Variable fiber(std::uint32_t j) { return {VarKind::fiber, j}; }
};

// A point of the total space with rational coordinates.
struct Point {
  std::vector<Rational> base;
  std::vector<Rational> fiber;
};

// Element of A(E): polynomial in the base and fiber coordinates with rational
// coefficients. A term key is the concatenated exponent vector
// (base exponents || fiber exponents) of length m + n.
class FiberPoly {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLex>;

  explicit FiberPoly(BundleModel model) : model_(model) {}

  static FiberPoly constant(BundleModel model, const Rational& c);
  static FiberPoly one(BundleModel model) { return constant(model, Rational(1)); }
  static FiberPoly variable(BundleModel model, Variable v);
  static FiberPoly base_var(BundleModel model, std::uint32_t i) {
    return variable(model, Variable::base(i));
  }
  static FiberPoly fiber_var(BundleModel model, std::uint32_t j) {
    return variable(model, Variable::fiber(j));
  }
  // Throws ModelMismatchError on exponent-vector length mismatch.
  static FiberPoly monomial(BundleModel model, const MultiIndex& base_exp,
                            const MultiIndex& fiber_exp, const Rational& coeff = Rational(1));

  const BundleModel& model() const { return model_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Adds coeff * monomial(key); keeps the no-zero-coefficient invariant.
  void add_term(const MultiIndex& key, const Rational& coeff);
  Rational coefficient(const MultiIndex& key) const;

  // Fiber (xi-) degree of a term key.
  std::uint32_t fiber_degree_of(const MultiIndex& key) const {
    return key.total(model_.m(), model_.n());
  }
  // Highest xi-degree over terms; absent for zero.
  std::optional<std::uint32_t> fiber_degree() const;
  // Highest degree in a single fiber variable; 0 for zero.
  std::uint32_t degree_in(Variable v) const;
  // Total degree; absent for zero.
  std::optional<std::uint32_t> total_degree() const;
  // Weight when every term shares one xi-degree; absent otherwise or for zero.
  std::optional<EulerWeight> homogeneous_weight() const;
  bool is_constant() const;
  // True when no fiber variable occurs (zero included).
  bool is_base_only() const;

  // pr_k: the xi-degree-k part.
  FiberPoly weight_part(std::uint32_t k) const;

  FiberPoly operator-() const;
  FiberPoly& operator+=(const FiberPoly& rhs);
  FiberPoly& operator-=(const FiberPoly& rhs);
  FiberPoly& operator*=(const Rational& scalar);
  friend FiberPoly operator+(FiberPoly a, const FiberPoly& b) { return a += b; }
  friend FiberPoly operator-(FiberPoly a, const FiberPoly& b) { return a -= b; }
  friend FiberPoly operator*(const FiberPoly& a, const FiberPoly& b);
  friend FiberPoly operator*(FiberPoly a, const Rational& s) { return a *= s; }
  friend FiberPoly operator*(const Rational& s, FiberPoly a) { return a *= s; }

  FiberPoly pow(std::uint32_t exponent) const;

  // d/dx_i or d/dxi_j. Throws IndexError for an out-of-range index.
  FiberPoly partial(Variable v) const;
  // Iterated partial derivative d^key over the concatenated (x || xi) index.
  FiberPoly derivative(const MultiIndex& key) const;
  // Antiderivative in one variable with zero integration constant.
  FiberPoly integrate(Variable v) const;

  // Throws ModelMismatchError when the point dimensions differ.
  Rational eval(const Point& at) const;

  // Ring homomorphism determined by generator images: images[0..m) for
  // x1..xm, images[m..m+n) for xi1..xin. All images share one model, which
  // is the model of the result.
  FiberPoly substitute(std::span<const FiberPoly> images) const;

  // Canonical rendering, e.g. "3/2*x1^2*xi1 - xi2 + 1".
  std::string to_string() const;

  friend bool operator==(const FiberPoly& a, const FiberPoly& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FiberPoly& p) {
    return os << p.to_string();
  }

 private:
  std::size_t key_position(Variable v) const;

  BundleModel model_;
  TermMap terms_;
};

// Named entry points matching the module contract.
FiberPoly poly_mul(const FiberPoly& u, const FiberPoly& v);
FiberPoly poly_partial(const FiberPoly& u, Variable v);
// Throws ModelMismatchError on a dimension mismatch.
Rational poly_eval(const FiberPoly& u, const Point& at);
// Components keyed by xi-degree; empty map for zero.
std::map<EulerWeight, FiberPoly> weight_split(const FiberPoly& u);

// Variable names in key order: x1..xm, xi1..xin.
std::vector<std::string> function_variable_names(const BundleModel& model);

}  // namespace eulerops
