#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "eulerops/fiber_poly.hpp"

namespace eulerops {

// Differential operator in normal form
//
//   T = sum over (alpha, beta) of  T^{alpha,beta} d_alpha dbar_beta
//
// with every coefficient standing left of every derivative. A term key is the
// concatenated derivative multi-index (alpha || beta) of length m + n, so the
// same key layout as a FiberPoly monomial.
class DiffOp {
 public:
  using TermMap = std::map<MultiIndex, FiberPoly, GradedLex>;

  explicit DiffOp(BundleModel model) : model_(model) {}

  static DiffOp identity(BundleModel model);
  // d/dx_i or d/dxi_j.
  static DiffOp derivative(BundleModel model, Variable v);
  // coeff * d^key, key = alpha || beta.
  static DiffOp term(const MultiIndex& key, const FiberPoly& coeff);

  const BundleModel& model() const { return model_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiIndex alpha(const MultiIndex& key) const { return key.slice(0, model_.m()); }
  MultiIndex beta(const MultiIndex& key) const { return key.slice(model_.m(), model_.n()); }

  // Adds coeff * d^key, merging with an existing term.
  void add_term(const MultiIndex& key, const FiberPoly& coeff);
  FiberPoly coefficient(const MultiIndex& key) const;

  // Max |alpha| + |beta|; absent for the zero operator.
  std::optional<std::uint32_t> order() const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& rhs);
  DiffOp& operator-=(const DiffOp& rhs);
  DiffOp& operator*=(const Rational& scalar);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const Rational& s) { return a *= s; }
  friend DiffOp operator*(const Rational& s, DiffOp a) { return a *= s; }

  // Canonical rendering, e.g. "x1*d/dx1*d/dxi1 + -1*d/dxi1 + x1".
  std::string to_string() const;

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
  }
  friend std::ostream& operator<<(std::ostream& os, const DiffOp& op) {
    return os << op.to_string();
  }

 private:
  BundleModel model_;
  TermMap terms_;
};

// T(u).
FiberPoly apply(const DiffOp& op, const FiberPoly& u);

// Normal-ordered product D o T.
DiffOp compose(const DiffOp& d, const DiffOp& t);

// D o T - T o D.
DiffOp bracket(const DiffOp& d, const DiffOp& t);

// sum_j xi_j d/dxi_j
DiffOp euler_field(const BundleModel& model);

// [E, T]
DiffOp lie_derivative(const DiffOp& op);

// Splits T into L_E-eigencomponents. A term with coefficient monomial of
// xi-degree d and fiber multi-index beta has weight d - |beta|.
std::map<EulerWeight, DiffOp> weight_decompose(const DiffOp& op);

std::optional<std::uint32_t> order(const DiffOp& op);

// gamma_u: v -> u v
DiffOp multiplication_operator(const FiberPoly& u);

// The single weight of T, or absent when T mixes weights or is zero.
std::optional<EulerWeight> is_homogeneous(const DiffOp& op);

// Derivative symbols in key order: d/dx1..d/dxm, d/dxi1..d/dxin.
std::vector<std::string> derivative_names(const BundleModel& model);

}  // namespace eulerops
