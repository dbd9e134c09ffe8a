#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eulerops/diff_op.hpp"
#include "eulerops/fiber_poly.hpp"

namespace eulerops {

// Coordinates of T*E: positions x, fiber coordinates xi, and their momenta
// p (dual to x) and theta (dual to xi).
enum class SymbolVarKind { x, xi, p, theta };

struct SymbolVar {
  SymbolVarKind kind;
  std::uint32_t index;  // 0-based
};

// Polynomial on T*E. Term keys concatenate the exponent vectors
// (x || xi || p || theta), of length 2(m + n).
class SymbolPoly {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLex>;

  explicit SymbolPoly(BundleModel model) : model_(model) {}

  static SymbolPoly constant(BundleModel model, const Rational& c);
  static SymbolPoly variable(BundleModel model, SymbolVar v);
  // Embeds u into the momentum-free part.
  static SymbolPoly from_function(const FiberPoly& u);

  const BundleModel& model() const { return model_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& key, const Rational& coeff);

  // True when some term carries a p or theta.
  bool has_momenta() const;
  // Highest momentum degree |p| + |theta| over terms; absent for zero.
  std::optional<std::uint32_t> symbol_degree() const;
  // Throws NotAFunctionError when momenta occur.
  FiberPoly to_function() const;

  SymbolPoly partial(SymbolVar v) const;

  SymbolPoly operator-() const;
  SymbolPoly& operator+=(const SymbolPoly& rhs);
  SymbolPoly& operator-=(const SymbolPoly& rhs);
  SymbolPoly& operator*=(const Rational& scalar);
  friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
  friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
  friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
  friend SymbolPoly operator*(SymbolPoly a, const Rational& s) { return a *= s; }

  std::string to_string() const;

  friend bool operator==(const SymbolPoly& a, const SymbolPoly& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
  }
  friend std::ostream& operator<<(std::ostream& os, const SymbolPoly& p) {
    return os << p.to_string();
  }

 private:
  std::size_t key_position(SymbolVar v) const;

  BundleModel model_;
  TermMap terms_;
};

// x1..xm, xi1..xin, p1..pm, th1..thn
std::vector<std::string> symbol_variable_names(const BundleModel& model);

// Top-order part of T with d_alpha -> p^alpha, dbar_beta -> theta^beta.
// Throws UndefinedSymbolError for the zero operator.
SymbolPoly principal_symbol(const DiffOp& op);

SymbolPoly symbol_mul(const SymbolPoly& a, const SymbolPoly& b);

// {P,Q} = sum_i (P_{p_i} Q_{x^i} - P_{x^i} Q_{p_i})
//       + sum_j (P_{theta_j} Q_{xi_j} - P_{xi_j} Q_{theta_j}),
// so that {p_i, x^i} = 1 and {theta_j, xi_j} = 1.
SymbolPoly poisson_bracket(const SymbolPoly& a, const SymbolPoly& b);

// Applies u -> {P, u} `iterations` times. Throws NotAFunctionError as soon
// as an intermediate result carries a momentum.
FiberPoly hamiltonian_action(const SymbolPoly& p, const FiberPoly& u, std::uint32_t iterations);

// A generator (x^i first, then xi_j) that P fails to Poisson-commute with;
// absent exactly when P is momentum-free.
std::optional<FiberPoly> distinguishing_witness(const SymbolPoly& p);

}  // namespace eulerops
