#pragma once

#include <cstdint>
#include <random>

#include "eulerops/diff_op.hpp"
#include "eulerops/fiber_poly.hpp"
#include "eulerops/structure.hpp"
#include "eulerops/symbol_poly.hpp"

namespace eulerops {

// Seeded generator of random algebra elements for property checks. Output is
// a pure function of the seed and the call sequence.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool chance(double p);

  // Nonzero rational with small numerator and denominator.
  Rational rational();

  // Random exponent vector of the given size with total in [min_total, max_total].
  MultiIndex multi_index(std::size_t size, std::uint32_t min_total, std::uint32_t max_total);

  // Up to max_terms terms of total degree <= max_degree; may be zero.
  FiberPoly poly(const BundleModel& model, std::uint32_t max_degree, std::uint32_t max_terms);
  FiberPoly nonzero_poly(const BundleModel& model, std::uint32_t max_degree, std::uint32_t max_terms);
  // Nonzero, xi-degree exactly fiber_degree, x-degree <= max_base_degree.
  FiberPoly homogeneous_poly(const BundleModel& model, std::uint32_t fiber_degree,
                             std::uint32_t max_base_degree, std::uint32_t max_terms);
  // Nonzero polynomial in x only.
  FiberPoly base_poly(const BundleModel& model, std::uint32_t max_degree, std::uint32_t max_terms);

  // Nonzero operator with order <= max_order and coefficient degree <= coeff_degree.
  DiffOp op(const BundleModel& model, std::uint32_t max_order, std::uint32_t coeff_degree,
            std::uint32_t max_terms);
  // Nonzero operator homogeneous of the given weight. Requires a weight that
  // is reachable: weight + max_order >= 0 and weight <= coeff_degree.
  DiffOp homogeneous_op(const BundleModel& model, std::int64_t weight, std::uint32_t max_order,
                        std::uint32_t coeff_degree, std::uint32_t max_terms);

  SymbolPoly symbol(const BundleModel& model, std::uint32_t max_degree, std::uint32_t max_terms);

  Point point(const BundleModel& model);

  Derivation derivation(const BundleModel& model, std::uint32_t max_degree);
  // D(x^i) in A^0 and D(xi_j) = sum_k A_jk(x) xi_k: a base vector field plus a
  // matrix fiber action.
  Derivation weight_zero_derivation(const BundleModel& model, std::uint32_t max_degree);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eulerops
