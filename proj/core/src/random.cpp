#include "eulerops/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulerops {

std::int64_t RandomSource::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

bool RandomSource::chance(double p) { return std::bernoulli_distribution(p)(engine_); }

Rational RandomSource::rational() {
  std::int64_t num = integer(-5, 4);
  if (num >= 0) ++num;  // skip zero
  static constexpr long kDenominators[] = {1, 1, 1, 2, 3};
  return Rational(num, kDenominators[integer(0, 4)]);
}

MultiIndex RandomSource::multi_index(std::size_t size, std::uint32_t min_total,
                                     std::uint32_t max_total) {
  MultiIndex idx(size);
  const auto total = static_cast<std::uint32_t>(integer(min_total, max_total));
  for (std::uint32_t k = 0; k < total; ++k) ++idx[static_cast<std::size_t>(integer(0, size - 1))];
  return idx;
}

FiberPoly RandomSource::poly(const BundleModel& model, std::uint32_t max_degree,
                             std::uint32_t max_terms) {
  FiberPoly u(model);
  const auto terms = integer(0, max_terms);
  for (std::int64_t t = 0; t < terms; ++t)
    u.add_term(multi_index(model.variable_count(), 0, max_degree), rational());
  return u;
}

FiberPoly RandomSource::nonzero_poly(const BundleModel& model, std::uint32_t max_degree,
                                     std::uint32_t max_terms) {
  for (;;) {
    FiberPoly u = poly(model, max_degree, std::max<std::uint32_t>(1, max_terms));
    if (!u.is_zero()) return u;
  }
}

FiberPoly RandomSource::homogeneous_poly(const BundleModel& model, std::uint32_t fiber_degree,
                                         std::uint32_t max_base_degree, std::uint32_t max_terms) {
  FiberPoly u(model);
  while (u.is_zero()) {
    const auto terms = integer(1, std::max<std::uint32_t>(1, max_terms));
    for (std::int64_t t = 0; t < terms; ++t) {
      const MultiIndex base = multi_index(model.m(), 0, max_base_degree);
      const MultiIndex fiber = multi_index(model.n(), fiber_degree, fiber_degree);
      u.add_term(base.concat(fiber), rational());
    }
  }
  return u;
}

FiberPoly RandomSource::base_poly(const BundleModel& model, std::uint32_t max_degree,
                                  std::uint32_t max_terms) {
  return homogeneous_poly(model, 0, max_degree, max_terms);
}

DiffOp RandomSource::op(const BundleModel& model, std::uint32_t max_order,
                        std::uint32_t coeff_degree, std::uint32_t max_terms) {
  DiffOp t(model);
  while (t.is_zero()) {
    const auto terms = integer(1, std::max<std::uint32_t>(1, max_terms));
    for (std::int64_t k = 0; k < terms; ++k) {
      t.add_term(multi_index(model.variable_count(), 0, max_order),
                 nonzero_poly(model, coeff_degree, 3));
    }
  }
  return t;
}

DiffOp RandomSource::homogeneous_op(const BundleModel& model, std::int64_t weight,
                                    std::uint32_t max_order, std::uint32_t coeff_degree,
                                    std::uint32_t max_terms) {
  // |beta| = b needs coefficient xi-degree d = weight + b in [0, coeff_degree].
  const std::int64_t b_lo = std::max<std::int64_t>(0, -weight);
  const std::int64_t b_hi =
      std::min<std::int64_t>(max_order, static_cast<std::int64_t>(coeff_degree) - weight);
  if (b_lo > b_hi) throw std::invalid_argument("weight not reachable with these bounds");
  DiffOp t(model);
  while (t.is_zero()) {
    const auto terms = integer(1, std::max<std::uint32_t>(1, max_terms));
    for (std::int64_t k = 0; k < terms; ++k) {
      const auto b = static_cast<std::uint32_t>(integer(b_lo, b_hi));
      const auto d = static_cast<std::uint32_t>(weight + b);
      const MultiIndex alpha = multi_index(model.m(), 0, max_order - b);
      const MultiIndex beta = multi_index(model.n(), b, b);
      t.add_term(alpha.concat(beta), homogeneous_poly(model, d, coeff_degree - d, 2));
    }
  }
  return t;
}

SymbolPoly RandomSource::symbol(const BundleModel& model, std::uint32_t max_degree,
                                std::uint32_t max_terms) {
  SymbolPoly s(model);
  const auto terms = integer(1, std::max<std::uint32_t>(1, max_terms));
  for (std::int64_t t = 0; t < terms; ++t)
    s.add_term(multi_index(2 * model.variable_count(), 0, max_degree), rational());
  return s;
}

Point RandomSource::point(const BundleModel& model) {
  Point p;
  for (std::uint32_t i = 0; i < model.m(); ++i)
    p.base.push_back(chance(0.25) ? Rational(0) : rational());
  for (std::uint32_t j = 0; j < model.n(); ++j)
    p.fiber.push_back(chance(0.25) ? Rational(0) : rational());
  return p;
}

Derivation RandomSource::derivation(const BundleModel& model, std::uint32_t max_degree) {
  Derivation d = Derivation::zero(model);
  for (auto& img : d.base_images)
    img = chance(0.4) ? base_poly(model, max_degree, 2) : poly(model, max_degree, 3);
  for (auto& img : d.fiber_images)
    img = chance(0.4) ? homogeneous_poly(model, 1, max_degree - 1, 2) : poly(model, max_degree, 3);
  return d;
}

Derivation RandomSource::weight_zero_derivation(const BundleModel& model,
                                                std::uint32_t max_degree) {
  Derivation d = Derivation::zero(model);
  for (auto& img : d.base_images)
    if (chance(0.8)) img = base_poly(model, max_degree, 2);
  for (auto& img : d.fiber_images) {
    for (std::uint32_t k = 0; k < model.n(); ++k)
      if (chance(0.7))
        img += base_poly(model, max_degree - 1, 2) * FiberPoly::fiber_var(model, k);
  }
  return d;
}

}  // namespace eulerops
