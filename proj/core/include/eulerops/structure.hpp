#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eulerops/diff_op.hpp"
#include "eulerops/fiber_poly.hpp"

namespace eulerops {

// Unital endomorphism of A(E) given by the images of the generators
// x1..xm, xi1..xin. A(E) is free on these generators in the polynomial model,
// so any choice of images defines a homomorphism.
class AlgebraMorphism {
 public:
  // Throws ModelMismatchError when the image counts or models disagree.
  AlgebraMorphism(BundleModel model, std::vector<FiberPoly> base_images,
                  std::vector<FiberPoly> fiber_images);

  static AlgebraMorphism identity(BundleModel model);

  // Attaches an inverse after checking that both round trips fix every
  // generator. Throws InverseError otherwise.
  AlgebraMorphism with_inverse(const AlgebraMorphism& inverse) const;

  const BundleModel& model() const { return model_; }
  const std::vector<FiberPoly>& base_images() const { return base_images_; }
  const std::vector<FiberPoly>& fiber_images() const { return fiber_images_; }
  // base images followed by fiber images
  std::vector<FiberPoly> images() const;
  // nullptr when no inverse was supplied.
  const AlgebraMorphism* inverse() const { return inverse_.get(); }

  // "x1 -> x1 + 1, xi1 -> 2*xi2 + x1, ..."
  std::string to_string() const;

 private:
  BundleModel model_;
  std::vector<FiberPoly> base_images_;
  std::vector<FiberPoly> fiber_images_;
  std::shared_ptr<const AlgebraMorphism> inverse_;
};

// Derivation of A(E) given by D(x^i) and D(xi_j).
struct Derivation {
  BundleModel model;
  std::vector<FiberPoly> base_images;
  std::vector<FiberPoly> fiber_images;

  static Derivation zero(BundleModel model);
  // Throws ModelMismatchError when the image counts or models disagree.
  void validate() const;
  // True when every D(x^i) lies in A^0 and every D(xi_j) in A^1.
  bool has_weight_zero_images() const;
};

struct JetSpec {
  Point point;
  std::uint32_t order = 0;
};

// Witness that gamma_u is a sum of commutators [D_i, gamma_{v_i}] with D_i
// in D^1_E.
struct NonSingularityCertificate {
  FiberPoly target;
  std::vector<std::pair<DiffOp, FiberPoly>> entries;

  // sum_i [D_i, gamma_{v_i}] == gamma_u, and every D_i has order <= 1.
  bool verify() const;
};

// Substitution u(x, xi) -> u(Psi(x), Psi(xi)).
FiberPoly morphism_apply(const AlgebraMorphism& psi, const FiberPoly& u);

// Taylor shift u(x + a_x, xi + a_xi): coordinates centred at the point.
FiberPoly shift_to(const FiberPoly& u, const Point& at);
FiberPoly shift_from(const FiberPoly& u, const Point& at);

// All partial derivatives of order <= l vanish at the point.
// Throws ModelMismatchError on a dimension mismatch.
bool jet_is_zero(const FiberPoly& u, const JetSpec& spec);

// Writes u as a sum of products of l+1 factors, each vanishing at the point.
// Throws JetNonzeroError when jet_is_zero(u, spec) fails.
std::vector<std::vector<FiberPoly>> jet_factorize(const FiberPoly& u, const JetSpec& spec);

// sum_i gamma_{D(x^i)} d_i + sum_j gamma_{D(xi_j)} dbar_j
DiffOp extend_derivation(const Derivation& d);

// [E, extend_derivation(D)] == 0
bool is_infinitesimal_automorphism(const Derivation& d);

NonSingularityCertificate non_singularity_witness(const FiberPoly& u);

// Default bound on the x-degree of the basis monomials probed by the
// filtration checks.
inline constexpr std::uint32_t kDefaultDegreeBound = 4;

// Every basis monomial of A^k (k <= kmax, x-degree <= degree_bound) maps to
// xi-degree <= k.
bool is_filtered(const AlgebraMorphism& psi, std::uint32_t kmax,
                 std::uint32_t degree_bound = kDefaultDegreeBound);

// Every xi-free basis monomial of x-degree <= degree_bound maps into A^0.
bool preserves_degree_zero(const AlgebraMorphism& psi,
                           std::uint32_t degree_bound = kDefaultDegreeBound);

// Generator images pr_0(Psi(x^i)) and pr_1(Psi(xi_j)); carries the graded
// part of the inverse. Throws InverseError without an inverse and
// NotFilteredError when Psi or its inverse is not filtered.
AlgebraMorphism graded_part(const AlgebraMorphism& psi,
                            std::uint32_t degree_bound = kDefaultDegreeBound);

}  // namespace eulerops
