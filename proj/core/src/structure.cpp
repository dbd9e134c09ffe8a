#include "eulerops/structure.hpp"

#include "eulerops/errors.hpp"

namespace eulerops {

namespace {

void check_images(const BundleModel& model, const std::vector<FiberPoly>& base,
                  const std::vector<FiberPoly>& fiber, const char* what) {
  if (base.size() != model.m() || fiber.size() != model.n())
    throw ModelMismatchError(std::string(what) + ": expected " + std::to_string(model.m()) +
                             " base and " + std::to_string(model.n()) + " fiber images");
  for (const auto& img : base) model.require_same(img.model(), what);
  for (const auto& img : fiber) model.require_same(img.model(), what);
}

std::vector<FiberPoly> generators(const BundleModel& model) {
  std::vector<FiberPoly> gens;
  for (std::uint32_t i = 0; i < model.m(); ++i) gens.push_back(FiberPoly::base_var(model, i));
  for (std::uint32_t j = 0; j < model.n(); ++j) gens.push_back(FiberPoly::fiber_var(model, j));
  return gens;
}

bool round_trips(const AlgebraMorphism& outer, const AlgebraMorphism& inner) {
  const auto gens = generators(outer.model());
  const auto inner_images = inner.images();
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (morphism_apply(outer, inner_images[g]) != gens[g]) return false;
  return true;
}

// Translation x -> x + sign * a_x, xi -> xi + sign * a_xi.
std::vector<FiberPoly> translation(const BundleModel& model, const Point& at, long sign) {
  if (at.base.size() != model.m() || at.fiber.size() != model.n())
    throw ModelMismatchError("jet point dimension does not match the bundle model");
  auto images = generators(model);
  for (std::uint32_t i = 0; i < model.m(); ++i)
    images[i] += FiberPoly::constant(model, at.base[i] * Rational(sign));
  for (std::uint32_t j = 0; j < model.n(); ++j)
    images[model.m() + j] += FiberPoly::constant(model, at.fiber[j] * Rational(sign));
  return images;
}

}  // namespace

AlgebraMorphism::AlgebraMorphism(BundleModel model, std::vector<FiberPoly> base_images,
                                 std::vector<FiberPoly> fiber_images)
    : model_(model), base_images_(std::move(base_images)), fiber_images_(std::move(fiber_images)) {
  check_images(model_, base_images_, fiber_images_, "algebra morphism");
}

AlgebraMorphism AlgebraMorphism::identity(BundleModel model) {
  auto gens = generators(model);
  std::vector<FiberPoly> base(gens.begin(), gens.begin() + model.m());
  std::vector<FiberPoly> fiber(gens.begin() + model.m(), gens.end());
  return AlgebraMorphism(model, std::move(base), std::move(fiber));
}

AlgebraMorphism AlgebraMorphism::with_inverse(const AlgebraMorphism& inverse) const {
  model_.require_same(inverse.model_, "morphism inverse");
  AlgebraMorphism forward(model_, base_images_, fiber_images_);
  AlgebraMorphism backward(inverse.model_, inverse.base_images_, inverse.fiber_images_);
  if (!round_trips(forward, backward) || !round_trips(backward, forward))
    throw InverseError("supplied inverse does not fix every generator under composition");
  forward.inverse_ = std::make_shared<const AlgebraMorphism>(backward);
  return forward;
}

std::vector<FiberPoly> AlgebraMorphism::images() const {
  std::vector<FiberPoly> all = base_images_;
  all.insert(all.end(), fiber_images_.begin(), fiber_images_.end());
  return all;
}

std::string AlgebraMorphism::to_string() const {
  const auto names = function_variable_names(model_);
  const auto all = images();
  std::string out;
  for (std::size_t g = 0; g < all.size(); ++g) {
    if (g > 0) out += ", ";
    out += names[g] + " -> " + all[g].to_string();
  }
  return out;
}

Derivation Derivation::zero(BundleModel model) {
  return Derivation{model, std::vector<FiberPoly>(model.m(), FiberPoly(model)),
                    std::vector<FiberPoly>(model.n(), FiberPoly(model))};
}

void Derivation::validate() const { check_images(model, base_images, fiber_images, "derivation"); }

bool Derivation::has_weight_zero_images() const {
  for (const auto& img : base_images)
    if (!img.is_zero() && img.homogeneous_weight() != EulerWeight{0}) return false;
  for (const auto& img : fiber_images)
    if (!img.is_zero() && img.homogeneous_weight() != EulerWeight{1}) return false;
  return true;
}

bool NonSingularityCertificate::verify() const {
  DiffOp sum(target.model());
  for (const auto& [op, v] : entries) {
    const auto ord = op.order();
    if (ord && *ord > 1) return false;
    sum += bracket(op, multiplication_operator(v));
  }
  return sum == multiplication_operator(target);
}

FiberPoly morphism_apply(const AlgebraMorphism& psi, const FiberPoly& u) {
  psi.model().require_same(u.model(), "morphism apply");
  const auto images = psi.images();
  return u.substitute(images);
}

FiberPoly shift_to(const FiberPoly& u, const Point& at) {
  return u.substitute(translation(u.model(), at, 1));
}

FiberPoly shift_from(const FiberPoly& u, const Point& at) {
  return u.substitute(translation(u.model(), at, -1));
}

bool jet_is_zero(const FiberPoly& u, const JetSpec& spec) {
  const FiberPoly centred = shift_to(u, spec.point);
  for (const auto& [key, c] : centred.terms())
    if (key.total() <= spec.order) return false;
  return true;
}

std::vector<std::vector<FiberPoly>> jet_factorize(const FiberPoly& u, const JetSpec& spec) {
  if (!jet_is_zero(u, spec))
    throw JetNonzeroError("the order-" + std::to_string(spec.order) +
                          " jet of the input does not vanish at the given point");
  const BundleModel& model = u.model();
  const std::size_t vars = model.variable_count();
  const std::uint32_t factors = spec.order + 1;

  std::vector<std::vector<FiberPoly>> out;
  const FiberPoly centred_u = shift_to(u, spec.point);
  for (const auto& [key, c] : centred_u.terms()) {
    // Peel single variables off left to right; the last factor keeps the rest.
    std::vector<MultiIndex> pieces;
    MultiIndex rest = key;
    std::size_t var = 0;
    while (pieces.size() + 1 < factors) {
      while (rest[var] == 0) ++var;
      pieces.push_back(MultiIndex::unit(vars, var));
      rest[var] -= 1;
    }
    pieces.push_back(rest);

    std::vector<FiberPoly> tuple;
    for (std::size_t f = 0; f < pieces.size(); ++f) {
      FiberPoly centred(model);
      centred.add_term(pieces[f], f == 0 ? c : Rational(1));
      tuple.push_back(shift_from(centred, spec.point));
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

DiffOp extend_derivation(const Derivation& d) {
  d.validate();
  DiffOp out(d.model);
  for (std::uint32_t i = 0; i < d.model.m(); ++i)
    out += compose(multiplication_operator(d.base_images[i]),
                   DiffOp::derivative(d.model, Variable::base(i)));
  for (std::uint32_t j = 0; j < d.model.n(); ++j)
    out += compose(multiplication_operator(d.fiber_images[j]),
                   DiffOp::derivative(d.model, Variable::fiber(j)));
  return out;
}

bool is_infinitesimal_automorphism(const Derivation& d) {
  return lie_derivative(extend_derivation(d)).is_zero();
}

NonSingularityCertificate non_singularity_witness(const FiberPoly& u) {
  NonSingularityCertificate cert{u, {}};
  const BundleModel& model = u.model();
  for (const auto& [weight, part] : weight_split(u)) {
    if (weight.value == 0) {
      // [d/dx1, gamma_v] = gamma_{dv/dx1} with v the x1-antiderivative.
      cert.entries.emplace_back(DiffOp::derivative(model, Variable::base(0)),
                                part.integrate(Variable::base(0)));
    } else {
      // [E / lambda, gamma_u] = gamma_u for u of weight lambda.
      cert.entries.emplace_back(euler_field(model) * Rational(1, weight.value), part);
    }
  }
  return cert;
}

bool is_filtered(const AlgebraMorphism& psi, std::uint32_t kmax, std::uint32_t degree_bound) {
  const BundleModel& model = psi.model();
  const auto images = psi.images();
  bool ok = true;
  for_each_index_up_to(model.m(), degree_bound, [&](const MultiIndex& base) {
    for_each_index_up_to(model.n(), kmax, [&](const MultiIndex& fiber) {
      if (!ok) return;
      FiberPoly mono(model);
      mono.add_term(base.concat(fiber), Rational(1));
      const auto deg = mono.substitute(images).fiber_degree();
      if (deg && *deg > fiber.total()) ok = false;
    });
  });
  return ok;
}

bool preserves_degree_zero(const AlgebraMorphism& psi, std::uint32_t degree_bound) {
  return is_filtered(psi, 0, degree_bound);
}

AlgebraMorphism graded_part(const AlgebraMorphism& psi, std::uint32_t degree_bound) {
  auto project = [&](const AlgebraMorphism& m, const char* which) {
    if (!is_filtered(m, 1, degree_bound))
      throw NotFilteredError(std::string(which) + " is not filtered: " + m.to_string());
    std::vector<FiberPoly> base;
    std::vector<FiberPoly> fiber;
    for (const auto& img : m.base_images()) base.push_back(img.weight_part(0));
    for (const auto& img : m.fiber_images()) fiber.push_back(img.weight_part(1));
    return AlgebraMorphism(m.model(), std::move(base), std::move(fiber));
  };
  const AlgebraMorphism forward = project(psi, "morphism");
  if (psi.inverse() == nullptr)
    throw InverseError("graded part needs a morphism with a certified inverse");
  const AlgebraMorphism backward = project(*psi.inverse(), "inverse morphism");
  return forward.with_inverse(backward);
}

}  // namespace eulerops
