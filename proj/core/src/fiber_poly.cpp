#include "eulerops/fiber_poly.hpp"

#include <algorithm>

#include "eulerops/errors.hpp"
#include "poly_text.hpp"

namespace eulerops {

namespace {

// n (n-1) ... (n-k+1)
Rational falling_factorial(std::uint32_t n, std::uint32_t k) {
  long r = 1;
  for (std::uint32_t i = 0; i < k; ++i) r *= static_cast<long>(n - i);
  return Rational(r);
}

}  // namespace

BundleModel::BundleModel(std::uint32_t m, std::uint32_t n) : m_(m), n_(n) {
  if (m == 0 || n == 0)
    throw IndexError("bundle model needs m >= 1 and n >= 1 (got m=" + std::to_string(m) +
                     ", n=" + std::to_string(n) + ")");
}

void BundleModel::require_same(const BundleModel& other, const char* context) const {
  if (*this != other) {
    throw ModelMismatchError(std::string(context) + ": model (m=" + std::to_string(m_) +
                             ", n=" + std::to_string(n_) + ") vs (m=" +
                             std::to_string(other.m_) + ", n=" + std::to_string(other.n_) + ")");
  }
}

std::vector<std::string> function_variable_names(const BundleModel& model) {
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= model.m(); ++i) names.push_back("x" + std::to_string(i));
  for (std::uint32_t j = 1; j <= model.n(); ++j) names.push_back("xi" + std::to_string(j));
  return names;
}

FiberPoly FiberPoly::constant(BundleModel model, const Rational& c) {
  FiberPoly p(model);
  p.add_term(MultiIndex(model.variable_count()), c);
  return p;
}

FiberPoly FiberPoly::variable(BundleModel model, Variable v) {
  FiberPoly p(model);
  p.add_term(MultiIndex::unit(model.variable_count(), p.key_position(v)), Rational(1));
  return p;
}

FiberPoly FiberPoly::monomial(BundleModel model, const MultiIndex& base_exp,
                              const MultiIndex& fiber_exp, const Rational& coeff) {
  if (base_exp.size() != model.m() || fiber_exp.size() != model.n())
    throw ModelMismatchError("monomial exponent lengths do not match the bundle model");
  FiberPoly p(model);
  p.add_term(base_exp.concat(fiber_exp), coeff);
  return p;
}

std::size_t FiberPoly::key_position(Variable v) const {
  const std::uint32_t limit = v.kind == VarKind::base ? model_.m() : model_.n();
  if (v.index >= limit) {
    throw IndexError(std::string(v.kind == VarKind::base ? "base" : "fiber") +
                     " variable index " + std::to_string(v.index + 1) + " out of range 1.." +
                     std::to_string(limit));
  }
  return v.kind == VarKind::base ? v.index : model_.m() + v.index;
}

void FiberPoly::add_term(const MultiIndex& key, const Rational& coeff) {
  if (key.size() != model_.variable_count())
    throw ModelMismatchError("term key length does not match the bundle model");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational FiberPoly::coefficient(const MultiIndex& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::uint32_t> FiberPoly::fiber_degree() const {
  if (is_zero()) return std::nullopt;
  std::uint32_t best = 0;
  for (const auto& [key, c] : terms_) best = std::max(best, fiber_degree_of(key));
  return best;
}

std::uint32_t FiberPoly::degree_in(Variable v) const {
  const auto pos = key_position(v);
  std::uint32_t best = 0;
  for (const auto& [key, c] : terms_) best = std::max(best, key[pos]);
  return best;
}

std::optional<std::uint32_t> FiberPoly::total_degree() const {
  if (is_zero()) return std::nullopt;
  // GradedLex puts the highest total degree first.
  return terms_.begin()->first.total();
}

std::optional<EulerWeight> FiberPoly::homogeneous_weight() const {
  if (is_zero()) return std::nullopt;
  const std::uint32_t d = fiber_degree_of(terms_.begin()->first);
  for (const auto& [key, c] : terms_)
    if (fiber_degree_of(key) != d) return std::nullopt;
  return EulerWeight{d};
}

bool FiberPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

bool FiberPoly::is_base_only() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return fiber_degree_of(t.first) == 0; });
}

FiberPoly FiberPoly::weight_part(std::uint32_t k) const {
  FiberPoly out(model_);
  for (const auto& [key, c] : terms_)
    if (fiber_degree_of(key) == k) out.terms_.emplace_hint(out.terms_.end(), key, c);
  return out;
}

FiberPoly FiberPoly::operator-() const {
  FiberPoly out(*this);
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

FiberPoly& FiberPoly::operator+=(const FiberPoly& rhs) {
  model_.require_same(rhs.model_, "polynomial addition");
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

FiberPoly& FiberPoly::operator-=(const FiberPoly& rhs) {
  model_.require_same(rhs.model_, "polynomial subtraction");
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

FiberPoly& FiberPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

FiberPoly operator*(const FiberPoly& a, const FiberPoly& b) {
  a.model_.require_same(b.model_, "polynomial product");
  FiberPoly out(a.model_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

FiberPoly FiberPoly::pow(std::uint32_t exponent) const {
  FiberPoly result = one(model_);
  FiberPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

FiberPoly FiberPoly::partial(Variable v) const {
  return derivative(MultiIndex::unit(model_.variable_count(), key_position(v)));
}

FiberPoly FiberPoly::derivative(const MultiIndex& d) const {
  if (d.size() != model_.variable_count())
    throw ModelMismatchError("derivative multi-index length does not match the bundle model");
  FiberPoly out(model_);
  for (const auto& [key, c] : terms_) {
    if (!d.divides(key)) continue;
    Rational factor = c;
    for (std::size_t i = 0; i < d.size(); ++i) factor *= falling_factorial(key[i], d[i]);
    out.add_term(key - d, factor);
  }
  return out;
}

FiberPoly FiberPoly::integrate(Variable v) const {
  const auto pos = key_position(v);
  FiberPoly out(model_);
  for (const auto& [key, c] : terms_) {
    MultiIndex raised = key;
    raised[pos] += 1;
    out.add_term(raised, c / Rational(static_cast<long>(raised[pos])));
  }
  return out;
}

Rational FiberPoly::eval(const Point& at) const {
  if (at.base.size() != model_.m() || at.fiber.size() != model_.n())
    throw ModelMismatchError("evaluation point dimension does not match the bundle model");
  Rational sum;
  for (const auto& [key, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < key.size(); ++i) {
      const Rational& coord = i < model_.m() ? at.base[i] : at.fiber[i - model_.m()];
      for (std::uint32_t e = 0; e < key[i]; ++e) term *= coord;
    }
    sum += term;
  }
  return sum;
}

FiberPoly FiberPoly::substitute(std::span<const FiberPoly> images) const {
  if (images.size() != model_.variable_count())
    throw ModelMismatchError("substitution needs one image per generator");
  const BundleModel target = images.front().model();
  for (const auto& img : images) target.require_same(img.model(), "substitution images");

  // powers[i][e] = images[i]^e, grown on demand.
  std::vector<std::vector<FiberPoly>> powers(images.size());
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const FiberPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(FiberPoly::one(target));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  FiberPoly out(target);
  for (const auto& [key, c] : terms_) {
    FiberPoly term = FiberPoly::constant(target, c);
    for (std::size_t i = 0; i < key.size(); ++i)
      if (key[i] > 0) term = term * power_of(i, key[i]);
    out += term;
  }
  return out;
}

std::string FiberPoly::to_string() const {
  return detail::render_polynomial(terms_, function_variable_names(model_));
}

FiberPoly poly_mul(const FiberPoly& u, const FiberPoly& v) { return u * v; }

FiberPoly poly_partial(const FiberPoly& u, Variable v) { return u.partial(v); }

Rational poly_eval(const FiberPoly& u, const Point& at) { return u.eval(at); }

std::map<EulerWeight, FiberPoly> weight_split(const FiberPoly& u) {
  std::map<EulerWeight, FiberPoly> parts;
  for (const auto& [key, c] : u.terms()) {
    const EulerWeight w{u.fiber_degree_of(key)};
    parts.try_emplace(w, u.model()).first->second.add_term(key, c);
  }
  return parts;
}

}  // namespace eulerops
