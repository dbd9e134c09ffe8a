#include "eulerops/symbol_poly.hpp"

#include <algorithm>

#include "eulerops/errors.hpp"
#include "poly_text.hpp"

namespace eulerops {

std::vector<std::string> symbol_variable_names(const BundleModel& model) {
  std::vector<std::string> names = function_variable_names(model);
  for (std::uint32_t i = 1; i <= model.m(); ++i) names.push_back("p" + std::to_string(i));
  for (std::uint32_t j = 1; j <= model.n(); ++j) names.push_back("th" + std::to_string(j));
  return names;
}

std::size_t SymbolPoly::key_position(SymbolVar v) const {
  const std::uint32_t m = model_.m();
  const std::uint32_t n = model_.n();
  const bool on_base = v.kind == SymbolVarKind::x || v.kind == SymbolVarKind::p;
  const std::uint32_t limit = on_base ? m : n;
  if (v.index >= limit)
    throw IndexError("symbol variable index " + std::to_string(v.index + 1) +
                     " out of range 1.." + std::to_string(limit));
  switch (v.kind) {
    case SymbolVarKind::x: return v.index;
    case SymbolVarKind::xi: return m + v.index;
    case SymbolVarKind::p: return m + n + v.index;
    case SymbolVarKind::theta: return 2 * m + n + v.index;
  }
  return 0;
}

SymbolPoly SymbolPoly::constant(BundleModel model, const Rational& c) {
  SymbolPoly s(model);
  s.add_term(MultiIndex(2 * model.variable_count()), c);
  return s;
}

SymbolPoly SymbolPoly::variable(BundleModel model, SymbolVar v) {
  SymbolPoly s(model);
  s.add_term(MultiIndex::unit(2 * model.variable_count(), s.key_position(v)), Rational(1));
  return s;
}

SymbolPoly SymbolPoly::from_function(const FiberPoly& u) {
  SymbolPoly s(u.model());
  const MultiIndex no_momenta(u.model().variable_count());
  for (const auto& [key, c] : u.terms()) s.add_term(key.concat(no_momenta), c);
  return s;
}

void SymbolPoly::add_term(const MultiIndex& key, const Rational& coeff) {
  if (key.size() != 2 * model_.variable_count())
    throw ModelMismatchError("symbol term key length does not match the bundle model");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool SymbolPoly::has_momenta() const {
  const std::size_t half = model_.variable_count();
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.total(half, half) > 0; });
}

std::optional<std::uint32_t> SymbolPoly::symbol_degree() const {
  if (is_zero()) return std::nullopt;
  const std::size_t half = model_.variable_count();
  std::uint32_t best = 0;
  for (const auto& [key, c] : terms_) best = std::max(best, key.total(half, half));
  return best;
}

FiberPoly SymbolPoly::to_function() const {
  if (has_momenta())
    throw NotAFunctionError("symbol '" + to_string() + "' depends on momenta");
  FiberPoly u(model_);
  for (const auto& [key, c] : terms_) u.add_term(key.slice(0, model_.variable_count()), c);
  return u;
}

SymbolPoly SymbolPoly::partial(SymbolVar v) const {
  const std::size_t pos = key_position(v);
  SymbolPoly out(model_);
  for (const auto& [key, c] : terms_) {
    if (key[pos] == 0) continue;
    MultiIndex lowered = key;
    lowered[pos] -= 1;
    out.add_term(lowered, c * Rational(static_cast<long>(key[pos])));
  }
  return out;
}

SymbolPoly SymbolPoly::operator-() const {
  SymbolPoly out(*this);
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& rhs) {
  model_.require_same(rhs.model_, "symbol addition");
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& rhs) {
  model_.require_same(rhs.model_, "symbol subtraction");
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

SymbolPoly& SymbolPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
  a.model_.require_same(b.model_, "symbol product");
  SymbolPoly out(a.model_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

std::string SymbolPoly::to_string() const {
  return detail::render_polynomial(terms_, symbol_variable_names(model_));
}

SymbolPoly principal_symbol(const DiffOp& op) {
  const auto top = op.order();
  if (!top) throw UndefinedSymbolError("the zero operator has no principal symbol");
  SymbolPoly sigma(op.model());
  for (const auto& [key, coeff] : op.terms()) {
    if (key.total() != *top) continue;
    for (const auto& [mono, c] : coeff.terms()) sigma.add_term(mono.concat(key), c);
  }
  return sigma;
}

SymbolPoly symbol_mul(const SymbolPoly& a, const SymbolPoly& b) { return a * b; }

SymbolPoly poisson_bracket(const SymbolPoly& a, const SymbolPoly& b) {
  a.model().require_same(b.model(), "poisson bracket");
  const BundleModel& model = a.model();
  SymbolPoly out(model);
  for (std::uint32_t i = 0; i < model.m(); ++i) {
    const SymbolVar x{SymbolVarKind::x, i};
    const SymbolVar p{SymbolVarKind::p, i};
    out += a.partial(p) * b.partial(x);
    out -= a.partial(x) * b.partial(p);
  }
  for (std::uint32_t j = 0; j < model.n(); ++j) {
    const SymbolVar xi{SymbolVarKind::xi, j};
    const SymbolVar th{SymbolVarKind::theta, j};
    out += a.partial(th) * b.partial(xi);
    out -= a.partial(xi) * b.partial(th);
  }
  return out;
}

FiberPoly hamiltonian_action(const SymbolPoly& p, const FiberPoly& u, std::uint32_t iterations) {
  p.model().require_same(u.model(), "hamiltonian action");
  SymbolPoly current = SymbolPoly::from_function(u);
  for (std::uint32_t k = 0; k < iterations; ++k) {
    current = poisson_bracket(p, current);
    if (current.has_momenta())
      throw NotAFunctionError("iteration " + std::to_string(k + 1) +
                              " of the hamiltonian action left the function algebra: " +
                              current.to_string());
  }
  return current.to_function();
}

std::optional<FiberPoly> distinguishing_witness(const SymbolPoly& p) {
  if (!p.has_momenta()) return std::nullopt;
  const BundleModel& model = p.model();
  for (std::uint32_t i = 0; i < model.m(); ++i) {
    // {P, x^i} = dP/dp_i
    if (!p.partial({SymbolVarKind::p, i}).is_zero()) return FiberPoly::base_var(model, i);
  }
  for (std::uint32_t j = 0; j < model.n(); ++j) {
    // {P, xi_j} = dP/dtheta_j
    if (!p.partial({SymbolVarKind::theta, j}).is_zero()) return FiberPoly::fiber_var(model, j);
  }
  return std::nullopt;  // unreachable: some momentum occurs
}

}  // namespace eulerops
