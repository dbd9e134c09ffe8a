#include "eulerops/diff_op.hpp"

#include <algorithm>

#include "eulerops/errors.hpp"
#include "poly_text.hpp"

namespace eulerops {

std::vector<std::string> derivative_names(const BundleModel& model) {
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= model.m(); ++i) names.push_back("d/dx" + std::to_string(i));
  for (std::uint32_t j = 1; j <= model.n(); ++j) names.push_back("d/dxi" + std::to_string(j));
  return names;
}

DiffOp DiffOp::identity(BundleModel model) { return multiplication_operator(FiberPoly::one(model)); }

DiffOp DiffOp::derivative(BundleModel model, Variable v) {
  // FiberPoly::variable validates the index and yields the unit key.
  const FiberPoly marker = FiberPoly::variable(model, v);
  return term(marker.terms().begin()->first, FiberPoly::one(model));
}

DiffOp DiffOp::term(const MultiIndex& key, const FiberPoly& coeff) {
  DiffOp op(coeff.model());
  op.add_term(key, coeff);
  return op;
}

void DiffOp::add_term(const MultiIndex& key, const FiberPoly& coeff) {
  model_.require_same(coeff.model(), "operator term");
  if (key.size() != model_.variable_count())
    throw ModelMismatchError("derivative multi-index length does not match the bundle model");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FiberPoly DiffOp::coefficient(const MultiIndex& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? FiberPoly(model_) : it->second;
}

std::optional<std::uint32_t> DiffOp::order() const {
  if (is_zero()) return std::nullopt;
  return terms_.begin()->first.total();
}

DiffOp DiffOp::operator-() const {
  DiffOp out(*this);
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
  model_.require_same(rhs.model_, "operator addition");
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& rhs) {
  model_.require_same(rhs.model_, "operator subtraction");
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

std::string DiffOp::to_string() const {
  if (is_zero()) return "0";
  const auto names = derivative_names(model_);
  std::string out;
  for (const auto& [key, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string derivs = detail::render_monomial(key, names);
    if (derivs.empty()) {
      out += coeff.to_string();
    } else if (coeff == FiberPoly::one(model_)) {
      out += derivs;
    } else if (coeff.term_count() > 1) {
      out += '(' + coeff.to_string() + ")*" + derivs;
    } else {
      out += coeff.to_string() + '*' + derivs;
    }
  }
  return out;
}

FiberPoly apply(const DiffOp& op, const FiberPoly& u) {
  op.model().require_same(u.model(), "apply");
  FiberPoly out(u.model());
  for (const auto& [key, coeff] : op.terms()) out += coeff * u.derivative(key);
  return out;
}

DiffOp compose(const DiffOp& d, const DiffOp& t) {
  d.model().require_same(t.model(), "compose");
  DiffOp out(d.model());
  // d^g o (b d^h) = sum_{e <= g} C(g, e) (d^e b) d^{g - e + h}
  for (const auto& [g, a] : d.terms()) {
    for (const auto& [h, b] : t.terms()) {
      for_each_sub_index(g, [&](const MultiIndex& e) {
        FiberPoly db = b.derivative(e);
        if (db.is_zero()) return;
        Rational weight(1);
        for (std::size_t i = 0; i < e.size(); ++i) weight *= binomial(g[i], e[i]);
        out.add_term(g - e + h, (a * db) * weight);
      });
    }
  }
  return out;
}

DiffOp bracket(const DiffOp& d, const DiffOp& t) { return compose(d, t) - compose(t, d); }

DiffOp euler_field(const BundleModel& model) {
  DiffOp e(model);
  for (std::uint32_t j = 0; j < model.n(); ++j) {
    const FiberPoly xi = FiberPoly::fiber_var(model, j);
    e.add_term(xi.terms().begin()->first, xi);
  }
  return e;
}

DiffOp lie_derivative(const DiffOp& op) { return bracket(euler_field(op.model()), op); }

std::map<EulerWeight, DiffOp> weight_decompose(const DiffOp& op) {
  std::map<EulerWeight, DiffOp> parts;
  const BundleModel& model = op.model();
  for (const auto& [key, coeff] : op.terms()) {
    const std::int64_t beta_order = key.total(model.m(), model.n());
    for (const auto& [mono, c] : coeff.terms()) {
      const EulerWeight w{static_cast<std::int64_t>(coeff.fiber_degree_of(mono)) - beta_order};
      FiberPoly piece(model);
      piece.add_term(mono, c);
      parts.try_emplace(w, model).first->second.add_term(key, piece);
    }
  }
  return parts;
}

std::optional<std::uint32_t> order(const DiffOp& op) { return op.order(); }

DiffOp multiplication_operator(const FiberPoly& u) {
  return DiffOp::term(MultiIndex(u.model().variable_count()), u);
}

std::optional<EulerWeight> is_homogeneous(const DiffOp& op) {
  const auto parts = weight_decompose(op);
  if (parts.size() != 1) return std::nullopt;
  return parts.begin()->first;
}

}  // namespace eulerops
