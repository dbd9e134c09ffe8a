#include "eulerops/json_io.hpp"

#include "eulerops/errors.hpp"
#include "eulerops/parser.hpp"

namespace eulerops {

namespace {

using nlohmann::json;

json model_json(const BundleModel& model) { return {{"m", model.m()}, {"n", model.n()}}; }

json exps(const MultiIndex& key, std::size_t first, std::size_t count) {
  json arr = json::array();
  for (std::size_t i = first; i < first + count; ++i) arr.push_back(key[i]);
  return arr;
}

BundleModel read_model(const json& doc, const char* kind) {
  if (!doc.is_object() || doc.value("kind", "") != kind)
    throw ParseError(0, std::string("expected a JSON document of kind '") + kind + "'");
  try {
    return BundleModel(doc.at("model").at("m").get<std::uint32_t>(),
                       doc.at("model").at("n").get<std::uint32_t>());
  } catch (const json::exception& ex) {
    throw ParseError(0, ex.what());
  }
}

// Concatenates exponent arrays, checking each length.
MultiIndex read_key(const json& term, std::initializer_list<std::pair<const char*, std::size_t>> parts) {
  std::vector<std::uint32_t> all;
  for (const auto& [name, length] : parts) {
    const auto arr = term.at(name).get<std::vector<std::uint32_t>>();
    if (arr.size() != length)
      throw ModelMismatchError(std::string("term field '") + name + "' has the wrong length");
    all.insert(all.end(), arr.begin(), arr.end());
  }
  return MultiIndex(std::move(all));
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& ex) {
    throw ParseError(0, ex.what());
  } catch (const std::logic_error& ex) {
    // malformed or zero-denominator rational literals
    throw ParseError(0, ex.what());
  }
}

}  // namespace

json to_json(const FiberPoly& u) {
  const auto& model = u.model();
  json terms = json::array();
  for (const auto& [key, c] : u.terms()) {
    terms.push_back({{"baseExp", exps(key, 0, model.m())},
                     {"fiberExp", exps(key, model.m(), model.n())},
                     {"coeff", c.to_string()}});
  }
  return {{"kind", "function"}, {"model", model_json(model)}, {"text", u.to_string()},
          {"terms", terms}};
}

json to_json(const DiffOp& op) {
  const auto& model = op.model();
  json terms = json::array();
  for (const auto& [key, coeff] : op.terms()) {
    terms.push_back({{"alpha", exps(key, 0, model.m())},
                     {"beta", exps(key, model.m(), model.n())},
                     {"coeff", coeff.to_string()}});
  }
  return {{"kind", "operator"}, {"model", model_json(model)}, {"text", op.to_string()},
          {"terms", terms}};
}

json to_json(const SymbolPoly& s) {
  const auto& model = s.model();
  const std::size_t m = model.m();
  const std::size_t n = model.n();
  json terms = json::array();
  for (const auto& [key, c] : s.terms()) {
    terms.push_back({{"xExp", exps(key, 0, m)},
                     {"xiExp", exps(key, m, n)},
                     {"pExp", exps(key, m + n, m)},
                     {"thetaExp", exps(key, 2 * m + n, n)},
                     {"coeff", c.to_string()}});
  }
  return {{"kind", "symbol"}, {"model", model_json(model)}, {"text", s.to_string()},
          {"terms", terms}};
}

FiberPoly function_from_json(const json& doc) {
  const BundleModel model = read_model(doc, "function");
  return guarded([&] {
    FiberPoly u(model);
    for (const auto& term : doc.at("terms")) {
      u.add_term(read_key(term, {{"baseExp", model.m()}, {"fiberExp", model.n()}}),
                 Rational::parse(term.at("coeff").get<std::string>()));
    }
    return u;
  });
}

DiffOp operator_from_json(const json& doc) {
  const BundleModel model = read_model(doc, "operator");
  return guarded([&] {
    DiffOp op(model);
    for (const auto& term : doc.at("terms")) {
      op.add_term(read_key(term, {{"alpha", model.m()}, {"beta", model.n()}}),
                  parse_function(term.at("coeff").get<std::string>(), model));
    }
    return op;
  });
}

SymbolPoly symbol_from_json(const json& doc) {
  const BundleModel model = read_model(doc, "symbol");
  return guarded([&] {
    SymbolPoly s(model);
    for (const auto& term : doc.at("terms")) {
      s.add_term(read_key(term, {{"xExp", model.m()},
                                 {"xiExp", model.n()},
                                 {"pExp", model.m()},
                                 {"thetaExp", model.n()}}),
                 Rational::parse(term.at("coeff").get<std::string>()));
    }
    return s;
  });
}

}  // namespace eulerops
