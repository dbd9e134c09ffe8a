#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "eulerops/diff_op.hpp"
#include "eulerops/errors.hpp"
#include "eulerops/json_io.hpp"
#include "eulerops/parser.hpp"
#include "eulerops/structure.hpp"
#include "eulerops/suites.hpp"
#include "eulerops/symbol_poly.hpp"

namespace eulerops::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::uint32_t m = 2;
  std::uint32_t n = 2;
  std::string format = "text";
  std::uint64_t seed = 42;
  std::uint32_t degree_bound = kDefaultDegreeBound;
  std::uint32_t cases = 200;
  bool timing = false;

  bool json() const { return format == "json"; }
};

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::size_t generator_slot(const BundleModel& model, Variable v) {
  return v.kind == VarKind::base ? v.index : model.m() + v.index;
}

// Generator images from "g = expr" assignments; unassigned generators keep
// their defaults.
std::vector<FiberPoly> read_images(const BundleModel& model, const std::vector<std::string>& assignments,
                                   std::vector<FiberPoly> images) {
  for (const auto& a : assignments) {
    auto [var, image] = parse_assignment(a, model);
    images[generator_slot(model, var)] = std::move(image);
  }
  return images;
}

std::vector<FiberPoly> identity_images(const BundleModel& model) {
  std::vector<FiberPoly> images;
  for (std::uint32_t i = 0; i < model.m(); ++i) images.push_back(FiberPoly::base_var(model, i));
  for (std::uint32_t j = 0; j < model.n(); ++j) images.push_back(FiberPoly::fiber_var(model, j));
  return images;
}

AlgebraMorphism morphism_from(const BundleModel& model, const std::vector<std::string>& assignments) {
  auto images = read_images(model, assignments, identity_images(model));
  return AlgebraMorphism(model, {images.begin(), images.begin() + model.m()},
                         {images.begin() + model.m(), images.end()});
}

json morphism_json(const AlgebraMorphism& psi) {
  const auto names = function_variable_names(psi.model());
  const auto images = psi.images();
  json doc = {{"kind", "morphism"},
              {"model", {{"m", psi.model().m()}, {"n", psi.model().n()}}},
              {"text", psi.to_string()}};
  json obj = json::object();
  for (std::size_t g = 0; g < images.size(); ++g) obj[names[g]] = to_json(images[g]);
  doc["images"] = obj;
  return doc;
}

// Point from "x1=1/2" style assignments; unassigned coordinates are 0.
Point point_from(const BundleModel& model, const std::vector<std::string>& assignments) {
  Point p{std::vector<Rational>(model.m()), std::vector<Rational>(model.n())};
  for (const auto& a : assignments) {
    auto [var, value] = parse_assignment(a, model);
    if (!value.is_constant())
      throw ParseError(a.find('=') + 1, "point coordinates must be rational constants");
    const Rational c = value.coefficient(MultiIndex(model.variable_count()));
    (var.kind == VarKind::base ? p.base : p.fiber)[var.index] = c;
  }
  return p;
}

int report_suites(const std::vector<suites::SuiteReport>& reports, const Globals& g, std::ostream& out) {
  const bool all_passed =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  constexpr std::size_t kShownFailures = 5;
  if (g.json()) {
    json arr = json::array();
    for (const auto& r : reports) {
      json failures = json::array();
      for (const auto& f : r.failures)
        failures.push_back({{"check", f.check}, {"input", f.input}, {"expected", f.expected},
                            {"actual", f.actual}});
      json entry = {{"name", r.name}, {"title", r.title}, {"cases", r.cases_run},
                    {"passed", r.passed()}, {"failures", failures}};
      if (g.timing) entry["wallSeconds"] = r.wall_seconds;
      arr.push_back(entry);
    }
    print_json(out, {{"kind", "suite-report"}, {"seed", g.seed}, {"passed", all_passed}, {"suites", arr}});
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases_run << " cases";
      if (!r.passed()) out << ", " << r.failures.size() << " failures";
      if (g.timing) out << " (" << std::fixed << std::setprecision(3) << r.wall_seconds << " s)";
      out << '\n';
      for (std::size_t k = 0; k < std::min(kShownFailures, r.failures.size()); ++k) {
        const auto& f = r.failures[k];
        out << "  check:    " << f.check << "\n  input:    " << f.input
            << "\n  expected: " << f.expected << "\n  actual:   " << f.actual << '\n';
      }
    }
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    out << passed << '/' << reports.size() << " suites passed (seed " << g.seed << ")\n";
  }
  return all_passed ? kSuccess : kVerificationFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra of Euler-homogeneous differential operators on a vector bundle",
               "eulerops"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--m", g.m, "base dimension")->check(CLI::Range(1, 64));
  app.add_option("--n", g.n, "fiber rank")->check(CLI::Range(1, 64));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized suites")->envname("EULEROPS_SEED");
  app.add_option("--degree-bound", g.degree_bound, "x-degree bound for filtration checks");
  app.add_option("--cases", g.cases, "base case count for check suites")->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "report wall time per suite");

  // Each subcommand stores its action; it runs after a successful parse.
  std::function<int()> action;
  std::vector<std::string> operands;
  auto model = [&] { return BundleModel(g.m, g.n); };

  auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a function");
  apply_cmd->add_option("inputs", operands, "OPERATOR FUNCTION")->required()->expected(2);
  apply_cmd->callback([&] {
    action = [&] {
      const auto md = model();
      const FiberPoly r = apply(parse_operator(operands[0], md), parse_function(operands[1], md));
      g.json() ? print_json(out, to_json(r)) : void(out << r << '\n');
      return kSuccess;
    };
  });

  auto binary_op = [&](const char* name, const char* help, DiffOp (*fn)(const DiffOp&, const DiffOp&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("operators", operands, "OPERATOR OPERATOR")->required()->expected(2);
    cmd->callback([&, fn] {
      action = [&, fn] {
        const auto md = model();
        const DiffOp r = fn(parse_operator(operands[0], md), parse_operator(operands[1], md));
        g.json() ? print_json(out, to_json(r)) : void(out << r << '\n');
        return kSuccess;
      };
    });
  };
  binary_op("compose", "normal-ordered product D o T", &compose);
  binary_op("bracket", "commutator [D, T]", &bracket);

  auto* weights_cmd = app.add_subcommand("weights", "split an operator into Euler-weight components");
  weights_cmd->add_option("operator", operands, "OPERATOR")->required()->expected(1);
  weights_cmd->callback([&] {
    action = [&] {
      const auto parts = weight_decompose(parse_operator(operands[0], model()));
      if (g.json()) {
        json arr = json::array();
        for (const auto& [w, op] : parts) arr.push_back({{"weight", w.value}, {"operator", to_json(op)}});
        print_json(out, {{"kind", "weights"}, {"components", arr}});
      } else {
        out << '{';
        bool first = true;
        for (const auto& [w, op] : parts) {
          out << (first ? "" : ", ") << w.value << ": " << op;
          first = false;
        }
        out << "}\n";
      }
      return kSuccess;
    };
  });

  auto* symbol_cmd = app.add_subcommand("symbol", "principal symbol of an operator");
  symbol_cmd->add_option("operator", operands, "OPERATOR")->required()->expected(1);
  symbol_cmd->callback([&] {
    action = [&] {
      const SymbolPoly s = principal_symbol(parse_operator(operands[0], model()));
      g.json() ? print_json(out, to_json(s)) : void(out << s << '\n');
      return kSuccess;
    };
  });

  auto* poisson_cmd = app.add_subcommand("poisson", "canonical Poisson bracket of two symbols");
  poisson_cmd->add_option("symbols", operands, "SYMBOL SYMBOL")->required()->expected(2);
  poisson_cmd->callback([&] {
    action = [&] {
      const auto md = model();
      const SymbolPoly s = poisson_bracket(parse_symbol(operands[0], md), parse_symbol(operands[1], md));
      g.json() ? print_json(out, to_json(s)) : void(out << s << '\n');
      return kSuccess;
    };
  });

  std::vector<std::string> at;
  std::uint32_t jet_order = 0;
  auto* jet_cmd = app.add_subcommand("jet-factor", "factor a function whose l-jet vanishes at a point");
  jet_cmd->add_option("function", operands, "FUNCTION")->required()->expected(1);
  jet_cmd->add_option("--at", at, "point coordinates, e.g. x1=1 xi1=0 (default 0)");
  jet_cmd->add_option("--order", jet_order, "jet order l")->required();
  jet_cmd->callback([&] {
    action = [&] {
      const auto md = model();
      const JetSpec spec{point_from(md, at), jet_order};
      const auto tuples = jet_factorize(parse_function(operands[0], md), spec);
      if (g.json()) {
        json arr = json::array();
        for (const auto& tuple : tuples) {
          json factors = json::array();
          for (const auto& f : tuple) factors.push_back(to_json(f));
          arr.push_back(factors);
        }
        print_json(out, {{"kind", "jet-factorization"}, {"order", jet_order}, {"tuples", arr}});
      } else {
        for (const auto& tuple : tuples) {
          out << '[';
          for (std::size_t k = 0; k < tuple.size(); ++k) out << (k ? ", " : "") << tuple[k];
          out << "]\n";
        }
      }
      return kSuccess;
    };
  });

  auto* extend_cmd = app.add_subcommand("extend-derivation",
                                        "first-order operator extending generator images, e.g. xi1=x1*xi2");
  extend_cmd->add_option("images", operands, "GENERATOR=FUNCTION ...");
  extend_cmd->callback([&] {
    action = [&] {
      const auto md = model();
      const auto images = read_images(md, operands, std::vector<FiberPoly>(md.variable_count(), FiberPoly(md)));
      const Derivation d{md, {images.begin(), images.begin() + md.m()}, {images.begin() + md.m(), images.end()}};
      const DiffOp r = extend_derivation(d);
      g.json() ? print_json(out, to_json(r)) : void(out << r << '\n');
      return kSuccess;
    };
  });

  auto* witness_cmd = app.add_subcommand("witness-nonsingular",
                                         "write u as a sum of commutators [D_i, gamma_{v_i}]");
  witness_cmd->add_option("function", operands, "FUNCTION")->required()->expected(1);
  witness_cmd->callback([&] {
    action = [&] {
      const auto cert = non_singularity_witness(parse_function(operands[0], model()));
      const bool verified = cert.verify();
      if (g.json()) {
        json arr = json::array();
        for (const auto& [op, v] : cert.entries) arr.push_back({{"operator", to_json(op)}, {"function", to_json(v)}});
        print_json(out, {{"kind", "certificate"}, {"target", to_json(cert.target)}, {"entries", arr},
                         {"verified", verified}});
      } else {
        for (const auto& [op, v] : cert.entries) out << '[' << op << ", " << v << "]\n";
        out << "verified: " << (verified ? "true" : "false") << '\n';
      }
      return verified ? kSuccess : kVerificationFailure;
    };
  });

  std::vector<std::string> inverse;
  auto* graded_cmd = app.add_subcommand("graded-part", "graded part of an invertible substitution morphism");
  graded_cmd->add_option("images", operands, "GENERATOR=FUNCTION ... (unassigned generators are fixed)");
  graded_cmd->add_option("--inverse", inverse, "images of the inverse morphism")->required();
  graded_cmd->callback([&] {
    action = [&] {
      const auto md = model();
      const AlgebraMorphism psi = morphism_from(md, operands).with_inverse(morphism_from(md, inverse));
      const AlgebraMorphism graded = graded_part(psi, g.degree_bound);
      g.json() ? print_json(out, morphism_json(graded)) : void(out << graded.to_string() << '\n');
      return kSuccess;
    };
  });

  std::string suite_name;
  auto* check_cmd = app.add_subcommand("check", "run a verification suite");
  std::vector<std::string> names{"all"};
  for (const auto& s : suites::registry()) names.push_back(s.name);
  check_cmd->add_option("suite", suite_name, "suite name or 'all'")->required()->check(CLI::IsMember(names));
  check_cmd->callback([&] {
    action = [&] {
      suites::SuiteConfig config;
      config.seed = g.seed;
      config.cases = g.cases;
      config.model = model();
      config.degree_bound = g.degree_bound;
      std::vector<suites::SuiteReport> reports;
      if (suite_name == "all") {
        for (const auto& s : suites::registry()) reports.push_back(s.run(config));
      } else {
        reports.push_back(suites::run_suite(suite_name, config));
      }
      return report_suites(reports, g, out);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const eulerops::Error& e) {
    err << "error[" << e.name() << "]: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace eulerops::cli
