#include "eulerops/suites.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>

#include "eulerops/diff_op.hpp"
#include "eulerops/errors.hpp"
#include "eulerops/parser.hpp"
#include "eulerops/random.hpp"
#include "eulerops/symbol_poly.hpp"

namespace eulerops::suites {

namespace {

std::string show(const FiberPoly& v) { return v.to_string(); }
std::string show(const DiffOp& v) { return v.to_string(); }
std::string show(const SymbolPoly& v) { return v.to_string(); }
std::string show(const Rational& v) { return v.to_string(); }
std::string show(bool v) { return v ? "true" : "false"; }
std::string show(std::int64_t v) { return std::to_string(v); }
std::string show(const std::optional<EulerWeight>& w) {
  return w ? std::to_string(w->value) : "none";
}
std::string show(const std::optional<std::uint32_t>& o) { return o ? std::to_string(*o) : "none"; }

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  // Runs one case; an escaping exception is recorded as a failure.
  template <typename F>
  void run_case(const std::string& input, F&& body) {
    ++report_.cases_run;
    input_ = input;
    try {
      body();
    } catch (const std::exception& ex) {
      report_.failures.push_back({"no exception", input_, "success", ex.what()});
    }
  }

  template <typename A, typename B>
  void equal(const char* check, const A& expected, const B& actual) {
    if (!(expected == actual)) report_.failures.push_back({check, input_, show(expected), show(actual)});
  }

  void truth(const char* check, bool ok) {
    if (!ok) report_.failures.push_back({check, input_, "true", "false"});
  }

 private:
  SuiteReport& report_;
  std::string input_;
};

// Runs `body` and measures wall time.
SuiteReport timed(const std::string& name, const std::string& title,
                  const std::function<void(Recorder&)>& body) {
  SuiteReport report{name, title, 0, {}, 0.0};
  Recorder rec(report);
  const auto start = std::chrono::steady_clock::now();
  body(rec);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer, so every suite draws from its own stream.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<FiberPoly> monomials_up_to(const BundleModel& model, std::uint32_t max_total) {
  std::vector<FiberPoly> out;
  for_each_index_up_to(model.variable_count(), max_total, [&](const MultiIndex& key) {
    FiberPoly u(model);
    u.add_term(key, Rational(1));
    out.push_back(std::move(u));
  });
  return out;
}

std::vector<FiberPoly> generator_list(const BundleModel& model) {
  std::vector<FiberPoly> gens;
  for (std::uint32_t i = 0; i < model.m(); ++i) gens.push_back(FiberPoly::base_var(model, i));
  for (std::uint32_t j = 0; j < model.n(); ++j) gens.push_back(FiberPoly::fiber_var(model, j));
  return gens;
}

std::string pair_text(const DiffOp& d, const DiffOp& t) {
  return "D = " + d.to_string() + "; T = " + t.to_string();
}

// ---------------------------------------------------------------------------

SuiteReport grading(const SuiteConfig& cfg) {
  return timed("grading", "bracket weights add; composition and bracket respect the filtration",
               [&](Recorder& rec) {
    RandomSource rng(mix(cfg.seed, 1));
    const auto& model = cfg.model;
    const auto w_lo = -static_cast<std::int64_t>(std::min<std::uint32_t>(cfg.max_order, 2));
    const auto w_hi = static_cast<std::int64_t>(std::min<std::uint32_t>(cfg.coeff_degree, 2));
    for (std::uint32_t c = 0; c < cfg.cases; ++c) {
      const auto lambda = rng.integer(w_lo, w_hi);
      const auto mu = rng.integer(w_lo, w_hi);
      const DiffOp t1 = rng.homogeneous_op(model, lambda, cfg.max_order, cfg.coeff_degree, 3);
      const DiffOp t2 = rng.homogeneous_op(model, mu, cfg.max_order, cfg.coeff_degree, 3);
      rec.run_case(pair_text(t1, t2), [&] {
        rec.equal("weight of T1", std::optional<EulerWeight>(EulerWeight{lambda}), is_homogeneous(t1));
        rec.equal("weight of T2", std::optional<EulerWeight>(EulerWeight{mu}), is_homogeneous(t2));
        const DiffOp b = bracket(t1, t2);
        if (!b.is_zero())
          rec.equal("weight of [T1,T2]", std::optional<EulerWeight>(EulerWeight{lambda + mu}),
                    is_homogeneous(b));
      });
    }
    for (std::uint32_t c = 0; c < cfg.cases; ++c) {
      const DiffOp d = rng.op(model, cfg.max_order, cfg.coeff_degree, 4);
      const DiffOp t = rng.op(model, cfg.max_order, cfg.coeff_degree, 4);
      rec.run_case(pair_text(d, t), [&] {
        const std::uint32_t k = *d.order() + *t.order();
        rec.equal("ord(DT)", std::optional<std::uint32_t>(k), compose(d, t).order());
        const auto ob = bracket(d, t).order();
        rec.truth("ord([D,T]) <= ord(D)+ord(T)-1", !ob || (k >= 1 && *ob <= k - 1));
      });
    }
  });
}

SuiteReport weight_law(const SuiteConfig& cfg) {
  return timed("weight-law", "weight components are L_E-eigenvectors with xi-homogeneous coefficients",
               [&](Recorder& rec) {
    RandomSource rng(mix(cfg.seed, 2));
    const auto& model = cfg.model;
    const DiffOp euler = euler_field(model);
    for (std::uint32_t c = 0; c < cfg.cases; ++c) {
      const DiffOp t = rng.op(model, cfg.max_order, cfg.coeff_degree, 5);
      rec.run_case("T = " + t.to_string(), [&] {
        const auto parts = weight_decompose(t);
        DiffOp sum(model);
        for (const auto& [w, part] : parts) {
          sum += part;
          rec.equal("[E, T_w] = w T_w", part * Rational(static_cast<long>(w.value)),
                    bracket(euler, part));
          rec.equal("is_homogeneous(T_w)", std::optional<EulerWeight>(w), is_homogeneous(part));
          for (const auto& [key, coeff] : part.terms()) {
            const std::int64_t beta = key.total(model.m(), model.n());
            rec.equal("coefficient weight = w + |beta|",
                      std::optional<EulerWeight>(EulerWeight{w.value + beta}),
                      coeff.homogeneous_weight());
          }
        }
        rec.equal("components sum to T", t, sum);
        rec.equal("homogeneous iff one component", parts.size() == 1,
                  is_homogeneous(t).has_value());
      });
    }
  });
}

SuiteReport composition(const SuiteConfig& cfg) {
  return timed("composition", "apply(DT, u) = D(T(u)) on every monomial of degree <= 5",
               [&](Recorder& rec) {
    RandomSource rng(mix(cfg.seed, 3));
    const auto& model = cfg.model;
    const auto basis = monomials_up_to(model, 5);
    for (std::uint32_t c = 0; c < cfg.cases / 2; ++c) {
      const DiffOp d = rng.op(model, cfg.max_order, cfg.coeff_degree, 3);
      const DiffOp t = rng.op(model, cfg.max_order, cfg.coeff_degree, 3);
      rec.run_case(pair_text(d, t), [&] {
        const DiffOp dt = compose(d, t);
        for (const auto& u : basis) rec.equal("apply(DT, u)", apply(d, apply(t, u)), apply(dt, u));
      });
    }
  });
}

SuiteReport nonsingular(const SuiteConfig& cfg) {
  return timed("nonsingular", "every u is a sum of commutators [D_i, gamma_{v_i}], D_i in D^1_E",
               [&](Recorder& rec) {
    RandomSource rng(mix(cfg.seed, 4));
    const auto& model = cfg.model;
    const auto probes = monomials_up_to(model, 2);
    for (std::uint32_t c = 0; c < cfg.cases / 2; ++c) {
      FiberPoly u(model);
      switch (c % 5) {
        case 0: u = rng.base_poly(model, cfg.coeff_degree, 3); break;
        case 1: u = FiberPoly::constant(model, rng.rational()); break;
        default: u = rng.poly(model, cfg.coeff_degree, 4); break;
      }
      rec.run_case("u = " + u.to_string(), [&] {
        const auto cert = non_singularity_witness(u);
        rec.truth("certificate verifies", cert.verify());
        DiffOp sum(model);
        for (const auto& [op, v] : cert.entries) {
          sum += bracket(op, multiplication_operator(v));
          for (const auto& [w, part] : weight_decompose(op))
            rec.truth("D_i components have order <= 1", part.order().value_or(0) <= 1);
        }
        rec.equal("sum of commutators", multiplication_operator(u), sum);
        // Extensional check: sum_i D_i(v_i w) - v_i D_i(w) = u w.
        for (const auto& w : probes) {
          FiberPoly lhs(model);
          for (const auto& [op, v] : cert.entries) lhs += apply(op, v * w) - v * apply(op, w);
          rec.equal("commutators applied to a probe", u * w, lhs);
        }
      });
    }
  });
}

SuiteReport classical_limit(const SuiteConfig& cfg) {
  return timed("classical-limit", "symbols multiply; {sigma D, sigma T} = sigma [D,T]; Poisson axioms",
               [&](Recorder& rec) {
    RandomSource rng(mix(cfg.seed, 5));
    const auto& model = cfg.model;
    for (std::uint32_t c = 0; c < cfg.cases; ++c) {
      const DiffOp d = rng.op(model, cfg.max_order, cfg.coeff_degree, 3);
      DiffOp t(model);
      switch (c % 8) {
        // Pairs whose bracket drops further: commuting operators.
        case 0: t = compose(d, d); break;
        case 1: t = d * rng.rational(); break;
        default: t = rng.op(model, cfg.max_order, cfg.coeff_degree, 3); break;
      }
      rec.run_case(pair_text(d, t), [&] {
        const SymbolPoly sd = principal_symbol(d);
        const SymbolPoly st = principal_symbol(t);
        rec.equal("sigma(DT) = sigma(D) sigma(T)", symbol_mul(sd, st), principal_symbol(compose(d, t)));
        const DiffOp b = bracket(d, t);
        const std::uint32_t k = *d.order() + *t.order();
        const SymbolPoly pb = poisson_bracket(sd, st);
        if (!b.is_zero() && k >= 1 && *b.order() == k - 1) {
          rec.equal("sigma([D,T]) = {sigma D, sigma T}", principal_symbol(b), pb);
        } else {
          rec.equal("{sigma D, sigma T} = 0 when the order drops", SymbolPoly(model), pb);
        }
      });
    }
    for (std::uint32_t c = 0; c < cfg.cases; ++c) {
      const SymbolPoly p = rng.symbol(model, 3, 3);
      const SymbolPoly q = rng.symbol(model, 3, 3);
      const SymbolPoly r = rng.symbol(model, 3, 3);
      rec.run_case("P = " + p.to_string() + "; Q = " + q.to_string() + "; R = " + r.to_string(), [&] {
        rec.equal("antisymmetry", -poisson_bracket(q, p), poisson_bracket(p, q));
        rec.equal("Leibniz", poisson_bracket(p, q) * r + q * poisson_bracket(p, r),
                  poisson_bracket(p, q * r));
        const SymbolPoly jacobi = poisson_bracket(p, poisson_bracket(q, r)) +
                                  poisson_bracket(q, poisson_bracket(r, p)) +
                                  poisson_bracket(r, poisson_bracket(p, q));
        rec.equal("Jacobi", SymbolPoly(model), jacobi);
      });
    }
  });
}

SuiteReport distinguishing(const SuiteConfig& cfg) {
  return timed("distinguishing", "quasi-distinguishing witnesses; theta_1 defeats the distinguishing property",
               [&](Recorder& rec) {
    RandomSource rng(mix(cfg.seed, 6));
    const auto& model = cfg.model;
    const std::size_t half = model.variable_count();
    for (std::uint32_t c = 0; c < cfg.cases / 2; ++c) {
      SymbolPoly p = rng.symbol(model, 3, 3);
      if (!p.has_momenta()) {
        MultiIndex key = rng.multi_index(2 * half, 0, 2);
        key[half + static_cast<std::size_t>(rng.integer(0, half - 1))] += 1;
        p.add_term(key, rng.rational());
      }
      rec.run_case("P = " + p.to_string(), [&] {
        const auto witness = distinguishing_witness(p);
        rec.truth("witness present", witness.has_value());
        if (!witness) return;
        const auto gens = generator_list(model);
        rec.truth("witness is a generator",
                  std::find(gens.begin(), gens.end(), *witness) != gens.end());
        rec.truth("{P, witness} != 0",
                  !poisson_bracket(p, SymbolPoly::from_function(*witness)).is_zero());
      });
    }
    for (std::uint32_t c = 0; c < cfg.cases / 10; ++c) {
      const FiberPoly u = rng.poly(model, 3, 3);
      rec.run_case("P = " + u.to_string() + " (momentum-free)", [&] {
        rec.truth("no witness inside A", !distinguishing_witness(SymbolPoly::from_function(u)));
      });
    }

    // The trivial bundle R^2 -> R with P = theta_1, so H_P = d/dxi_1.
    const BundleModel line(1, 1);
    const SymbolPoly theta = SymbolPoly::variable(line, {SymbolVarKind::theta, 0});
    rec.run_case("P = th1 on m = n = 1", [&] { rec.truth("P is not in A", theta.has_momenta()); });
    for (std::uint32_t c = 0; c < cfg.cases / 4; ++c) {
      const FiberPoly u = rng.nonzero_poly(line, 5, 4);
      rec.run_case("P = th1; u = " + u.to_string(), [&] {
        const std::uint32_t d = u.degree_in(Variable::fiber(0));
        rec.equal("(deg + 1)-fold action vanishes", FiberPoly(line), hamiltonian_action(theta, u, d + 1));
        rec.truth("deg-fold action does not", !hamiltonian_action(theta, u, d).is_zero());
      });
    }
  });
}

SuiteReport jets(const SuiteConfig& cfg) {
  return timed("jet", "functions with vanishing l-jet factor into (l+1)-fold products vanishing at a",
               [&](Recorder& rec) {
    RandomSource rng(mix(cfg.seed, 7));
    const auto& model = cfg.model;
    for (std::uint32_t c = 0; c < cfg.cases / 2; ++c) {
      const auto l = static_cast<std::uint32_t>(rng.integer(0, 2));
      const JetSpec spec{rng.point(model), l};
      FiberPoly w = rng.poly(model, l + 3, 4);
      // Guarantee a surviving high-order term.
      w.add_term(rng.multi_index(model.variable_count(), l + 1, l + 2), rng.rational());
      // Remove the Taylor part of order <= l at the point.
      FiberPoly centred = shift_to(w, spec.point);
      FiberPoly high(model);
      for (const auto& [key, coeff] : centred.terms())
        if (key.total() > l) high.add_term(key, coeff);
      const FiberPoly u = shift_from(high, spec.point);
      const bool had_low_part = high != centred;

      std::string input = "u = " + u.to_string() + "; l = " + std::to_string(l) + "; a = (";
      for (const auto& q : spec.point.base) input += q.to_string() + ",";
      for (const auto& q : spec.point.fiber) input += q.to_string() + ",";
      input.back() = ')';

      rec.run_case(input, [&] {
        rec.truth("jet is zero", jet_is_zero(u, spec));
        // Independent check: every derivative of order <= l vanishes at a.
        for_each_index_up_to(model.variable_count(), l, [&](const MultiIndex& key) {
          rec.equal("derivative at a", Rational(0), u.derivative(key).eval(spec.point));
        });
        const auto tuples = jet_factorize(u, spec);
        FiberPoly sum(model);
        for (const auto& tuple : tuples) {
          rec.equal("factor count", static_cast<std::int64_t>(l + 1),
                    static_cast<std::int64_t>(tuple.size()));
          FiberPoly product = FiberPoly::one(model);
          for (const auto& f : tuple) {
            rec.equal("factor vanishes at a", Rational(0), f.eval(spec.point));
            product = product * f;
          }
          sum += product;
        }
        rec.equal("sum of products", u, sum);
        if (had_low_part) {
          rec.truth("low-order part detected", !jet_is_zero(w, spec));
          bool threw = false;
          try {
            (void)jet_factorize(w, spec);
          } catch (const JetNonzeroError&) {
            threw = true;
          }
          rec.truth("jet-nonzero error", threw);
        }
      });
    }
  });
}

std::string derivation_text(const Derivation& d) {
  const auto names = function_variable_names(d.model);
  std::string out = "D: ";
  for (std::uint32_t i = 0; i < d.model.m(); ++i)
    out += names[i] + " -> " + d.base_images[i].to_string() + ", ";
  for (std::uint32_t j = 0; j < d.model.n(); ++j)
    out += names[d.model.m() + j] + " -> " + d.fiber_images[j].to_string() + ", ";
  out.resize(out.size() - 2);
  return out;
}

SuiteReport derivation_extension(const SuiteConfig& cfg) {
  return timed("derivation", "derivations extend uniquely to first-order operators",
               [&](Recorder& rec) {
    RandomSource rng(mix(cfg.seed, 8));
    const auto& model = cfg.model;
    const auto gens = generator_list(model);
    for (std::uint32_t c = 0; c < cfg.cases / 2; ++c) {
      const Derivation d = rng.derivation(model, cfg.coeff_degree);
      const FiberPoly u = rng.poly(model, cfg.coeff_degree, 3);
      const FiberPoly v = rng.poly(model, cfg.coeff_degree, 3);
      rec.run_case(derivation_text(d) + "; u = " + u.to_string() + "; v = " + v.to_string(), [&] {
        const DiffOp ext = extend_derivation(d);
        rec.truth("order <= 1", ext.order().value_or(0) <= 1);
        rec.equal("no order-0 part", FiberPoly(model), ext.coefficient(MultiIndex(model.variable_count())));
        for (std::uint32_t i = 0; i < model.m(); ++i)
          rec.equal("agrees on x^i", d.base_images[i], apply(ext, gens[i]));
        for (std::uint32_t j = 0; j < model.n(); ++j)
          rec.equal("agrees on xi_j", d.fiber_images[j], apply(ext, gens[model.m() + j]));
        rec.equal("Leibniz", apply(ext, u) * v + u * apply(ext, v), apply(ext, u * v));
      });
    }
    // Uniqueness: any first-order operator without order-0 part is the
    // extension of its own values on generators.
    for (std::uint32_t c = 0; c < cfg.cases / 2; ++c) {
      DiffOp r(model);
      while (r.is_zero()) {
        for (std::size_t g = 0; g < model.variable_count(); ++g)
          if (rng.chance(0.6))
            r.add_term(MultiIndex::unit(model.variable_count(), g), rng.poly(model, cfg.coeff_degree, 3));
      }
      rec.run_case("R = " + r.to_string(), [&] {
        Derivation from_r = Derivation::zero(model);
        for (std::uint32_t i = 0; i < model.m(); ++i) from_r.base_images[i] = apply(r, gens[i]);
        for (std::uint32_t j = 0; j < model.n(); ++j)
          from_r.fiber_images[j] = apply(r, gens[model.m() + j]);
        rec.equal("difference of agreeing extensions", DiffOp(model), extend_derivation(from_r) - r);
      });
    }
  });
}

SuiteReport morphisms(const SuiteConfig& cfg) {
  return timed("morphisms", "substitution isomorphisms are filtered and induce graded isomorphisms",
               [&](Recorder& rec) {
    RandomSource rng(mix(cfg.seed, 9));
    const BundleModel model(2, 2);
    const auto corpus = invertible_corpus();
    for (const auto& entry : corpus) {
      const auto& psi = entry.morphism;
      rec.run_case(entry.label + ": " + psi.to_string(), [&] {
        rec.truth("is_filtered", is_filtered(psi, 4, cfg.degree_bound));
        rec.truth("inverse is_filtered", is_filtered(*psi.inverse(), 4, cfg.degree_bound));
        rec.truth("preserves_degree_zero", preserves_degree_zero(psi, cfg.degree_bound));
        rec.truth("inverse preserves_degree_zero", preserves_degree_zero(*psi.inverse(), cfg.degree_bound));
        const AlgebraMorphism graded = graded_part(psi, cfg.degree_bound);
        for (const auto& img : graded.base_images())
          rec.equal("graded base image has weight 0", std::optional<EulerWeight>(EulerWeight{0}),
                    img.homogeneous_weight());
        for (const auto& img : graded.fiber_images())
          rec.equal("graded fiber image has weight 1", std::optional<EulerWeight>(EulerWeight{1}),
                    img.homogeneous_weight());
        rec.truth("graded part carries an inverse", graded.inverse() != nullptr);
        for (const auto& g : generator_list(model))
          rec.equal("graded inverse round trip", g,
                    morphism_apply(graded, morphism_apply(*graded.inverse(), g)));

        for (std::uint32_t c = 0; c < cfg.cases / 2 / corpus.size() + 1; ++c) {
          const auto k1 = static_cast<std::uint32_t>(rng.integer(0, 2));
          const auto k2 = static_cast<std::uint32_t>(rng.integer(0, 2));
          const FiberPoly u = rng.homogeneous_poly(model, k1, 2, 3);
          const FiberPoly v = rng.homogeneous_poly(model, k2, 2, 3);
          const FiberPoly gu = morphism_apply(graded, u);
          const FiberPoly gv = morphism_apply(graded, v);
          rec.equal("graded part is pr_k o Psi", morphism_apply(psi, u).weight_part(k1), gu);
          rec.equal("graded part preserves weight", std::optional<EulerWeight>(EulerWeight{k1}),
                    gu.homogeneous_weight());
          rec.equal("graded part is multiplicative", gu * gv, morphism_apply(graded, u * v));
          rec.equal("product of top parts", morphism_apply(psi, u * v).weight_part(k1 + k2), gu * gv);
        }
      });
    }
    for (const auto& entry : violating_corpus()) {
      const auto& psi = entry.morphism;
      rec.run_case(entry.label + ": " + psi.to_string(), [&] {
        rec.truth("is_filtered fails", !is_filtered(psi, 4, cfg.degree_bound));
        rec.equal("preserves_degree_zero", !entry.breaks_degree_zero,
                  preserves_degree_zero(psi, cfg.degree_bound));
        bool threw = false;
        try {
          (void)graded_part(psi, cfg.degree_bound);
        } catch (const NotFilteredError&) {
          threw = true;
        }
        rec.truth("graded_part raises not-filtered", threw);
      });
    }
  });
}

SuiteReport infinitesimal(const SuiteConfig& cfg) {
  return timed("automorphisms", "weight-zero derivations = derivations commuting with E",
               [&](Recorder& rec) {
    RandomSource rng(mix(cfg.seed, 10));
    const auto& model = cfg.model;
    // Probe pool: the generators plus random homogeneous functions, 100 in all.
    std::vector<FiberPoly> pool = generator_list(model);
    const std::size_t pool_size = std::max<std::size_t>(cfg.cases / 2, pool.size());
    while (pool.size() < pool_size) {
      const auto k = static_cast<std::uint32_t>(rng.integer(0, 3));
      pool.push_back(rng.homogeneous_poly(model, k, 2, 3));
    }
    const DiffOp euler = euler_field(model);
    const std::uint32_t constructed = cfg.cases / 10;
    for (std::uint32_t c = 0; c < cfg.cases / 2; ++c) {
      const bool weight_zero = c < constructed;
      const Derivation d = weight_zero ? rng.weight_zero_derivation(model, cfg.coeff_degree)
                                       : rng.derivation(model, cfg.coeff_degree);
      rec.run_case(derivation_text(d), [&] {
        const bool by_generators = d.has_weight_zero_images();
        const bool by_bracket = bracket(euler, extend_derivation(d)).is_zero();
        const DiffOp ext = extend_derivation(d);
        bool by_action = true;
        for (const auto& u : pool) {
          const FiberPoly image = apply(ext, u);
          if (!image.is_zero() && image.homogeneous_weight() != u.homogeneous_weight()) {
            by_action = false;
            break;
          }
        }
        rec.equal("generator weights vs [E, D^]", by_generators, by_bracket);
        rec.equal("generator weights vs weight-0 action", by_generators, by_action);
        rec.equal("is_infinitesimal_automorphism", by_bracket, is_infinitesimal_automorphism(d));
        if (weight_zero) rec.truth("constructed derivation has weight 0", by_generators);
      });
    }
  });
}

}  // namespace

const std::vector<SuiteInfo>& registry() {
  static const std::vector<SuiteInfo> suites = {
      {"grading", "Grading and filtration", grading},
      {"weight-law", "Weight decomposition and coefficient law", weight_law},
      {"composition", "Composition oracle", composition},
      {"nonsingular", "Non-singularity certificates", nonsingular},
      {"classical-limit", "Classical limit", classical_limit},
      {"distinguishing", "Quasi- but not distinguishing", distinguishing},
      {"jet", "Jet factorization", jets},
      {"derivation", "Derivation extension", derivation_extension},
      {"morphisms", "Filtered and graded morphisms", morphisms},
      {"automorphisms", "Infinitesimal automorphisms", infinitesimal},
  };
  return suites;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& s : registry())
    if (s.name == name) return s.run(config);
  throw std::out_of_range("unknown suite '" + name + "'");
}

std::vector<CorpusEntry> invertible_corpus() {
  const BundleModel model(2, 2);
  auto make = [&](const std::string& label, std::initializer_list<const char*> forward,
                  std::initializer_list<const char*> backward) {
    auto build = [&](std::initializer_list<const char*> assignments) {
      auto images = generator_list(model);
      for (const char* a : assignments) {
        auto [var, image] = parse_assignment(a, model);
        images[var.kind == VarKind::base ? var.index : model.m() + var.index] = image;
      }
      return AlgebraMorphism(model, {images.begin(), images.begin() + model.m()},
                             {images.begin() + model.m(), images.end()});
    };
    return CorpusEntry{label, build(forward).with_inverse(build(backward))};
  };
  return {
      make("identity", {}, {}),
      make("fiber shear by x1^2", {"xi1 = xi1 + x1^2"}, {"xi1 = xi1 - x1^2"}),
      make("base translation", {"x1 = x1 + 1"}, {"x1 = x1 - 1"}),
      make("triangular base map", {"x1 = x1 + x2^2"}, {"x1 = x1 - x2^2"}),
      make("base swap", {"x1 = x2", "x2 = x1"}, {"x1 = x2", "x2 = x1"}),
      make("fiber swap", {"xi1 = xi2", "xi2 = xi1"}, {"xi1 = xi2", "xi2 = xi1"}),
      make("constant fiber matrix", {"xi1 = 2*xi1 + xi2"}, {"xi1 = 1/2*xi1 - 1/2*xi2"}),
      make("x-dependent gauge", {"xi1 = xi1 + x1*xi2"}, {"xi1 = xi1 - x1*xi2"}),
      make("affine fiber shift", {"xi2 = xi2 + 3*x2 + x1*x2"}, {"xi2 = xi2 - 3*x2 - x1*x2"}),
      make("mixed triangular", {"x2 = x2 + x1^3", "xi1 = xi1 + x1*xi2 + 1"},
           {"x2 = x2 - x1^3", "xi1 = xi1 - x1*xi2 - 1"}),
      make("reflection with shear", {"x1 = -x1", "xi1 = xi2 + x1", "xi2 = -xi1"},
           {"x1 = -x1", "xi1 = -xi2", "xi2 = xi1 + x1"}),
      make("scaling", {"x1 = 2*x1 + 3", "xi2 = 1/5*xi2"}, {"x1 = 1/2*x1 - 3/2", "xi2 = 5*xi2"}),
  };
}

std::vector<ViolatingEntry> violating_corpus() {
  const BundleModel model(2, 2);
  auto make = [&](const std::string& label, std::initializer_list<const char*> assignments,
                  bool breaks_degree_zero) {
    auto images = generator_list(model);
    for (const char* a : assignments) {
      auto [var, image] = parse_assignment(a, model);
      images[var.kind == VarKind::base ? var.index : model.m() + var.index] = image;
    }
    return ViolatingEntry{label,
                          AlgebraMorphism(model, {images.begin(), images.begin() + model.m()},
                                          {images.begin() + model.m(), images.end()}),
                          breaks_degree_zero};
  };
  return {
      make("base to fiber", {"x1 = xi1"}, true),
      make("base plus fiber", {"x1 = x1 + xi1"}, true),
      make("fiber squared", {"xi1 = xi1^2"}, false),
      make("fiber product", {"xi1 = xi1*xi2 + x1"}, false),
      make("base plus quadratic fiber", {"x2 = x2 + xi1*xi2"}, true),
      make("fiber plus cubic", {"xi2 = xi2 + xi1^3"}, false),
  };
}

}  // namespace eulerops::suites
