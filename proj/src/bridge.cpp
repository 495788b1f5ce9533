#include "hafs/bridge.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <set>
#include <sstream>

#include "hafs/extensions.hpp"

namespace hafs {

Labelling3 ternarize(std::span<const Rational> values) {
  Labelling3 out;
  out.values.reserve(values.size());
  for (const auto& x : values) {
    if (x < Rational(0) || x > Rational(1)) throw std::invalid_argument("value " + to_string(x) + " outside [0, 1]");
    out.values.push_back(x == Rational(1) ? Truth3::One : x == Rational(0) ? Truth3::Zero : Truth3::Half);
  }
  return out;
}

Labelling3 ternarize(std::span<const double> values, double tau) {
  Labelling3 out;
  out.values.reserve(values.size());
  for (double x : values) {
    if (!(x >= -tau && x <= 1.0 + tau))
      throw std::invalid_argument("value " + std::to_string(x) + " outside [0, 1]");
    if (std::abs(x - 1.0) <= tau)
      out.values.push_back(Truth3::One);
    else if (std::abs(x) <= tau)
      out.values.push_back(Truth3::Zero);
    else
      out.values.push_back(Truth3::Half);
  }
  return out;
}

std::vector<Rational> embed(const Labelling3& labelling) {
  std::vector<Rational> out;
  out.reserve(labelling.size());
  for (auto t : labelling.values) out.push_back(to_rational(t));
  return out;
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T_PL3: return "T_PL3";
    case TheoremId::EQ_G: return "EQ_G";
    case TheoremId::EQ_P: return "EQ_P";
    case TheoremId::EQ_L: return "EQ_L";
    case TheoremId::T16: return "T16";
    case TheoremId::IDEM: return "IDEM";
    case TheoremId::CORR_G: return "CORR_G";
  }
  return "?";
}

TheoremId parse_theorem(std::string_view text) {
  for (auto id : kAllTheorems)
    if (to_string(id) == text) return id;
  throw std::invalid_argument("unknown theorem '" + std::string(text) + "'");
}

namespace {

class Checker {
 public:
  Checker(const Framework& h, TheoremId theorem, const VerifyOptions& opt) : h_(h), opt_(opt) {
    report_.theorem = theorem;
    report_.framework_digest = digest(h);
    report_.passed = true;
  }

  VerificationReport run() {
    if (h_.size() > opt_.max_elements) throw BoundExceeded(h_.size(), opt_.max_elements);
    switch (report_.theorem) {
      case TheoremId::T1: theorem1(); break;
      case TheoremId::T2: theorem2(); break;
      case TheoremId::T_PL3: pl3(); break;
      case TheoremId::EQ_G: equational(LogicSystem::godel()); break;
      case TheoremId::EQ_P: equational(LogicSystem::product()); break;
      case TheoremId::EQ_L: equational(LogicSystem::lukasiewicz()); break;
      case TheoremId::T16: zero_divisor_free(); break;
      case TheoremId::IDEM: half_idempotent(); break;
      case TheoremId::CORR_G: correspondence(); break;
    }
    return std::move(report_);
  }

 private:
  template <class Values>
  void fail(const Values& values, std::string explanation) {
    if (!report_.passed) return;  // keep the first counterexample
    report_.passed = false;
    Counterexample c;
    c.framework_text = serialize(h_);
    for (std::size_t i = 0; i < values.size(); ++i) c.assignment.emplace_back(h_.element(i).qualified(), str(values[i]));
    c.explanation = std::move(explanation);
    report_.counterexample = std::move(c);
  }

  static std::string str(Truth3 t) { return to_string(t); }
  static std::string str(const Rational& r) { return to_string(r); }
  static std::string str(double x) {
    std::ostringstream s;
    s.precision(17);
    s << x;
    return s.str();
  }

  std::string set_text(const ElementSet& E) const {
    std::string out = "{";
    for (auto i : E.members()) {
      if (out.size() > 1) out += ",";
      out += h_.element(i).qualified();
    }
    return out + "}";
  }

  void theorem1() {
    for (const auto& E : complete_extensions(h_)) {
      ++report_.checked;
      auto L = extension_derived_labelling(h_, E);
      if (!is_adjacent_complete(h_, L))
        fail(L.values, "labelling derived from complete extension " + set_text(E) +
                           " is not adjacent complete");
    }
  }

  void theorem2() {
    if (!is_support_acyclic(h_)) throw PreconditionError("T2 requires a support-acyclic framework");
    auto adjacent = enumerate_adjacent_complete(h_);
    std::set<Labelling3> derived;
    for (const auto& E : complete_extensions(h_)) derived.insert(extension_derived_labelling(h_, E));
    std::set<Labelling3> adj(adjacent.begin(), adjacent.end());
    report_.checked = adj.size() + derived.size();
    for (const auto& L : adj)
      if (!derived.count(L)) fail(L.values, "adjacent complete labelling is not extension-derived");
    for (const auto& L : derived)
      if (!adj.count(L)) fail(L.values, "extension-derived labelling is not adjacent complete");
  }

  void pl3() {
    const auto logic = LogicSystem::lukasiewicz3();
    const auto encoding = encode_normal(h_);
    const auto n = h_.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::vector<Truth3> v(n);
    std::vector<Rational> q(n);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rem = code;
      for (std::size_t i = n; i-- > 0;) {
        v[i] = static_cast<Truth3>(rem % 3);
        q[i] = to_rational(v[i]);
        rem /= 3;
      }
      ++report_.checked;
      bool complete = is_adjacent_complete(h_, Labelling3{v});
      bool model = is_model<Rational>(encoding, q, logic);
      if (complete != model)
        fail(v, complete ? "adjacent complete labelling is not a PL3 model of the encoding"
                         : "PL3 model of the encoding is not adjacent complete");
    }
  }

  void equational(const LogicSystem& logic) {
    report_.logic = logic.name();
    const auto encoding = encode_normal(h_);
    const auto sys = build_equations(h_, logic);
    const auto n = h_.size();
    static const Rational grid[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};

    auto check_rational = [&](const std::vector<Rational>& q) {
      ++report_.checked;
      bool model = is_model<Rational>(encoding, q, logic);
      bool solution = residual<Rational>(sys, q) == Rational(0);
      if (model != solution)
        fail(q, model ? "model of the encoding does not solve the equations"
                      : "solution of the equations is not a model of the encoding");
    };

    std::size_t points = 1;
    bool exhaustive = true;
    for (std::size_t i = 0; i < n; ++i) {
      points *= 5;
      if (points > opt_.grid_cap) {
        exhaustive = false;
        break;
      }
    }
    std::vector<Rational> q(n);
    std::mt19937_64 rng(opt_.seed ^ 0xA5A5A5A5ULL);
    if (exhaustive) {
      for (std::size_t code = 0; code < points; ++code) {
        std::size_t rem = code;
        for (std::size_t i = n; i-- > 0;) {
          q[i] = grid[rem % 5];
          rem /= 5;
        }
        check_rational(q);
      }
    } else {
      for (std::size_t s = 0; s < opt_.grid_cap; ++s) {
        for (auto& x : q) x = grid[rng() % 5];
        check_rational(q);
      }
    }

    // Floating point: per-element agreement of the formula route and the
    // equation route, and model ⇒ near-zero residual.
    std::vector<Formula> inner;
    for (std::size_t a = 0; a < n; ++a) inner.push_back(encode_element(h_, a));
    std::vector<double> x(n);
    for (std::size_t s = 0; s < opt_.float_samples; ++s) {
      for (auto& xi : x) xi = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      ++report_.checked;
      for (std::size_t a = 0; a < n; ++a) {
        double via_formula = evaluate<double>(inner[a], x, logic);
        double via_equation = sys.rhs<double>(a, x);
        if (std::abs(via_formula - via_equation) > opt_.float_tolerance) {
          fail(x, "formula and equation disagree at " + h_.element(a).qualified());
          return;
        }
      }
      if (is_model<double>(encoding, x, logic) && residual<double>(sys, x) > opt_.float_tolerance)
        fail(x, "float model with residual above tolerance");
    }
  }

  LogicSystem chosen_logic() {
    auto logic = LogicSystem::from_name(opt_.logic);
    if (logic.domain() != Domain::UnitInterval)
      throw PreconditionError("logic '" + logic.name() + "' is not a [0,1]-valued logic");
    report_.logic = logic.name();
    return logic;
  }

  // Fixed-point runs: each converged solution must meet the tolerance and
  // ternarize into the adjacent complete family.
  void check_fixed_points(const EquationSystem& sys, const std::set<Labelling3>& complete) {
    for (const auto& run : solve_fixed_point(sys, opt_.solve)) {
      if (!run.converged) continue;
      ++report_.checked;
      if (run.residual > opt_.solve.tolerance) fail(run.solution, "converged run above tolerance");
      auto L = ternarize(run.solution);
      if (!complete.count(L))
        fail(run.solution, "fixed-point solution (start " + std::to_string(run.restart_index) +
                               ") ternarizes to a labelling that is not adjacent complete");
    }
  }

  void zero_divisor_free() {
    auto logic = chosen_logic();
    if (!logic.flags().zero_divisor_free)
      throw PreconditionError("T16 needs a zero-divisor-free t-norm; '" + logic.name() + "' has zero divisors");
    auto sys = build_equations(h_, logic);
    auto adjacent = enumerate_adjacent_complete(h_);
    std::set<Labelling3> complete(adjacent.begin(), adjacent.end());
    check_fixed_points(sys, complete);
    for (auto& v : enumerate_ternary_solutions(sys)) {
      ++report_.checked;
      if (!is_adjacent_complete(h_, Labelling3{v})) fail(v, "exact ternary solution is not adjacent complete");
    }
  }

  void half_idempotent() {
    auto logic = chosen_logic();
    if (!logic.flags().half_idempotent)
      throw PreconditionError("IDEM needs a ½-idempotent t-norm; '" + logic.name() + "' is not");
    auto sys = build_equations(h_, logic);
    for (const auto& L : enumerate_adjacent_complete(h_)) {
      ++report_.checked;
      auto q = embed(L);
      if (residual<Rational>(sys, q) != Rational(0)) fail(L.values, "adjacent complete labelling does not solve the equations");
    }
  }

  void correspondence() {
    auto logic = chosen_logic();
    if (!logic.flags().zero_divisor_free || !logic.flags().half_idempotent)
      throw PreconditionError("CORR_G needs a zero-divisor-free ½-idempotent t-norm; '" + logic.name() +
                              "' is not");
    auto sys = build_equations(h_, logic);
    auto adjacent = enumerate_adjacent_complete(h_);
    std::set<Labelling3> complete(adjacent.begin(), adjacent.end());
    std::set<Labelling3> ternary;
    for (auto& v : enumerate_ternary_solutions(sys)) ternary.insert(Labelling3{std::move(v)});
    report_.checked += complete.size() + ternary.size();
    for (const auto& L : complete)
      if (!ternary.count(L)) fail(L.values, "adjacent complete labelling is not an exact ternary solution");
    for (const auto& L : ternary)
      if (!complete.count(L)) fail(L.values, "exact ternary solution is not adjacent complete");
    check_fixed_points(sys, complete);
  }

  const Framework& h_;
  const VerifyOptions& opt_;
  VerificationReport report_;
};

}  // namespace

VerificationReport verify(const Framework& h, TheoremId theorem, const VerifyOptions& options) {
  return Checker(h, theorem, options).run();
}

std::vector<VerificationReport> verify_batch(std::span<const Framework> frameworks, TheoremId theorem,
                                             const VerifyOptions& options) {
  std::vector<VerificationReport> out(frameworks.size());
  std::vector<std::exception_ptr> errors(frameworks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < frameworks.size(); ++i) {
    try {
      out[i] = verify(frameworks[i], theorem, options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hafs
