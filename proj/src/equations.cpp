#include "hafs/equations.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ternary_search.hpp"

namespace hafs {

EquationSystem::EquationSystem(const Framework& h, LogicSystem logic)
    : attackers_(h.size()), supporters_(h.size()), logic_(std::move(logic)) {
  for (std::size_t a = 0; a < h.size(); ++a) {
    for (const auto& in : h.attackers(a)) attackers_[a].emplace_back(in.source, in.relation);
    for (const auto& in : h.supporters(a)) supporters_[a].emplace_back(in.source, in.relation);
  }
}

EquationSystem build_equations(const Framework& h, const LogicSystem& logic) {
  return EquationSystem(h, logic);
}

template <class T>
T EquationSystem::rhs_generic(std::size_t a, std::span<const T> v) const {
  const auto& L = logic_;
  T acc(1);
  for (auto [b, r] : attackers_[a]) acc = L.tnorm(acc, L.negation(L.tnorm(v[b], v[r])));
  for (auto [c, t] : supporters_[a]) acc = L.tnorm(acc, L.negation(L.tnorm(L.negation(v[c]), v[t])));
  return acc;
}

template <class T>
T EquationSystem::rhs(std::size_t a, std::span<const T> v) const {
  switch (logic_.builtin()) {
    case LogicSystem::Builtin::Godel: {
      T acc(1);
      for (auto [b, r] : attackers_[a]) acc = std::min(acc, std::max(T(1) - v[b], T(1) - v[r]));
      for (auto [c, t] : supporters_[a]) acc = std::min(acc, std::max(v[c], T(1) - v[t]));
      return acc;
    }
    case LogicSystem::Builtin::Product: {
      T acc(1);
      for (auto [b, r] : attackers_[a]) acc *= T(1) - v[b] * v[r];
      for (auto [c, t] : supporters_[a]) acc *= T(1) - v[t] + v[c] * v[t];
      return acc;
    }
    default: return rhs_generic(a, v);
  }
}

template <class T>
std::vector<T> EquationSystem::apply(std::span<const T> v) const {
  std::vector<T> out(size());
  for (std::size_t a = 0; a < size(); ++a) out[a] = rhs(a, v);
  return out;
}

template Rational EquationSystem::rhs<Rational>(std::size_t, std::span<const Rational>) const;
template double EquationSystem::rhs<double>(std::size_t, std::span<const double>) const;
template Rational EquationSystem::rhs_generic<Rational>(std::size_t, std::span<const Rational>) const;
template double EquationSystem::rhs_generic<double>(std::size_t, std::span<const double>) const;
template std::vector<Rational> EquationSystem::apply<Rational>(std::span<const Rational>) const;
template std::vector<double> EquationSystem::apply<double>(std::span<const double>) const;

template <class T>
T h_function(const LogicSystem& L, std::span<const std::pair<T, T>> attacker_pairs,
             std::span<const std::pair<T, T>> supporter_pairs) {
  T acc(1);
  for (const auto& [x, x2] : attacker_pairs) acc = L.tnorm(acc, L.negation(L.tnorm(x, x2)));
  for (const auto& [y, y2] : supporter_pairs) acc = L.tnorm(acc, L.negation(L.tnorm(L.negation(y), y2)));
  return acc;
}

template Rational h_function<Rational>(const LogicSystem&, std::span<const std::pair<Rational, Rational>>,
                                       std::span<const std::pair<Rational, Rational>>);
template double h_function<double>(const LogicSystem&, std::span<const std::pair<double, double>>,
                                   std::span<const std::pair<double, double>>);

template <class T>
T residual(const EquationSystem& sys, std::span<const T> v) {
  if (v.size() != sys.size()) throw std::invalid_argument("assignment is not total over U");
  T worst(0);
  for (std::size_t a = 0; a < sys.size(); ++a) {
    T d = v[a] - sys.rhs(a, v);
    if (d < T(0)) d = -d;
    worst = std::max(worst, d);
  }
  return worst;
}

template Rational residual<Rational>(const EquationSystem&, std::span<const Rational>);
template double residual<double>(const EquationSystem&, std::span<const double>);

namespace {

double max_distance(const std::vector<double>& x, const std::vector<double>& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

std::vector<double> starting_point(std::size_t n, std::size_t index, std::uint64_t seed) {
  switch (index) {
    case 0: return std::vector<double>(n, 0.0);
    case 1: return std::vector<double>(n, 1.0);
    case 2: return std::vector<double>(n, 0.5);
    default: break;
  }
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  std::vector<double> x(n);
  for (auto& xi : x) xi = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return x;
}

SolveReport iterate(const EquationSystem& sys, std::vector<double> x, const SolveOptions& opt) {
  SolveReport report;
  const double alpha = opt.damping;
  for (std::size_t it = 0;; ++it) {
    auto fx = sys.apply<double>(x);
    double r = max_distance(x, fx);
    report.residual = r;
    report.iterations = it;
    if (r <= opt.tolerance) {
      report.converged = true;
      // undamped polish, kept only while the residual does not grow
      for (int k = 0; k < 8 && r > 0.0; ++k) {
        auto ffx = sys.apply<double>(fx);
        double rf = max_distance(fx, ffx);
        if (rf > r) break;
        x = std::move(fx);
        fx = std::move(ffx);
        r = rf;
      }
      report.residual = r;
      break;
    }
    if (it == opt.max_iter) break;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (1.0 - alpha) * x[i] + alpha * fx[i];
  }
  report.solution = std::move(x);
  return report;
}

}  // namespace

std::vector<SolveReport> solve_fixed_point(const EquationSystem& sys, const SolveOptions& opt) {
  if (!sys.logic().flags().continuous)
    throw SolverError("logic '" + sys.logic().name() + "' is not continuous; fixed-point iteration needs it");
  if (!(opt.damping > 0.0 && opt.damping <= 1.0)) throw SolverError("damping must lie in (0, 1]");
  if (!(opt.tolerance > 0.0)) throw SolverError("tolerance must be positive");
  const std::size_t starts = std::max<std::size_t>(opt.restarts, 1);

  std::vector<SolveReport> runs(starts);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t k = 0; k < starts; ++k) {
    runs[k] = iterate(sys, starting_point(sys.size(), k, opt.seed), opt);
    runs[k].restart_index = k;
  }

  std::vector<SolveReport> out;
  for (auto& run : runs) {
    if (run.converged) {
      bool duplicate = std::any_of(out.begin(), out.end(), [&](const SolveReport& kept) {
        return kept.converged && max_distance(kept.solution, run.solution) <= 10.0 * opt.tolerance;
      });
      if (duplicate) continue;
    }
    out.push_back(std::move(run));
  }
  return out;
}

std::vector<std::vector<Truth3>> enumerate_ternary_solutions(const EquationSystem& sys,
                                                             std::size_t max_elements) {
  const auto n = sys.size();
  if (n > max_elements) throw BoundExceeded(n, max_elements);
  std::vector<std::vector<std::size_t>> deps(n);
  std::vector<std::optional<Truth3>> forced(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (auto [b, r] : sys.attackers(a)) deps[a].insert(deps[a].end(), {b, r});
    for (auto [c, t] : sys.supporters(a)) deps[a].insert(deps[a].end(), {c, t});
    if (deps[a].empty()) forced[a] = Truth3::One;  // empty product
  }
  auto plan = detail::make_plan(n, deps, std::move(forced));
  return detail::ternary_search(plan, [&](std::size_t a, std::span<const Truth3> v) {
    std::vector<Rational> q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = to_rational(v[i]);
    return q[a] == sys.rhs<Rational>(a, q);
  });
}

}  // namespace hafs
