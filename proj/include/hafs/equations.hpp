#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hafs/element_set.hpp"
#include "hafs/framework.hpp"
#include "hafs/logic.hpp"
#include "hafs/values.hpp"

namespace hafs {

/// One fixed-point equation per element:
///   ‖a‖ = N(‖b_1‖∗‖r_1‖) ∗ … ∗ N(‖b_k‖∗‖r_k‖) ∗ N(N(‖c_1‖)∗‖t_1‖) ∗ … ∗ N(N(‖c_m‖)∗‖t_m‖)
/// with the empty product equal to 1.
class EquationSystem {
 public:
  EquationSystem(const Framework& h, LogicSystem logic);

  std::size_t size() const noexcept { return attackers_.size(); }
  const LogicSystem& logic() const noexcept { return logic_; }
  /// (source, relation) index pairs feeding element a.
  std::span<const std::pair<std::size_t, std::size_t>> attackers(std::size_t a) const { return attackers_.at(a); }
  std::span<const std::pair<std::size_t, std::size_t>> supporters(std::size_t a) const { return supporters_.at(a); }

  /// Right-hand side for element a. Gödel and Product use their closed forms
  ///   min( min_i max(1−b_i, 1−r_i), min_j max(c_j, 1−t_j) )
  ///   ∏_i (1 − b_i r_i) · ∏_j (1 − t_j + c_j t_j)
  /// and every other logic folds its own operators.
  template <class T>
  T rhs(std::size_t a, std::span<const T> v) const;

  /// The generic operator fold, regardless of logic.
  template <class T>
  T rhs_generic(std::size_t a, std::span<const T> v) const;

  /// F(v): all right-hand sides.
  template <class T>
  std::vector<T> apply(std::span<const T> v) const;

 private:
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> attackers_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> supporters_;
  LogicSystem logic_;
};

EquationSystem build_equations(const Framework& h, const LogicSystem& logic);

/// The encoded equational function h(x_1,x_1',…,x_k,x_k',y_1,y_1',…,y_m,y_m')
/// = N(x_1∗x_1') ∗ … ∗ N(x_k∗x_k') ∗ N(N(y_1)∗y_1') ∗ … ∗ N(N(y_m)∗y_m').
template <class T>
T h_function(const LogicSystem& logic, std::span<const std::pair<T, T>> attacker_pairs,
             std::span<const std::pair<T, T>> supporter_pairs);

/// max_a |‖a‖ − RHS(a)|. Exact in rationals.
template <class T>
T residual(const EquationSystem& sys, std::span<const T> v);

struct SolveOptions {
  double damping = 0.5;
  double tolerance = 1e-9;
  std::size_t max_iter = 100000;
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
};

struct SolveReport {
  std::vector<double> solution;
  double residual = 0.0;
  std::size_t iterations = 0;
  std::size_t restart_index = 0;
  bool converged = false;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Damped iteration x ← (1−α)x + α·F(x) from `restarts` starting points:
/// all-0, all-1, all-1/2, then seeded uniform random points. Starts run in
/// parallel. A converged report whose solution lies within 10·ε (max-norm) of
/// an earlier converged one is dropped; non-converged runs are always kept.
/// Throws SolverError for a logic not flagged continuous or bad options.
std::vector<SolveReport> solve_fixed_point(const EquationSystem& sys, const SolveOptions& options = {});

/// Every v ∈ {0, 1/2, 1}^U with exact residual 0, in lexicographic order.
std::vector<std::vector<Truth3>> enumerate_ternary_solutions(const EquationSystem& sys,
                                                             std::size_t max_elements = bounds::kTernary);

}  // namespace hafs
