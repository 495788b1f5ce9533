#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hafs/equations.hpp"
#include "hafs/framework.hpp"
#include "hafs/labellings.hpp"
#include "hafs/logic.hpp"

namespace hafs {

/// Float values within this distance of 0 or 1 ternarize to 0 or 1.
inline constexpr double kTernarizeTolerance = 1e-6;

/// T_3: exact 1 -> 1, exact 0 -> 0, anything else -> 1/2.
/// Throws std::invalid_argument for values outside [0, 1].
Labelling3 ternarize(std::span<const Rational> values);
Labelling3 ternarize(std::span<const double> values, double tau = kTernarizeTolerance);

std::vector<Rational> embed(const Labelling3& labelling);

enum class TheoremId { T1, T2, T_PL3, EQ_G, EQ_P, EQ_L, T16, IDEM, CORR_G };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::T1,   TheoremId::T2,   TheoremId::T_PL3,
                                             TheoremId::EQ_G, TheoremId::EQ_P, TheoremId::EQ_L,
                                             TheoremId::T16,  TheoremId::IDEM, TheoremId::CORR_G};

std::string_view to_string(TheoremId id);
TheoremId parse_theorem(std::string_view text);

struct Counterexample {
  std::string framework_text;  // replayable through the CLI
  std::vector<std::pair<std::string, std::string>> assignment;  // qualified id -> value
  std::string explanation;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::T1;
  std::string framework_digest;
  std::string logic;          // empty when the check is logic-independent
  bool passed = false;
  std::size_t checked = 0;    // assignments / labellings / solutions examined
  std::optional<Counterexample> counterexample;
};

/// The framework violates a theorem's hypothesis (e.g. T2 on a support-cyclic
/// framework) or the chosen logic lacks the algebraic property a check needs.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  /// Logic for T16 / IDEM / CORR_G; EQ_G / EQ_P / EQ_L fix their own.
  std::string logic = "godel";
  SolveOptions solve;
  std::size_t grid_cap = 100000;      // rational {0,1/4,1/2,3/4,1}^U points per framework
  std::size_t float_samples = 10000;  // random float assignments per framework
  double float_tolerance = 1e-12;
  std::uint64_t seed = 0;
  std::size_t max_elements = 8;
};

/// Runs one empirical theorem check on h.
///   T1     every extension-derived labelling is adjacent complete
///   T2     support-acyclic h: extension-derived labellings = adjacent complete labellings
///   T_PL3  exhaustive over {0,1/2,1}^U: adjacent complete ⇔ PL3 model of the encoding
///   EQ_*   rational grid: model ⇔ exact residual 0; random floats: the formula
///          and equation routes agree within float_tolerance
///   T16    zero-divisor-free logic: fixed-point and exact ternary solutions
///          ternarize to adjacent complete labellings
///   IDEM   ½-idempotent logic: every adjacent complete labelling has residual 0
///   CORR_G both: complete labellings = exact ternary solutions (exhaustive);
///          fixed-point solutions ternarize into the complete set (sampled)
VerificationReport verify(const Framework& h, TheoremId theorem, const VerifyOptions& options = {});

/// One report per framework, computed in parallel.
std::vector<VerificationReport> verify_batch(std::span<const Framework> frameworks, TheoremId theorem,
                                             const VerifyOptions& options = {});

}  // namespace hafs
