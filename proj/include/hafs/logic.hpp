#pragma once

#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hafs/framework.hpp"
#include "hafs/values.hpp"

namespace hafs {

/// Immutable propositional formula over elements of U. Variables carry the
/// framework element index ("slot") they are evaluated against.
class Formula {
 public:
  enum class Op { Var, Top, Bottom, Not, And, Or, Implies, Iff };

  static Formula var(ElementId id, std::size_t slot);
  static Formula top();
  static Formula bottom();
  static Formula negate(Formula f);
  static Formula conj(std::vector<Formula> fs);  // conj({}) is ⊤ when evaluated
  static Formula disj(std::vector<Formula> fs);  // disj({}) is ⊥ when evaluated
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);

  Op op() const;
  const ElementId& id() const;  // Var only
  std::size_t slot() const;     // Var only
  std::span<const Formula> children() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Fully parenthesised: `(a <-> T)`, `~(r1 & a)`, `(x -> y)`, `(x | y)`; ⊤/⊥ print as T/F.
std::string to_text(const Formula& f);

/// Slots of all variables occurring in f, sorted and deduplicated.
std::vector<std::size_t> variables(const Formula& f);

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Domain { ThreeValued, UnitInterval };

struct LogicFlags {
  bool continuous = false;
  bool zero_divisor_free = false;
  bool half_idempotent = false;
};

template <class T>
struct Operators {
  std::function<T(const T&)> negation;
  std::function<T(const T&, const T&)> tnorm;
  std::function<T(const T&, const T&)> implication;
};

/// Interpretation of ¬, ∧, → plus declared algebraic flags. Built-ins carry
/// both exact (rational) and binary floating-point operators.
class LogicSystem {
 public:
  enum class Builtin { None, L3, Godel, Product, Lukasiewicz };

  LogicSystem(std::string name, Domain domain, LogicFlags flags, Operators<Rational> exact,
              Operators<double> approx, Builtin builtin = Builtin::None);

  static LogicSystem lukasiewicz3();  // PL3^L: 1-x, min, max, min(1, 1-m+n)
  static LogicSystem godel();
  static LogicSystem product();
  static LogicSystem lukasiewicz();
  /// "l3", "godel", "product", "lukasiewicz".
  static LogicSystem from_name(std::string_view name);

  const std::string& name() const noexcept { return name_; }
  Domain domain() const noexcept { return domain_; }
  const LogicFlags& flags() const noexcept { return flags_; }
  Builtin builtin() const noexcept { return builtin_; }
  bool has_exact() const noexcept { return static_cast<bool>(exact_.tnorm); }

  template <class T>
  T negation(const T& x) const {
    return ops<T>().negation(x);
  }
  template <class T>
  T tnorm(const T& x, const T& y) const {
    return ops<T>().tnorm(x, y);
  }
  template <class T>
  T implication(const T& x, const T& y) const {
    return ops<T>().implication(x, y);
  }

 private:
  template <class T>
  const Operators<T>& ops() const {
    if constexpr (std::is_same_v<T, Rational>) {
      if (!exact_.tnorm) throw EvaluationError("logic '" + name_ + "' has no exact operators");
      return exact_;
    } else {
      return approx_;
    }
  }

  std::string name_;
  Domain domain_;
  LogicFlags flags_;
  Operators<Rational> exact_;
  Operators<double> approx_;
  Builtin builtin_;
};

/// Truth degree of f. ⊤ = 1 and ⊥ = 0 in every system; ∧ folds the t-norm
/// starting from 1; ↔ is (a→b) ∧ (b→a). ∨ (max) exists only in the
/// three-valued system. Throws EvaluationError on an unassigned variable, a
/// disjunction under a fuzzy logic, or a value outside a three-valued domain.
template <class T>
T evaluate(const Formula& f, std::span<const T> values, const LogicSystem& logic);

extern template Rational evaluate<Rational>(const Formula&, std::span<const Rational>, const LogicSystem&);
extern template double evaluate<double>(const Formula&, std::span<const double>, const LogicSystem&);

/// ⋀_{a∈U} ( a ↔ ⋀_{(b,a)∈R} ¬(r_b^a ∧ b) ∧ ⋀_{(c,a)∈T} ¬(t_c^a ∧ ¬c) ).
/// Conjuncts follow element order; a's inner factors list attacks then
/// supports, each in relation-id order. Single-element conjunctions are not
/// wrapped and empty ones become ⊤.
Formula encode_normal(const Framework& h);

/// The right-hand side of a's biconditional in encode_normal.
Formula encode_element(const Framework& h, std::size_t a);

/// evaluate(encode_normal(h), v, logic) == 1 exactly.
template <class T>
bool is_model(const Framework& h, std::span<const T> values, const LogicSystem& logic);

/// Same with a pre-built encoding.
template <class T>
bool is_model(const Formula& encoding, std::span<const T> values, const LogicSystem& logic);

}  // namespace hafs
