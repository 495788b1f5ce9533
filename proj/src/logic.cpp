#include "hafs/logic.hpp"

#include <algorithm>
#include <sstream>

namespace hafs {

struct Formula::Node {
  Op op;
  ElementId id;
  std::size_t slot = 0;
  std::vector<Formula> children;
};

Formula Formula::var(ElementId id, std::size_t slot) {
  return Formula(std::make_shared<const Node>(Node{Op::Var, std::move(id), slot, {}}));
}
Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Op::Top, {}, 0, {}})); }
Formula Formula::bottom() { return Formula(std::make_shared<const Node>(Node{Op::Bottom, {}, 0, {}})); }
Formula Formula::negate(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Op::Not, {}, 0, {std::move(f)}}));
}
Formula Formula::conj(std::vector<Formula> fs) {
  return Formula(std::make_shared<const Node>(Node{Op::And, {}, 0, std::move(fs)}));
}
Formula Formula::disj(std::vector<Formula> fs) {
  return Formula(std::make_shared<const Node>(Node{Op::Or, {}, 0, std::move(fs)}));
}
Formula Formula::implies(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Op::Implies, {}, 0, {std::move(a), std::move(b)}}));
}
Formula Formula::iff(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Op::Iff, {}, 0, {std::move(a), std::move(b)}}));
}

Formula::Op Formula::op() const { return node_->op; }
const ElementId& Formula::id() const { return node_->id; }
std::size_t Formula::slot() const { return node_->slot; }
std::span<const Formula> Formula::children() const { return node_->children; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  if (a.op() == Formula::Op::Var) return a.id() == b.id() && a.slot() == b.slot();
  auto ca = a.children(), cb = b.children();
  return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

namespace {

void print(const Formula& f, std::ostream& out) {
  using Op = Formula::Op;
  auto joined = [&](std::string_view sep) {
    auto cs = f.children();
    out << '(';
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) out << sep;
      print(cs[i], out);
    }
    out << ')';
  };
  switch (f.op()) {
    case Op::Var: out << f.id().name; break;
    case Op::Top: out << 'T'; break;
    case Op::Bottom: out << 'F'; break;
    case Op::Not:
      out << '~';
      print(f.children()[0], out);
      break;
    case Op::And:
      if (f.children().empty())
        out << 'T';
      else
        joined(" & ");
      break;
    case Op::Or:
      if (f.children().empty())
        out << 'F';
      else
        joined(" | ");
      break;
    case Op::Implies: joined(" -> "); break;
    case Op::Iff: joined(" <-> "); break;
  }
}

void collect(const Formula& f, std::vector<std::size_t>& out) {
  if (f.op() == Formula::Op::Var) out.push_back(f.slot());
  for (const auto& c : f.children()) collect(c, out);
}

}  // namespace

std::string to_text(const Formula& f) {
  std::ostringstream out;
  print(f, out);
  return out.str();
}

std::vector<std::size_t> variables(const Formula& f) {
  std::vector<std::size_t> out;
  collect(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- logic systems

LogicSystem::LogicSystem(std::string name, Domain domain, LogicFlags flags, Operators<Rational> exact,
                         Operators<double> approx, Builtin builtin)
    : name_(std::move(name)),
      domain_(domain),
      flags_(flags),
      exact_(std::move(exact)),
      approx_(std::move(approx)),
      builtin_(builtin) {}

namespace {

template <class T>
T standard_negation(const T& x) {
  return T(1) - x;
}

template <class T>
Operators<T> godel_ops() {
  return {standard_negation<T>, [](const T& m, const T& n) { return std::min(m, n); },
          [](const T& m, const T& n) { return m <= n ? T(1) : n; }};
}

template <class T>
Operators<T> product_ops() {
  return {standard_negation<T>, [](const T& m, const T& n) { return m * n; },
          [](const T& m, const T& n) { return m <= n ? T(1) : n / m; }};
}

template <class T>
Operators<T> lukasiewicz_ops() {
  return {standard_negation<T>, [](const T& m, const T& n) { return std::max(T(0), m + n - T(1)); },
          [](const T& m, const T& n) { return std::min(T(1), T(1) - m + n); }};
}

}  // namespace

LogicSystem LogicSystem::lukasiewicz3() {
  // ∧ = min, and the implication table coincides with min(1, 1-m+n) on {0,1/2,1}.
  Operators<Rational> exact{standard_negation<Rational>,
                            [](const Rational& m, const Rational& n) { return std::min(m, n); },
                            [](const Rational& m, const Rational& n) {
                              return std::min(Rational(1), Rational(1) - m + n);
                            }};
  Operators<double> approx{standard_negation<double>,
                           [](const double& m, const double& n) { return std::min(m, n); },
                           [](const double& m, const double& n) { return std::min(1.0, 1.0 - m + n); }};
  return LogicSystem("l3", Domain::ThreeValued, {false, false, false}, std::move(exact), std::move(approx),
                     Builtin::L3);
}

LogicSystem LogicSystem::godel() {
  return LogicSystem("godel", Domain::UnitInterval, {true, true, true}, godel_ops<Rational>(),
                     godel_ops<double>(), Builtin::Godel);
}

LogicSystem LogicSystem::product() {
  return LogicSystem("product", Domain::UnitInterval, {true, true, false}, product_ops<Rational>(),
                     product_ops<double>(), Builtin::Product);
}

LogicSystem LogicSystem::lukasiewicz() {
  return LogicSystem("lukasiewicz", Domain::UnitInterval, {true, false, false},
                     lukasiewicz_ops<Rational>(), lukasiewicz_ops<double>(), Builtin::Lukasiewicz);
}

LogicSystem LogicSystem::from_name(std::string_view name) {
  if (name == "l3") return lukasiewicz3();
  if (name == "godel") return godel();
  if (name == "product") return product();
  if (name == "lukasiewicz") return lukasiewicz();
  throw std::invalid_argument("unknown logic '" + std::string(name) + "' (expected l3, godel, product, lukasiewicz)");
}

// ---------------------------------------------------------------- evaluation

namespace {

template <class T>
T eval(const Formula& f, std::span<const T> v, const LogicSystem& logic) {
  using Op = Formula::Op;
  switch (f.op()) {
    case Op::Var:
      if (f.slot() >= v.size()) throw EvaluationError("variable '" + f.id().name + "' is unassigned");
      return v[f.slot()];
    case Op::Top: return T(1);
    case Op::Bottom: return T(0);
    case Op::Not: return logic.negation(eval(f.children()[0], v, logic));
    case Op::And: {
      T acc(1);
      for (const auto& c : f.children()) acc = logic.tnorm(acc, eval(c, v, logic));
      return acc;
    }
    case Op::Or: {
      if (logic.domain() != Domain::ThreeValued)
        throw EvaluationError("disjunction has no interpretation in logic '" + logic.name() + "'");
      T acc(0);
      for (const auto& c : f.children()) acc = std::max(acc, eval(c, v, logic));
      return acc;
    }
    case Op::Implies:
      return logic.implication(eval(f.children()[0], v, logic), eval(f.children()[1], v, logic));
    case Op::Iff: {
      auto a = eval(f.children()[0], v, logic);
      auto b = eval(f.children()[1], v, logic);
      return logic.tnorm(logic.implication(a, b), logic.implication(b, a));
    }
  }
  return T(0);
}

template <class T>
bool in_three_valued_domain(const T& x) {
  return x == T(0) || x == T(1) || x == T(1) / T(2);
}

}  // namespace

template <class T>
T evaluate(const Formula& f, std::span<const T> values, const LogicSystem& logic) {
  if (logic.domain() == Domain::ThreeValued) {
    for (const auto& x : values)
      if (!in_three_valued_domain(x)) throw EvaluationError("value outside {0, 1/2, 1} in logic 'l3'");
  } else {
    for (const auto& x : values)
      if (!(x >= T(0) && x <= T(1))) throw EvaluationError("value outside [0, 1]");
  }
  return eval(f, values, logic);
}

template Rational evaluate<Rational>(const Formula&, std::span<const Rational>, const LogicSystem&);
template double evaluate<double>(const Formula&, std::span<const double>, const LogicSystem&);

Formula encode_element(const Framework& h, std::size_t a) {
  std::vector<Formula> factors;
  for (const auto& in : h.attackers(a))
    factors.push_back(Formula::negate(Formula::conj(
        {Formula::var(h.element(in.relation), in.relation), Formula::var(h.element(in.source), in.source)})));
  for (const auto& in : h.supporters(a))
    factors.push_back(Formula::negate(
        Formula::conj({Formula::var(h.element(in.relation), in.relation),
                       Formula::negate(Formula::var(h.element(in.source), in.source))})));
  if (factors.empty()) return Formula::top();
  if (factors.size() == 1) return factors.front();
  return Formula::conj(std::move(factors));
}

Formula encode_normal(const Framework& h) {
  std::vector<Formula> conjuncts;
  for (std::size_t a = 0; a < h.size(); ++a)
    conjuncts.push_back(Formula::iff(Formula::var(h.element(a), a), encode_element(h, a)));
  if (conjuncts.size() == 1) return conjuncts.front();
  return Formula::conj(std::move(conjuncts));
}

template <class T>
bool is_model(const Formula& encoding, std::span<const T> values, const LogicSystem& logic) {
  return evaluate<T>(encoding, values, logic) == T(1);
}

template <class T>
bool is_model(const Framework& h, std::span<const T> values, const LogicSystem& logic) {
  if (values.size() != h.size()) throw EvaluationError("assignment is not total over U");
  return is_model<T>(encode_normal(h), values, logic);
}

template bool is_model<Rational>(const Formula&, std::span<const Rational>, const LogicSystem&);
template bool is_model<double>(const Formula&, std::span<const double>, const LogicSystem&);
template bool is_model<Rational>(const Framework&, std::span<const Rational>, const LogicSystem&);
template bool is_model<double>(const Framework&, std::span<const double>, const LogicSystem&);

}  // namespace hafs
