#include "hafs/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace hafs::json {

json labelling(const Framework& h, const Labelling3& l) {
  json out = json::object();
  for (std::size_t i = 0; i < h.size(); ++i) out[h.element(i).qualified()] = to_string(l[i]);
  return out;
}

json labellings(const Framework& h, std::span<const Labelling3> ls) {
  json arr = json::array();
  for (const auto& l : ls) arr.push_back(labelling(h, l));
  return json{{"labellings", std::move(arr)}};
}

json element_set(const Framework& h, const ElementSet& e) {
  json arr = json::array();
  for (auto i : e.members()) arr.push_back(h.element(i).qualified());
  return arr;
}

json extensions(const Framework& h, std::span<const ElementSet> es) {
  json arr = json::array();
  for (const auto& e : es) arr.push_back(element_set(h, e));
  return json{{"extensions", std::move(arr)}};
}

json formula(const Formula& f) {
  using Op = Formula::Op;
  auto with_args = [&](const char* op) {
    json args = json::array();
    for (const auto& c : f.children()) args.push_back(formula(c));
    return json{{"op", op}, {"args", std::move(args)}};
  };
  switch (f.op()) {
    case Op::Var: return json{{"var", f.id().qualified()}};
    case Op::Top: return json{{"op", "top"}};
    case Op::Bottom: return json{{"op", "bottom"}};
    case Op::Not: return with_args("not");
    case Op::And: return with_args("and");
    case Op::Or: return with_args("or");
    case Op::Implies: return with_args("implies");
    case Op::Iff: return with_args("iff");
  }
  return nullptr;
}

Formula formula_from_json(const json& j, const Framework& h) {
  if (j.contains("var")) {
    auto id = ElementId::parse_qualified(j.at("var").get<std::string>());
    auto slot = h.index_of(id);
    if (!slot) throw std::invalid_argument("formula variable '" + id.qualified() + "' is not in U");
    return Formula::var(id, *slot);
  }
  auto op = j.at("op").get<std::string>();
  if (op == "top") return Formula::top();
  if (op == "bottom") return Formula::bottom();
  std::vector<Formula> args;
  for (const auto& a : j.at("args")) args.push_back(formula_from_json(a, h));
  auto arity = [&](std::size_t k) {
    if (args.size() != k) throw std::invalid_argument("operator '" + op + "' expects " + std::to_string(k) + " args");
  };
  if (op == "not") {
    arity(1);
    return Formula::negate(args[0]);
  }
  if (op == "and") return Formula::conj(std::move(args));
  if (op == "or") return Formula::disj(std::move(args));
  if (op == "implies") {
    arity(2);
    return Formula::implies(args[0], args[1]);
  }
  if (op == "iff") {
    arity(2);
    return Formula::iff(args[0], args[1]);
  }
  throw std::invalid_argument("unknown formula operator '" + op + "'");
}

double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json solve_report(const Framework& h, const SolveReport& r) {
  json sol = json::object();
  for (std::size_t i = 0; i < h.size(); ++i) sol[h.element(i).qualified()] = round12(r.solution[i]);
  return json{{"solution", std::move(sol)},
              {"residual", round12(r.residual)},
              {"iterations", r.iterations},
              {"restart_index", r.restart_index},
              {"converged", r.converged}};
}

json ternary_solutions(const Framework& h, std::span<const std::vector<Truth3>> sols) {
  json arr = json::array();
  for (const auto& v : sols) arr.push_back(labelling(h, Labelling3{v}));
  return json{{"solutions", std::move(arr)}};
}

json verification_report(const VerificationReport& r) {
  json out{{"theorem", std::string(to_string(r.theorem))},
           {"framework_digest", r.framework_digest},
           {"passed", r.passed},
           {"checked", r.checked}};
  if (!r.logic.empty()) out["logic"] = r.logic;
  if (r.counterexample) {
    json assignment = json::object();
    for (const auto& [id, value] : r.counterexample->assignment) assignment[id] = value;
    out["counterexample"] = json{{"framework", r.counterexample->framework_text},
                                 {"assignment", std::move(assignment)},
                                 {"explanation", r.counterexample->explanation}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

namespace {

bool is_decimal_text(const std::string& s) { return s.find_first_of(".eE") != std::string::npos; }

}  // namespace

Assignment parse_assignment(const json& j, const Framework& h) {
  if (!j.is_object()) throw std::invalid_argument("assignment must be a JSON object");
  std::vector<std::optional<std::size_t>> slots;
  std::vector<json> values;
  bool decimal = false;
  for (const auto& [key, value] : j.items()) {
    std::optional<std::size_t> slot =
        key.find(':') != std::string::npos ? h.index_of(ElementId::parse_qualified(key)) : h.index_of(key);
    if (!slot) throw std::invalid_argument("assignment names unknown element '" + key + "'");
    if (value.is_number_float() || (value.is_string() && is_decimal_text(value.get<std::string>())))
      decimal = true;
    else if (!value.is_number_integer() && !value.is_string())
      throw std::invalid_argument("value for '" + key + "' must be a number or string");
    slots.push_back(slot);
    values.push_back(value);
  }

  std::vector<char> seen(h.size(), 0);
  auto mark = [&](std::size_t slot) {
    if (seen[slot]) throw std::invalid_argument("element '" + h.element(slot).name + "' assigned twice");
    seen[slot] = 1;
  };
  auto check_total = [&] {
    for (std::size_t i = 0; i < h.size(); ++i)
      if (!seen[i]) throw std::invalid_argument("assignment misses element '" + h.element(i).qualified() + "'");
  };

  if (decimal) {
    std::vector<double> out(h.size());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      mark(*slots[k]);
      const auto& v = values[k];
      if (!v.is_string())
        out[*slots[k]] = v.get<double>();
      else if (auto text = v.get<std::string>(); text.find('/') != std::string::npos)
        out[*slots[k]] = to_double(parse_rational(text));
      else
        out[*slots[k]] = std::stod(text);
    }
    check_total();
    return out;
  }
  std::vector<Rational> out(h.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    mark(*slots[k]);
    const auto& v = values[k];
    out[*slots[k]] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<std::int64_t>());
  }
  check_total();
  return out;
}

}  // namespace hafs::json
