#include "hafs/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hafs/bridge.hpp"
#include "hafs/equations.hpp"
#include "hafs/extensions.hpp"
#include "hafs/json_io.hpp"
#include "hafs/labellings.hpp"
#include "hafs/logic.hpp"

namespace hafs::cli {

namespace {

using json_t = hafs::json::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bounds {
  std::size_t labellings = bounds::kLabellings;
  std::size_t extensions = bounds::kExtensions;
  std::size_t ternary = bounds::kTernary;
  std::optional<std::size_t> verify;
};

Bounds read_bounds() {
  Bounds b;
  const char* env = std::getenv("HAFS_MAX_U");
  if (env == nullptr || *env == '\0') return b;
  std::size_t value = 0;
  try {
    std::size_t used = 0;
    value = std::stoul(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("HAFS_MAX_U must be a non-negative integer, got '") + env + "'");
  }
  b.labellings = b.extensions = b.ternary = value;
  b.verify = value;
  return b;
}

struct Input {
  std::string path;
  std::string text;
  bool has_text = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("input", path, "framework file, or - for stdin");
    cmd->add_option("--text", text, "framework given inline")->each([this](const std::string&) { has_text = true; });
  }

  Framework load(std::istream& in) const {
    if (has_text && !path.empty()) throw UsageError("give either an input path or --text, not both");
    if (has_text) return parse(text);
    if (path.empty()) throw UsageError("missing input: give a path, - for stdin, or --text");
    std::stringstream buffer;
    if (path == "-") {
      buffer << in.rdbuf();
    } else {
      std::ifstream file(path);
      if (!file) throw UsageError("cannot open '" + path + "'");
      buffer << file.rdbuf();
    }
    return parse(buffer.str());
  }
};

void emit(std::ostream& out, const json_t& j) { out << j.dump(2) << '\n'; }

std::string format_value(const Rational& r) { return to_string(r); }
double format_value(double x) { return json::round12(x); }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher-order argumentation frameworks with supports", "hafs"};
  app.require_subcommand(1, 1);

  Input input;
  std::string semantics = "complete";
  std::string logic_name;
  std::string format = "text";
  std::string assignment_text;
  SolveOptions solve;
  bool exact = false;
  std::vector<std::string> theorems;
  RandomOptions random;

  auto* check = app.add_subcommand("check", "validate and print the canonical form");
  input.add_to(check);

  auto* labellings = app.add_subcommand("labellings", "adjacent complete labelling semantics");
  input.add_to(labellings);
  labellings->add_option("--semantics", semantics)->check(CLI::IsMember({"complete", "grounded", "preferred", "stable"}));

  auto* extensions = app.add_subcommand("extensions", "extension-based semantics");
  input.add_to(extensions);
  extensions->add_option("--semantics", semantics)->check(CLI::IsMember({"complete", "grounded", "preferred", "stable"}));

  const auto logics = CLI::IsMember({"l3", "godel", "product", "lukasiewicz"});

  auto* encode = app.add_subcommand("encode", "normal encoding of the framework");
  input.add_to(encode);
  encode->add_option("--logic", logic_name)->check(logics);
  encode->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* eval = app.add_subcommand("eval", "evaluate the encoding under an assignment");
  input.add_to(eval);
  eval->add_option("--logic", logic_name)->check(logics);
  eval->add_option("--assignment", assignment_text, "JSON object: element -> value")->required();

  auto* solve_cmd = app.add_subcommand("solve", "solve the encoded equational system");
  input.add_to(solve_cmd);
  solve_cmd->add_option("--logic", logic_name)->check(logics);
  solve_cmd->add_option("--damping", solve.damping);
  solve_cmd->add_option("--tol", solve.tolerance);
  solve_cmd->add_option("--max-iter", solve.max_iter);
  solve_cmd->add_option("--restarts", solve.restarts);
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_flag("--exact", exact, "enumerate exact {0,1/2,1} solutions");

  auto* verify_cmd = app.add_subcommand("verify", "check theorems empirically on the framework");
  input.add_to(verify_cmd);
  verify_cmd->add_option("--theorem", theorems, "T1 T2 T_PL3 EQ_G EQ_P EQ_L T16 IDEM CORR_G")
      ->required()
      ->delimiter(',');
  verify_cmd->add_option("--logic", logic_name)->check(logics);
  verify_cmd->add_option("--seed", solve.seed);

  auto* random_cmd = app.add_subcommand("random", "generate a seeded random framework");
  random_cmd->add_option("--args", random.num_arguments)->required();
  random_cmd->add_option("--atts", random.num_attacks);
  random_cmd->add_option("--supps", random.num_supports);
  random_cmd->add_option("--seed", random.seed);
  random_cmd->add_flag("--acyclic-supports", random.support_acyclic);
  random_cmd->add_option("--higher-order-prob", random.higher_order_prob)->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Bounds bounds = read_bounds();

    if (*random_cmd) {
      out << serialize(generate_random(random));
      return kExitOk;
    }

    const Framework h = input.load(in);

    if (*check) {
      out << serialize(h);
      return kExitOk;
    }

    if (*labellings) {
      auto complete = enumerate_adjacent_complete(h, bounds.labellings);
      auto selection = select_labellings(h, complete, parse_semantics(semantics));
      auto j = json::labellings(h, selection.labellings);
      if (selection.diagnostic) j["diagnostic"] = *selection.diagnostic;
      emit(out, j);
      return kExitOk;
    }

    if (*extensions) {
      auto selection = enumerate_extensions(h, parse_semantics(semantics), bounds.extensions);
      auto j = json::extensions(h, selection.extensions);
      if (selection.diagnostic) j["diagnostic"] = *selection.diagnostic;
      emit(out, j);
      return kExitOk;
    }

    if (*encode) {
      auto f = encode_normal(h);
      if (format == "json") {
        json_t j{{"logic", logic_name.empty() ? "l3" : logic_name}, {"formula", json::formula(f)}};
        emit(out, j);
      } else {
        out << to_text(f) << '\n';
      }
      return kExitOk;
    }

    if (*eval) {
      const auto logic = LogicSystem::from_name(logic_name.empty() ? "l3" : logic_name);
      json_t parsed;
      try {
        parsed = json_t::parse(assignment_text);
      } catch (const json_t::parse_error& e) {
        throw UsageError(std::string("--assignment is not valid JSON: ") + e.what());
      }
      json::Assignment assignment;
      try {
        assignment = json::parse_assignment(parsed, h);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto f = encode_normal(h);
      json_t j;
      std::visit(
          [&](const auto& values) {
            using T = typename std::decay_t<decltype(values)>::value_type;
            std::span<const T> view(values);
            const T value = evaluate<T>(f, view, logic);
            j = json_t{{"logic", logic.name()},
                       {"mode", std::is_same_v<T, Rational> ? "exact" : "float"},
                       {"value", format_value(value)},
                       {"model", value == T(1)}};
          },
          assignment);
      emit(out, j);
      return kExitOk;
    }

    if (*solve_cmd) {
      const auto sys = build_equations(h, LogicSystem::from_name(logic_name.empty() ? "godel" : logic_name));
      if (exact) {
        auto sols = enumerate_ternary_solutions(sys, bounds.ternary);
        auto j = json::ternary_solutions(h, sols);
        j["logic"] = sys.logic().name();
        emit(out, j);
        return kExitOk;
      }
      auto reports = solve_fixed_point(sys, solve);
      json_t arr = json_t::array();
      bool any_converged = false;
      for (const auto& r : reports) {
        arr.push_back(json::solve_report(h, r));
        any_converged = any_converged || r.converged;
      }
      emit(out, json_t{{"logic", sys.logic().name()}, {"reports", std::move(arr)}});
      return any_converged ? kExitOk : kExitDomain;
    }

    if (*verify_cmd) {
      VerifyOptions options;
      if (!logic_name.empty()) options.logic = logic_name;
      options.seed = solve.seed;
      options.solve.seed = solve.seed;
      if (bounds.verify) options.max_elements = *bounds.verify;
      std::vector<TheoremId> ids;
      for (const auto& t : theorems) {
        try {
          ids.push_back(parse_theorem(t));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      json_t arr = json_t::array();
      bool all_passed = true;
      for (auto id : ids) {
        try {
          auto report = verify(h, id, options);
          all_passed = all_passed && report.passed;
          arr.push_back(json::verification_report(report));
        } catch (const PreconditionError& e) {
          all_passed = false;
          arr.push_back(json_t{{"theorem", std::string(to_string(id))},
                               {"framework_digest", digest(h)},
                               {"passed", false},
                               {"error", e.what()}});
        }
      }
      emit(out, arr);
      return all_passed ? kExitOk : kExitDomain;
    }
  } catch (const UsageError& e) {
    err << "hafs: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "hafs: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FrameworkError& e) {
    err << "hafs: " << e.what() << '\n';
    return e.code() == FrameworkError::Code::Infeasible ? kExitDomain : kExitUsage;
  } catch (const std::exception& e) {
    err << "hafs: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace hafs::cli
