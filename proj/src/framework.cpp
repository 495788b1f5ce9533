#include "hafs/framework.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace hafs {

std::string_view kind_prefix(ElementKind kind) {
  switch (kind) {
    case ElementKind::Argument: return "arg";
    case ElementKind::Attack: return "att";
    case ElementKind::Support: return "supp";
  }
  return "?";
}

std::string ElementId::qualified() const {
  std::string out(kind_prefix(kind));
  out += ':';
  out += name;
  return out;
}

ElementId ElementId::parse_qualified(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw FrameworkError(FrameworkError::Code::InvalidName,
                         "expected kind-qualified id, got '" + std::string(text) + "'");
  auto prefix = text.substr(0, colon);
  ElementId id;
  if (prefix == "arg")
    id.kind = ElementKind::Argument;
  else if (prefix == "att")
    id.kind = ElementKind::Attack;
  else if (prefix == "supp")
    id.kind = ElementKind::Support;
  else
    throw FrameworkError(FrameworkError::Code::InvalidName,
                         "unknown element kind '" + std::string(prefix) + "'");
  id.name = std::string(text.substr(colon + 1));
  if (!is_valid_name(id.name))
    throw FrameworkError(FrameworkError::Code::InvalidName, "invalid name '" + id.name + "'");
  return id;
}

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

ParseError::ParseError(Code code, std::size_t line, std::size_t column, const std::string& msg)
    : FrameworkError(code, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

using Code = FrameworkError::Code;

[[noreturn]] void fail(Code code, const std::string& msg) { throw FrameworkError(code, msg); }

}  // namespace

Framework Framework::build(std::vector<std::string> arguments, std::vector<RelationDecl> attacks,
                           std::vector<RelationDecl> supports) {
  std::map<std::string, ElementKind> kinds;
  auto declare = [&](const std::string& name, ElementKind kind) {
    if (!is_valid_name(name)) fail(Code::InvalidName, "invalid name '" + name + "'");
    if (!kinds.emplace(name, kind).second) fail(Code::DuplicateName, "duplicate name '" + name + "'");
  };
  for (const auto& a : arguments) declare(a, ElementKind::Argument);
  for (const auto& r : attacks) declare(r.id, ElementKind::Attack);
  for (const auto& t : supports) declare(t.id, ElementKind::Support);

  auto resolve = [&](const std::string& name, const std::string& owner) {
    auto it = kinds.find(name);
    if (it == kinds.end())
      fail(Code::DanglingReference, "relation '" + owner + "' references undeclared '" + name + "'");
    return ElementId{it->second, name};
  };

  auto make_relations = [&](std::vector<RelationDecl>& decls, ElementKind kind) {
    std::vector<Relation> out;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& d : decls) {
      if (d.source == d.id || d.target == d.id)
        fail(Code::SelfReference, "relation '" + d.id + "' references itself");
      Relation rel{ElementId{kind, d.id}, resolve(d.source, d.id), resolve(d.target, d.id)};
      if (!seen.emplace(d.source, d.target).second)
        fail(Code::DuplicateRelation, std::string(kind == ElementKind::Attack ? "attack" : "support") +
                                          " (" + d.source + "," + d.target + ") declared twice");
      out.push_back(std::move(rel));
    }
    std::sort(out.begin(), out.end(), [](const Relation& x, const Relation& y) { return x.id < y.id; });
    return out;
  };

  Framework h;
  h.attacks_ = make_relations(attacks, ElementKind::Attack);
  h.supports_ = make_relations(supports, ElementKind::Support);

  std::sort(arguments.begin(), arguments.end());
  h.num_args_ = arguments.size();
  for (auto& a : arguments) h.elements_.push_back(ElementId{ElementKind::Argument, std::move(a)});
  for (const auto& r : h.attacks_) h.elements_.push_back(r.id);
  for (const auto& t : h.supports_) h.elements_.push_back(t.id);
  for (std::size_t i = 0; i < h.elements_.size(); ++i) h.by_name_.emplace(h.elements_[i].name, i);

  const std::size_t n = h.elements_.size();
  h.attackers_.assign(n, {});
  h.supporters_.assign(n, {});
  h.endpoints_.assign(n, {n, n});
  auto index = [&](const ElementId& id) { return h.by_name_.at(id.name); };
  for (const auto& r : h.attacks_) {
    auto ri = index(r.id), s = index(r.source), t = index(r.target);
    h.endpoints_[ri] = {s, t};
    h.attackers_[t].push_back({s, ri});
  }
  for (const auto& r : h.supports_) {
    auto ri = index(r.id), s = index(r.source), t = index(r.target);
    h.endpoints_[ri] = {s, t};
    h.supporters_[t].push_back({s, ri});
  }
  // relations were inserted in id order already; relation index order equals id order

  // Well-foundedness: relation -> relation endpoints must be acyclic.
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    auto [s, t] = h.endpoints_[v];
    for (auto w : {s, t}) {
      if (w >= n || h.elements_[w].kind == ElementKind::Argument) continue;
      if (state[w] == 1)
        fail(Code::DefinitionalCycle, "relations '" + h.elements_[v].name + "' and '" +
                                          h.elements_[w].name + "' are defined in a cycle");
      if (state[w] == 0) visit(w);
    }
    state[v] = 2;
  };
  for (std::size_t v = h.num_args_; v < n; ++v)
    if (state[v] == 0) visit(v);

  return h;
}

std::optional<std::size_t> Framework::index_of(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Framework::index_of(const ElementId& id) const {
  auto i = index_of(id.name);
  if (!i || elements_[*i].kind != id.kind) return std::nullopt;
  return i;
}

std::pair<std::size_t, std::size_t> Framework::endpoints(std::size_t relation) const {
  auto e = endpoints_.at(relation);
  if (e.first >= size()) throw std::out_of_range("element is not a relation");
  return e;
}

// ---------------------------------------------------------------- parsing

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      error(std::string("expected '") + c + "'" + found());
    advance();
  }

  std::string name() {
    skip_space();
    auto start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        advance();
    }
    if (start == pos_) error("expected identifier" + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(Code::Syntax, line_, col_, msg);
  }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

Framework parse(std::string_view text) {
  Lexer lex(text);
  std::vector<std::string> args;
  std::vector<RelationDecl> atts, supps;
  while (!lex.at_end()) {
    auto line = lex.line(), col = lex.column();
    auto keyword = lex.name();
    lex.expect('(');
    if (keyword == "arg") {
      args.push_back(lex.name());
    } else if (keyword == "att" || keyword == "supp") {
      RelationDecl d;
      d.id = lex.name();
      lex.expect(',');
      d.source = lex.name();
      lex.expect(',');
      d.target = lex.name();
      (keyword == "att" ? atts : supps).push_back(std::move(d));
    } else {
      throw ParseError(Code::Syntax, line, col, "unknown statement '" + keyword + "'");
    }
    lex.expect(')');
    lex.expect('.');
  }
  return Framework::build(std::move(args), std::move(atts), std::move(supps));
}

std::string serialize(const Framework& h) {
  std::ostringstream out;
  for (std::size_t i = 0; i < h.num_arguments(); ++i) out << "arg(" << h.element(i).name << ").\n";
  for (const auto& r : h.attacks())
    out << "att(" << r.id.name << "," << r.source.name << "," << r.target.name << ").\n";
  for (const auto& t : h.supports())
    out << "supp(" << t.id.name << "," << t.source.name << "," << t.target.name << ").\n";
  return out.str();
}

std::string digest(const Framework& h) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize(h)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

// Does target reach source through the given adjacency? (Adding source->target
// would then close a cycle.)
bool reaches(const std::vector<std::vector<std::size_t>>& adj, std::size_t from, std::size_t to) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::size_t> stack{from};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    if (seen[v]) continue;
    seen[v] = 1;
    for (auto w : adj[v]) stack.push_back(w);
  }
  return false;
}

}  // namespace

bool is_support_acyclic(const Framework& h) {
  const auto n = h.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& in : h.supporters(i)) adj[in.source].push_back(i);
  std::vector<int> state(n, 0);
  // iterative three-colour DFS
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        auto w = adj[v][next++];
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- random

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Unbiased draw from [0, n) by rejection; avoids implementation-defined
  // std::uniform_int_distribution so output is identical across toolchains.
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

Framework generate_random(const RandomOptions& opt) {
  if (opt.num_arguments < 1) fail(Code::Infeasible, "at least one argument is required");
  if (!(opt.higher_order_prob >= 0.0 && opt.higher_order_prob <= 1.0))
    fail(Code::Infeasible, "higher_order_prob must lie in [0,1]");

  Rng rng(opt.seed);
  std::vector<std::string> names;
  std::vector<std::string> args;
  for (std::size_t i = 1; i <= opt.num_arguments; ++i) {
    args.push_back("a" + std::to_string(i));
    names.push_back(args.back());
  }
  const std::size_t num_relations = opt.num_attacks + opt.num_supports;
  const std::size_t total = opt.num_arguments + num_relations;

  // Creation sequence: a seeded shuffle of the relation kinds.
  std::vector<ElementKind> order(opt.num_attacks, ElementKind::Attack);
  order.insert(order.end(), opt.num_supports, ElementKind::Support);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<RelationDecl> atts, supps;
  std::set<std::pair<std::size_t, std::size_t>> att_pairs, supp_pairs;
  std::vector<std::vector<std::size_t>> supp_adj(total);
  std::size_t next_att = 1, next_supp = 1;

  for (auto kind : order) {
    const std::size_t available = names.size();
    const std::size_t relations_so_far = available - opt.num_arguments;
    auto& pairs = kind == ElementKind::Attack ? att_pairs : supp_pairs;
    auto acceptable = [&](std::size_t s, std::size_t t) {
      if (pairs.count({s, t})) return false;
      if (kind == ElementKind::Support && opt.support_acyclic) {
        if (s == t) return false;
        if (reaches(supp_adj, t, s)) return false;
      }
      return true;
    };
    auto draw_endpoint = [&]() -> std::size_t {
      if (relations_so_far > 0 && rng.unit() < opt.higher_order_prob)
        return opt.num_arguments + rng.below(relations_so_far);
      return rng.below(opt.num_arguments);
    };

    std::optional<std::pair<std::size_t, std::size_t>> chosen;
    for (int attempt = 0; attempt < 64 && !chosen; ++attempt) {
      auto s = draw_endpoint(), t = draw_endpoint();
      if (acceptable(s, t)) chosen = {s, t};
    }
    if (!chosen) {
      std::vector<std::pair<std::size_t, std::size_t>> candidates;
      for (std::size_t s = 0; s < available; ++s)
        for (std::size_t t = 0; t < available; ++t)
          if (acceptable(s, t)) candidates.emplace_back(s, t);
      if (candidates.empty())
        fail(Code::Infeasible, "cannot place another " +
                                   std::string(kind == ElementKind::Attack ? "attack" : "support") +
                                   " without duplicating a pair or closing a support cycle");
      chosen = candidates[rng.below(candidates.size())];
    }

    auto [s, t] = *chosen;
    pairs.insert({s, t});
    RelationDecl d;
    if (kind == ElementKind::Attack) {
      d.id = "r" + std::to_string(next_att++);
    } else {
      d.id = "t" + std::to_string(next_supp++);
      supp_adj[s].push_back(t);
    }
    d.source = names[s];
    d.target = names[t];
    names.push_back(d.id);
    (kind == ElementKind::Attack ? atts : supps).push_back(std::move(d));
  }
  return Framework::build(std::move(args), std::move(atts), std::move(supps));
}

}  // namespace hafs
