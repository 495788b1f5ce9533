#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hafs {

enum class ElementKind : std::uint8_t { Argument = 0, Attack = 1, Support = 2 };

std::string_view kind_prefix(ElementKind kind);  // "arg" / "att" / "supp"

/// A member of U = A ∪ R ∪ T. Names are unique across the whole framework,
/// so ordering by (kind, name) coincides with ordering the qualified strings
/// "arg:x" < "att:x" < "supp:x".
struct ElementId {
  ElementKind kind = ElementKind::Argument;
  std::string name;

  std::string qualified() const;  // "arg:a", "att:r1", "supp:t1"
  static ElementId parse_qualified(std::string_view text);

  friend bool operator==(const ElementId&, const ElementId&) = default;
  friend std::strong_ordering operator<=>(const ElementId& a, const ElementId& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.name.compare(b.name) <=> 0;
  }
};

bool is_valid_name(std::string_view name);

struct Relation {
  ElementId id;  // kind Attack or Support
  ElementId source;
  ElementId target;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Incoming edge of an element: the source and the relation object carrying it.
struct Incoming {
  std::size_t source;
  std::size_t relation;
};

class FrameworkError : public std::runtime_error {
 public:
  enum class Code {
    Syntax,
    DuplicateName,
    DuplicateRelation,
    DanglingReference,
    DefinitionalCycle,
    SelfReference,
    InvalidName,
    Infeasible,
  };
  FrameworkError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

class ParseError : public FrameworkError {
 public:
  ParseError(Code code, std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Raw declaration of a relation before name resolution.
struct RelationDecl {
  std::string id;
  std::string source;
  std::string target;
};

/// A validated higher-order argumentation framework with supports.
///
/// Elements are indexed 0..size()-1 in canonical order: arguments, then
/// attacks, then supports, each block sorted by name. Every per-element
/// array in the library (labellings, assignments, element sets) uses this
/// index. Immutable after construction.
class Framework {
 public:
  Framework() = default;

  /// Validates and builds. Throws FrameworkError on duplicate names, duplicate
  /// (kind, source, target) triples, dangling or self references, or a cycle
  /// in the relation-definition graph.
  static Framework build(std::vector<std::string> arguments, std::vector<RelationDecl> attacks,
                         std::vector<RelationDecl> supports);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t num_arguments() const noexcept { return num_args_; }
  std::size_t num_attacks() const noexcept { return attacks_.size(); }
  std::size_t num_supports() const noexcept { return supports_.size(); }

  const ElementId& element(std::size_t i) const { return elements_.at(i); }
  std::span<const ElementId> elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> index_of(const ElementId& id) const;

  std::span<const Relation> attacks() const noexcept { return attacks_; }
  std::span<const Relation> supports() const noexcept { return supports_; }

  /// Attackers {(b, r_b^a)} of element i, sorted by relation id.
  std::span<const Incoming> attackers(std::size_t i) const { return attackers_.at(i); }
  /// Supporters {(c, t_c^a)} of element i, sorted by relation id.
  std::span<const Incoming> supporters(std::size_t i) const { return supporters_.at(i); }

  /// For a relation element index, its (source, target) element indices.
  std::pair<std::size_t, std::size_t> endpoints(std::size_t relation) const;

  bool has_incoming(std::size_t i) const {
    return !attackers_.at(i).empty() || !supporters_.at(i).empty();
  }

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.elements_ == b.elements_ && a.attacks_ == b.attacks_ && a.supports_ == b.supports_;
  }

 private:
  std::size_t num_args_ = 0;
  std::vector<ElementId> elements_;
  std::vector<Relation> attacks_;
  std::vector<Relation> supports_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::vector<std::vector<Incoming>> attackers_;
  std::vector<std::vector<Incoming>> supporters_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;  // indexed by element
};

/// Parses the `arg(x). att(r,x,y). supp(t,x,y).` text format.
Framework parse(std::string_view text);

/// One statement per line: arguments, attacks, supports, each sorted by id.
std::string serialize(const Framework& h);

/// Stable 64-bit FNV-1a digest of the canonical serialization, as 16 hex digits.
std::string digest(const Framework& h);

/// True iff the graph of support pairs (source -> target) has no cycle.
bool is_support_acyclic(const Framework& h);

struct RandomOptions {
  std::size_t num_arguments = 1;
  std::size_t num_attacks = 0;
  std::size_t num_supports = 0;
  std::uint64_t seed = 0;
  bool support_acyclic = false;
  double higher_order_prob = 0.0;
};

/// Deterministic random framework. Relations are created in sequence and only
/// reference arguments or earlier relations. Throws FrameworkError(Infeasible)
/// when the requested counts cannot be met.
Framework generate_random(const RandomOptions& options);

}  // namespace hafs
