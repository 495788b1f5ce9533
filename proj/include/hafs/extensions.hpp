#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hafs/element_set.hpp"
#include "hafs/framework.hpp"
#include "hafs/labellings.hpp"

namespace hafs {

/// b ∈ B and the attack (b, a) exists and is itself in B.
bool directly_defeats(const Framework& h, std::size_t b, std::size_t a, const ElementSet& B);

/// There is an acyclic support chain (g_n,g_{n-1}),...,(g_1,a) inside T ∩ B
/// whose head g_n is attacked by b through an attack in R ∩ B, and b ∈ B.
/// Searches backward from a over supports in B, never revisiting a node on the
/// current path.
bool indirectly_defeats(const Framework& h, std::size_t b, std::size_t a, const ElementSet& B);

/// Elements defeated (directly or indirectly) by some member of B w.r.t. B.
///
/// Computed as a closure: start from the directly defeated elements and follow
/// supports in T ∩ B forward. A shortest such walk is a simple path, so the
/// closure coincides with the acyclic-chain definition.
ElementSet dft(const Framework& h, const ElementSet& B);

/// Elements defended by B: every attack (b,a) has b or r_b^a defeated by B;
/// every support (c,a) has c ∈ B or t_c^a defeated by B.
ElementSet dfd(const Framework& h, const ElementSet& B);

/// Same as dfd, with dft(B) supplied by the caller.
ElementSet dfd(const Framework& h, const ElementSet& B, const ElementSet& defeated);

struct SetClass {
  bool conflict_free = false;
  bool admissible = false;
  bool complete = false;
  bool stable_eligible = false;  // E ∪ dft(E) = U
};

SetClass classify_set(const Framework& h, const ElementSet& E);

struct ExtensionSelection {
  std::vector<ElementSet> extensions;
  std::optional<std::string> diagnostic;
};

/// Exhaustive 2^|U| scan, split across OpenMP threads by subset index.
/// Results are ordered by cardinality, then lexicographically.
std::vector<ElementSet> complete_extensions(const Framework& h,
                                            std::size_t max_elements = bounds::kExtensions);

/// Grounded, preferred and stable selection from the complete family.
ExtensionSelection select_extensions(const Framework& h, const std::vector<ElementSet>& complete,
                                     Semantics semantics);

ExtensionSelection enumerate_extensions(const Framework& h, Semantics semantics,
                                        std::size_t max_elements = bounds::kExtensions);

/// L(a) = 1 iff a ∈ E, 0 iff a ∈ dft(E), 1/2 otherwise.
/// Throws std::invalid_argument if E is not a complete extension.
Labelling3 extension_derived_labelling(const Framework& h, const ElementSet& E);

}  // namespace hafs
