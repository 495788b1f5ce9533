#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hafs/element_set.hpp"
#include "hafs/framework.hpp"
#include "hafs/values.hpp"

namespace hafs {

/// Total map U -> {0, 1/2, 1}, indexed by framework element index.
struct Labelling3 {
  std::vector<Truth3> values;

  std::size_t size() const noexcept { return values.size(); }
  Truth3 operator[](std::size_t i) const { return values[i]; }

  friend bool operator==(const Labelling3&, const Labelling3&) = default;
  friend auto operator<=>(const Labelling3&, const Labelling3&) = default;
};

/// Builds a labelling from (name -> label) pairs; unnamed elements throw.
Labelling3 make_labelling(const Framework& h,
                          std::initializer_list<std::pair<std::string_view, Truth3>> labels);

/// The value the adjacency conditions force on element `a`, given the values of
/// its attackers, supporters and the relation objects carrying them.
Truth3 required_label(const Framework& h, std::size_t a, std::span<const Truth3> values);

/// Throws std::invalid_argument if L is not total over U.
bool is_adjacent_complete(const Framework& h, const Labelling3& labelling);

/// All adjacent complete labellings, in lexicographic order over element
/// indices with 0 < 1/2 < 1. Backtracking search with elements checked as
/// soon as all their sources are fixed; source-free elements are pre-forced
/// to 1. The search space is split across OpenMP threads by value prefix.
std::vector<Labelling3> enumerate_adjacent_complete(const Framework& h,
                                                    std::size_t max_elements = bounds::kLabellings);

ElementSet core(const Labelling3& labelling);

struct LabellingSelection {
  std::vector<Labelling3> labellings;
  std::optional<std::string> diagnostic;  // set when no least core exists
};

/// Grounded: the labellings whose core is the ⊆-least among all cores.
/// Preferred: ⊆-maximal cores. Stable: preferred with no 1/2 labels.
/// Complete returns the input unchanged.
LabellingSelection select_labellings(const Framework& h, std::span<const Labelling3> complete,
                                     Semantics semantics);

}  // namespace hafs
