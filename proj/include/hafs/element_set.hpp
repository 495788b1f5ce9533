#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hafs {

/// Subset of U, stored as a membership vector over framework element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<std::size_t> members) : bits_(universe, 0) {
    for (auto m : members) insert(m);
  }

  /// Members are the set bits of `mask` (element i <-> bit i).
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.bits_[i] = static_cast<char>((mask >> i) & 1U);
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(std::size_t i) const { return i < bits_.size() && bits_[i]; }
  void insert(std::size_t i) { bits_.at(i) = 1; }
  void erase(std::size_t i) { bits_.at(i) = 0; }

  std::size_t count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }
  bool empty() const { return count() == 0; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(i);
    return out;
  }

  bool subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.contains(i)) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && other.contains(i)) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = static_cast<char>(bits_[i] | other.contains(i));
    return *this;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Canonical order: by cardinality, then lexicographic over sorted members.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    auto ma = a.members(), mb = b.members();
    return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

 private:
  std::vector<char> bits_;
};

enum class Semantics { Complete, Grounded, Preferred, Stable };

inline Semantics parse_semantics(std::string_view text) {
  if (text == "complete") return Semantics::Complete;
  if (text == "grounded") return Semantics::Grounded;
  if (text == "preferred") return Semantics::Preferred;
  if (text == "stable") return Semantics::Stable;
  throw std::invalid_argument("unknown semantics '" + std::string(text) + "'");
}

/// Thrown when an exhaustive enumeration is asked to run above its size bound.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(std::size_t size, std::size_t bound)
      : std::runtime_error("|U| = " + std::to_string(size) + " exceeds the enumeration bound " +
                           std::to_string(bound)) {}
};

namespace bounds {
inline constexpr std::size_t kLabellings = 16;
inline constexpr std::size_t kExtensions = 20;
inline constexpr std::size_t kTernary = 12;
}  // namespace bounds

}  // namespace hafs
