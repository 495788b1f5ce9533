#include "hafs/labellings.hpp"

#include <algorithm>
#include <stdexcept>

#include "ternary_search.hpp"

namespace hafs {

Labelling3 make_labelling(const Framework& h,
                          std::initializer_list<std::pair<std::string_view, Truth3>> labels) {
  Labelling3 out{std::vector<Truth3>(h.size(), Truth3::Zero)};
  std::vector<char> seen(h.size(), 0);
  for (const auto& [name, value] : labels) {
    auto i = h.index_of(name);
    if (!i) throw std::invalid_argument("unknown element '" + std::string(name) + "'");
    out.values[*i] = value;
    seen[*i] = 1;
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(h.size()))
    throw std::invalid_argument("labelling is not total");
  return out;
}

Truth3 required_label(const Framework& h, std::size_t a, std::span<const Truth3> v) {
  bool all_clear = true;  // the "= 1" condition
  for (const auto& in : h.attackers(a)) {
    auto b = v[in.source], r = v[in.relation];
    if (b == Truth3::One && r == Truth3::One) return Truth3::Zero;
    if (b != Truth3::Zero && r != Truth3::Zero) all_clear = false;
  }
  for (const auto& in : h.supporters(a)) {
    auto c = v[in.source], t = v[in.relation];
    if (c == Truth3::Zero && t == Truth3::One) return Truth3::Zero;
    if (c != Truth3::One && t != Truth3::Zero) all_clear = false;
  }
  return all_clear ? Truth3::One : Truth3::Half;
}

bool is_adjacent_complete(const Framework& h, const Labelling3& labelling) {
  if (labelling.size() != h.size())
    throw std::invalid_argument("labelling has " + std::to_string(labelling.size()) +
                                " values for |U| = " + std::to_string(h.size()));
  for (std::size_t a = 0; a < h.size(); ++a)
    if (labelling[a] != required_label(h, a, labelling.values)) return false;
  return true;
}

std::vector<Labelling3> enumerate_adjacent_complete(const Framework& h, std::size_t max_elements) {
  const auto n = h.size();
  if (n > max_elements) throw BoundExceeded(n, max_elements);

  std::vector<std::vector<std::size_t>> deps(n);
  std::vector<std::optional<Truth3>> forced(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& in : h.attackers(a)) deps[a].insert(deps[a].end(), {in.source, in.relation});
    for (const auto& in : h.supporters(a)) deps[a].insert(deps[a].end(), {in.source, in.relation});
    if (!h.has_incoming(a)) forced[a] = Truth3::One;
  }
  auto plan = detail::make_plan(n, deps, std::move(forced));
  auto raw = detail::ternary_search(plan, [&](std::size_t a, std::span<const Truth3> v) {
    return v[a] == required_label(h, a, v);
  });

  std::vector<Labelling3> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.push_back(Labelling3{std::move(v)});
  return out;
}

ElementSet core(const Labelling3& labelling) {
  ElementSet s(labelling.size());
  for (std::size_t i = 0; i < labelling.size(); ++i)
    if (labelling[i] == Truth3::One) s.insert(i);
  return s;
}

LabellingSelection select_labellings(const Framework& h, std::span<const Labelling3> complete,
                                     Semantics semantics) {
  (void)h;
  LabellingSelection sel;
  std::vector<ElementSet> cores;
  cores.reserve(complete.size());
  for (const auto& l : complete) cores.push_back(core(l));

  switch (semantics) {
    case Semantics::Complete:
      sel.labellings.assign(complete.begin(), complete.end());
      break;
    case Semantics::Grounded: {
      for (std::size_t i = 0; i < complete.size(); ++i) {
        bool least = std::all_of(cores.begin(), cores.end(),
                                 [&](const ElementSet& c) { return cores[i].subset_of(c); });
        if (least) sel.labellings.push_back(complete[i]);
      }
      if (sel.labellings.empty())
        sel.diagnostic = complete.empty() ? "no adjacent complete labelling exists"
                                          : "no labelling has a ⊆-least core";
      else if (sel.labellings.size() > 1)
        sel.diagnostic = "the ⊆-least core is shared by " + std::to_string(sel.labellings.size()) +
                         " labellings";
      break;
    }
    case Semantics::Preferred:
    case Semantics::Stable: {
      for (std::size_t i = 0; i < complete.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < complete.size() && maximal; ++j)
          if (cores[i] != cores[j] && cores[i].subset_of(cores[j])) maximal = false;
        if (!maximal) continue;
        if (semantics == Semantics::Stable &&
            std::any_of(complete[i].values.begin(), complete[i].values.end(),
                        [](Truth3 t) { return t == Truth3::Half; }))
          continue;
        sel.labellings.push_back(complete[i]);
      }
      break;
    }
  }
  return sel;
}

}  // namespace hafs
