#include "hafs/extensions.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace hafs {

bool directly_defeats(const Framework& h, std::size_t b, std::size_t a, const ElementSet& B) {
  if (!B.contains(b)) return false;
  for (const auto& in : h.attackers(a))
    if (in.source == b && B.contains(in.relation)) return true;
  return false;
}

namespace {

bool chain_search(const Framework& h, std::size_t b, std::size_t node, const ElementSet& B,
                  std::vector<char>& on_path) {
  for (const auto& in : h.supporters(node)) {
    auto g = in.source;
    if (!B.contains(in.relation) || on_path[g]) continue;
    // (g, node) extends the chain; g is its head if b attacks g inside B
    if (directly_defeats(h, b, g, B)) return true;
    on_path[g] = 1;
    bool found = chain_search(h, b, g, B, on_path);
    on_path[g] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace

bool indirectly_defeats(const Framework& h, std::size_t b, std::size_t a, const ElementSet& B) {
  if (!B.contains(b)) return false;
  std::vector<char> on_path(h.size(), 0);
  on_path[a] = 1;
  return chain_search(h, b, a, B, on_path);
}

ElementSet dft(const Framework& h, const ElementSet& B) {
  const auto n = h.size();
  ElementSet defeated(n);
  std::vector<std::size_t> frontier;
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& in : h.attackers(a)) {
      if (B.contains(in.source) && B.contains(in.relation)) {
        defeated.insert(a);
        frontier.push_back(a);
        break;
      }
    }
  }
  // forward closure along supports in T ∩ B
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(n);  // source -> (target, support)
  for (std::size_t y = 0; y < n; ++y)
    for (const auto& in : h.supporters(y)) out[in.source].emplace_back(y, in.relation);
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (auto [y, t] : out[x]) {
      if (B.contains(t) && !defeated.contains(y)) {
        defeated.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return defeated;
}

ElementSet dfd(const Framework& h, const ElementSet& B, const ElementSet& defeated) {
  ElementSet defended(h.size());
  for (std::size_t a = 0; a < h.size(); ++a) {
    bool ok = true;
    for (const auto& in : h.attackers(a))
      if (!defeated.contains(in.source) && !defeated.contains(in.relation)) ok = false;
    for (const auto& in : h.supporters(a))
      if (!B.contains(in.source) && !defeated.contains(in.relation)) ok = false;
    if (ok) defended.insert(a);
  }
  return defended;
}

ElementSet dfd(const Framework& h, const ElementSet& B) { return dfd(h, B, dft(h, B)); }

SetClass classify_set(const Framework& h, const ElementSet& E) {
  if (E.universe() != h.size()) throw std::invalid_argument("element set does not match |U|");
  auto defeated = dft(h, E);
  auto defended = dfd(h, E, defeated);
  SetClass c;
  c.conflict_free = !E.intersects(defeated);
  c.admissible = c.conflict_free && E.subset_of(defended);
  c.complete = c.conflict_free && E == defended;
  auto covered = E;
  covered |= defeated;
  c.stable_eligible = covered.count() == h.size();
  return c;
}

namespace {

// Bitmask form of the framework for the subset scan (|U| <= 63).
struct MaskKernel {
  struct Edge {
    std::uint64_t source, relation, target;  // single-bit masks
  };
  std::vector<Edge> attacks, supports;
  // per element: attack edges into it and support edges into it
  std::vector<std::vector<Edge>> att_in, supp_in;
  std::size_t n;

  explicit MaskKernel(const Framework& h) : att_in(h.size()), supp_in(h.size()), n(h.size()) {
    for (std::size_t a = 0; a < n; ++a) {
      for (const auto& in : h.attackers(a)) {
        Edge e{bit(in.source), bit(in.relation), bit(a)};
        attacks.push_back(e);
        att_in[a].push_back(e);
      }
      for (const auto& in : h.supporters(a)) {
        Edge e{bit(in.source), bit(in.relation), bit(a)};
        supports.push_back(e);
        supp_in[a].push_back(e);
      }
    }
  }

  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  std::uint64_t defeated(std::uint64_t B) const {
    std::uint64_t d = 0;
    for (const auto& e : attacks)
      if ((B & e.source) && (B & e.relation)) d |= e.target;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : supports) {
        if ((B & e.relation) && (d & e.source) && !(d & e.target)) {
          d |= e.target;
          changed = true;
        }
      }
    }
    return d;
  }

  std::uint64_t defended(std::uint64_t B, std::uint64_t d) const {
    std::uint64_t out = 0;
    for (std::size_t a = 0; a < n; ++a) {
      bool ok = true;
      for (const auto& e : att_in[a])
        if (!(d & e.source) && !(d & e.relation)) {
          ok = false;
          break;
        }
      if (ok)
        for (const auto& e : supp_in[a])
          if (!(B & e.source) && !(d & e.relation)) {
            ok = false;
            break;
          }
      if (ok) out |= bit(a);
    }
    return out;
  }
};

}  // namespace

std::vector<ElementSet> complete_extensions(const Framework& h, std::size_t max_elements) {
  const auto n = h.size();
  if (n > max_elements || n > 62) throw BoundExceeded(n, std::min<std::size_t>(max_elements, 62));
  MaskKernel kernel(h);
  const std::uint64_t total = std::uint64_t{1} << n;

  const int threads = omp_get_max_threads();
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(threads));
#pragma omp parallel
  {
    auto& local = found[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::uint64_t B = 0; B < total; ++B) {
      auto d = kernel.defeated(B);
      if (B & d) continue;
      if (kernel.defended(B, d) == B) local.push_back(B);
    }
  }

  std::vector<ElementSet> out;
  for (const auto& local : found)
    for (auto mask : local) out.push_back(ElementSet::from_mask(n, mask));
  std::sort(out.begin(), out.end());
  return out;
}

ExtensionSelection select_extensions(const Framework& h, const std::vector<ElementSet>& complete,
                                     Semantics semantics) {
  ExtensionSelection sel;
  switch (semantics) {
    case Semantics::Complete:
      sel.extensions = complete;
      break;
    case Semantics::Grounded:
      for (const auto& e : complete) {
        if (std::all_of(complete.begin(), complete.end(),
                        [&](const ElementSet& other) { return e.subset_of(other); })) {
          sel.extensions.push_back(e);
          break;
        }
      }
      if (sel.extensions.empty())
        sel.diagnostic = complete.empty() ? "no complete extension exists"
                                          : "no ⊆-least complete extension exists";
      break;
    case Semantics::Preferred:
    case Semantics::Stable:
      for (const auto& e : complete) {
        bool maximal = std::none_of(complete.begin(), complete.end(), [&](const ElementSet& other) {
          return other != e && e.subset_of(other);
        });
        if (!maximal) continue;
        if (semantics == Semantics::Stable && !classify_set(h, e).stable_eligible) continue;
        sel.extensions.push_back(e);
      }
      break;
  }
  return sel;
}

ExtensionSelection enumerate_extensions(const Framework& h, Semantics semantics,
                                        std::size_t max_elements) {
  return select_extensions(h, complete_extensions(h, max_elements), semantics);
}

Labelling3 extension_derived_labelling(const Framework& h, const ElementSet& E) {
  if (!classify_set(h, E).complete) throw std::invalid_argument("set is not a complete extension");
  auto defeated = dft(h, E);
  Labelling3 out{std::vector<Truth3>(h.size(), Truth3::Half)};
  for (std::size_t a = 0; a < h.size(); ++a) {
    if (E.contains(a))
      out.values[a] = Truth3::One;
    else if (defeated.contains(a))
      out.values[a] = Truth3::Zero;
  }
  return out;
}

}  // namespace hafs
