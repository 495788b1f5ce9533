#pragma once

// Parallel backtracking over {0, 1/2, 1}^n shared by the labelling and the
// ternary-equation enumerators.

#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hafs/values.hpp"

namespace hafs::detail {

struct SearchPlan {
  std::size_t size = 0;
  // checks_at[k]: elements whose constraint becomes decidable once positions
  // 0..k are assigned (k = max of the element and all its dependencies).
  std::vector<std::vector<std::size_t>> checks_at;
  std::vector<std::optional<Truth3>> forced;
};

inline SearchPlan make_plan(std::size_t n, const std::vector<std::vector<std::size_t>>& deps,
                            std::vector<std::optional<Truth3>> forced) {
  SearchPlan plan;
  plan.size = n;
  plan.checks_at.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t last = a;
    for (auto d : deps[a]) last = std::max(last, d);
    plan.checks_at[last].push_back(a);
  }
  plan.forced = std::move(forced);
  return plan;
}

/// `check(a, values)` must return whether element a's constraint holds; it is
/// only called when a and all of its dependencies are assigned.
template <class Check>
std::vector<std::vector<Truth3>> ternary_search(const SearchPlan& plan, Check check) {
  const std::size_t n = plan.size;
  if (n == 0) return {std::vector<Truth3>{}};

  auto choices = [&](std::size_t k) -> std::span<const Truth3> {
    if (plan.forced[k]) {
      const auto& f = *plan.forced[k];
      return {&f, 1};
    }
    return kTruthValues;
  };
  auto consistent_at = [&](std::size_t k, const std::vector<Truth3>& v) {
    for (auto a : plan.checks_at[k])
      if (!check(a, std::span<const Truth3>(v))) return false;
    return true;
  };

  // Split on the first `depth` positions.
  std::size_t depth = 0, prefixes = 1;
  while (depth < n && prefixes < 243) prefixes *= choices(depth++).size();

  std::vector<std::vector<std::vector<Truth3>>> buckets(prefixes);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t p = 0; p < prefixes; ++p) {
    std::vector<Truth3> v(n, Truth3::Zero);
    // decode most-significant-first so bucket order is lexicographic
    std::size_t rem = p, radix = prefixes;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      auto c = choices(k);
      radix /= c.size();
      v[k] = c[rem / radix];
      rem %= radix;
      ok = consistent_at(k, v);
    }
    if (!ok) continue;
    if (depth == n) {
      buckets[p].push_back(v);
      continue;
    }
    // iterative DFS over positions depth..n-1
    std::vector<std::size_t> next(n, 0);
    std::size_t k = depth;
    while (true) {
      auto c = choices(k);
      if (next[k] == c.size()) {
        next[k] = 0;
        if (k == depth) break;
        --k;
        continue;
      }
      v[k] = c[next[k]++];
      if (!consistent_at(k, v)) continue;
      if (k + 1 == n) {
        buckets[p].push_back(v);
      } else {
        ++k;
      }
    }
  }

  std::vector<std::vector<Truth3>> out;
  for (auto& b : buckets)
    for (auto& v : b) out.push_back(std::move(v));
  return out;
}

}  // namespace hafs::detail
