#pragma once

#include <string>
#include <vector>

#include "hafs/element_set.hpp"
#include "hafs/framework.hpp"
#include "hafs/labellings.hpp"

namespace testing {

inline const char* const kOneAttack = "arg(a). arg(b). att(r1,a,b).";
inline const char* const kMutual = "arg(a). arg(b). att(r1,a,b). att(r2,b,a).";
inline const char* const kSelfSupport = "arg(a). supp(t1,a,a).";
inline const char* const kSupportedTarget = "arg(a). arg(b). arg(c). supp(t1,c,a). att(r1,b,c).";
inline const char* const kSelfAttack = "arg(a). att(r1,a,a).";

inline std::size_t idx(const hafs::Framework& h, const std::string& name) { return h.index_of(name).value(); }

inline hafs::ElementSet set_of(const hafs::Framework& h, std::initializer_list<const char*> names) {
  hafs::ElementSet s(h.size());
  for (auto n : names) s.insert(idx(h, n));
  return s;
}

// "1", "0" or "h" per element, in canonical element order.
inline hafs::Labelling3 lab(const std::string& code) {
  hafs::Labelling3 l;
  for (char c : code)
    l.values.push_back(c == '1' ? hafs::Truth3::One : c == '0' ? hafs::Truth3::Zero : hafs::Truth3::Half);
  return l;
}

// Random framework with |U| = n drawn from a seed; about half support-acyclic.
inline hafs::Framework random_framework(std::uint64_t seed, std::size_t max_size) {
  std::uint64_t s = seed * 0x9E3779B97F4A7C15ULL + 17;
  auto next = [&] {
    s ^= s >> 33;
    s *= 0xff51afd7ed558ccdULL;
    s ^= s >> 29;
    return s;
  };
  std::size_t n = 1 + next() % max_size;
  hafs::RandomOptions o;
  o.num_arguments = 1 + next() % n;
  std::size_t rest = n - o.num_arguments;
  o.num_supports = rest == 0 ? 0 : next() % (rest + 1);
  o.num_attacks = rest - o.num_supports;
  o.seed = seed;
  o.support_acyclic = (seed % 2) == 0;
  o.higher_order_prob = (next() % 4) * 0.2;
  for (int attempt = 0;; ++attempt) {
    try {
      return hafs::generate_random(o);
    } catch (const hafs::FrameworkError&) {
      if (o.num_supports == 0) throw;
      --o.num_supports;
      ++o.num_attacks;
    }
  }
}

}  // namespace testing
