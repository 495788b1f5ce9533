#include "hafs/reference.hpp"

#include "hafs/extensions.hpp"

namespace hafs::reference {

namespace {

// Calls f on each vector of {0,1/2,1}^n in lexicographic order.
template <class F>
void for_each_ternary(std::size_t n, F f) {
  std::vector<Truth3> v(n, Truth3::Zero);
  while (true) {
    f(v);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (v[k] != Truth3::One) {
        v[k] = static_cast<Truth3>(static_cast<int>(v[k]) + 1);
        for (std::size_t j = k + 1; j < n; ++j) v[j] = Truth3::Zero;
        break;
      }
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

std::vector<Labelling3> enumerate_adjacent_complete(const Framework& h) {
  std::vector<Labelling3> out;
  for_each_ternary(h.size(), [&](const std::vector<Truth3>& v) {
    Labelling3 l{v};
    if (is_adjacent_complete(h, l)) out.push_back(std::move(l));
  });
  return out;
}

std::vector<ElementSet> complete_extensions(const Framework& h) {
  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << h.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto E = ElementSet::from_mask(h.size(), mask);
    if (classify_set(h, E).complete) out.push_back(std::move(E));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet dft_by_definition(const Framework& h, const ElementSet& B) {
  ElementSet out(h.size());
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = 0; b < h.size(); ++b)
      if (B.contains(b) && (directly_defeats(h, b, a, B) || indirectly_defeats(h, b, a, B))) {
        out.insert(a);
        break;
      }
  return out;
}

std::vector<std::vector<Truth3>> enumerate_ternary_solutions(const EquationSystem& sys) {
  std::vector<std::vector<Truth3>> out;
  for_each_ternary(sys.size(), [&](const std::vector<Truth3>& v) {
    std::vector<Rational> q;
    q.reserve(v.size());
    for (auto t : v) q.push_back(to_rational(t));
    if (residual<Rational>(sys, q) == Rational(0)) out.push_back(v);
  });
  return out;
}

}  // namespace hafs::reference
