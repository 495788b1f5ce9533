#pragma once

// Serial, unpruned reference implementations. They follow the definitions
// literally and are kept for cross-checking the parallel kernels and for the
// benchmark comparison.

#include <vector>

#include "hafs/element_set.hpp"
#include "hafs/equations.hpp"
#include "hafs/framework.hpp"
#include "hafs/labellings.hpp"

namespace hafs::reference {

/// Every one of the 3^|U| assignments filtered by is_adjacent_complete.
std::vector<Labelling3> enumerate_adjacent_complete(const Framework& h);

/// Every one of the 2^|U| subsets filtered by classify_set(...).complete.
std::vector<ElementSet> complete_extensions(const Framework& h);

/// dft(B) from the pairwise definition: directly_defeats / indirectly_defeats
/// for every (b, a) with b ∈ B.
ElementSet dft_by_definition(const Framework& h, const ElementSet& B);

/// Every one of the 3^|U| assignments filtered by exact residual 0.
std::vector<std::vector<Truth3>> enumerate_ternary_solutions(const EquationSystem& sys);

}  // namespace hafs::reference
