#pragma once

// Tunable search bounds. Defaults can be overridden through the environment:
//   F1CONES_HILBERT_DIM_BOUND   largest lattice rank accepted by hilbert_basis (4)
//   F1CONES_DEGREE_BOUND        monomial degree bound of the integrality search (12)
//   F1CONES_MEMBERSHIP_BUDGET   partial sums explored by monoid membership (200000)

#include <cstddef>

namespace f1cones {

std::size_t hilbert_dimension_bound();
std::size_t normal_form_degree_bound();
std::size_t membership_budget();

}  // namespace f1cones
