#pragma once

#include <optional>

#include "perron/matrix.hpp"

namespace perron {

// Basic feasible solution x >= 0 of A x = b, found by a two-phase-style
// Phase I simplex over the rationals with Bland's rule. nullopt when
// infeasible. Deterministic for identical inputs.
std::optional<RatVec> nonnegative_solution(const RatMatrix& a, const RatVec& b);

// Same with the extra bounds x <= 1.
std::optional<RatVec> unit_box_solution(const RatMatrix& a, const RatVec& b);

// Columns of an integer matrix as a rational matrix; generators are columns.
RatMatrix columns_to_rational(const std::vector<IntVec>& columns);

}  // namespace perron
