#pragma once
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Exact-arithmetic phase-1 simplex with Bland's rule.
/// Decides feasibility of { x >= 0 : A x = b }.
bool feasible_eq_nonneg(const std::vector<RatVec>& a, const RatVec& b);

/// Feasibility of { y free : rows[i] . y >= rhs[i] for all i }.
bool feasible_ineq_free(const std::vector<RatVec>& rows, const RatVec& rhs);

/// Is `target` a nonnegative rational combination of `gens`?
bool in_cone(const std::vector<IntVec>& gens, const IntVec& target);

}  // namespace toric
