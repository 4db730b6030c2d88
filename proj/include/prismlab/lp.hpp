#pragma once

#include "prismlab/rational.hpp"

#include <optional>
#include <vector>

namespace prismlab {

using RationalMatrix = std::vector<std::vector<Rational>>;

/**
 * Exact feasibility of { y : A y = b, y >= 0 } by the phase-one simplex
 * method in rational arithmetic. Bland's rule (least entering index, least
 * leaving basic index among ratio ties) rules out cycling.
 *
 * Returns a feasible y, or nullopt when the system has no nonnegative
 * solution.
 */
std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& a,
                                                               const std::vector<Rational>& b);

} // namespace prismlab
