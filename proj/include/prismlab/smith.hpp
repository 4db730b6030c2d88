#pragma once

#include "prismlab/sparse_matrix.hpp"

#include <vector>

namespace prismlab {

/// Nonzero invariant factors d_1 | d_2 | ... | d_k, all positive.
struct SNFResult {
    std::vector<BigInt> invariant_factors;

    std::size_t rank() const { return invariant_factors.size(); }
    friend bool operator==(const SNFResult&, const SNFResult&) = default;
};

/**
 * Smith normal form by sparse elimination with exact integers.
 *
 * Each step pivots on a nonzero entry of least absolute value (ties broken
 * by row, then column), clears its column with row operations and its row
 * with column operations. A pivot that leaves nonzero remainders is not
 * final; the smaller remainders are picked up by the next step. The
 * collected diagonal is then normalized into a divisibility chain.
 */
SNFResult smith_normal_form(const SparseIntMatrix& m);

} // namespace prismlab
