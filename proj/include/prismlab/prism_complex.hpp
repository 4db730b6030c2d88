#pragma once

#include "prismlab/cell.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace prismlab {

/**
 * Finite formal sum of cells of one dimension with integer coefficients.
 * Zero coefficients are never stored. The zero chain below dimension 0 has
 * dimension -1.
 */
class Chain {
public:
    using Terms = std::map<Cell, std::int64_t>;

    explicit Chain(int dimension = 0) : dimension_(dimension) {}

    int dimension() const { return dimension_; }
    const Terms& terms() const& { return terms_; }
    // moves out of temporaries so `for (... : boundary(c).terms())` is safe
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of `cell`, zero when absent.
    std::int64_t coefficient(const Cell& cell) const;

    /// Adds coef * cell. Throws DimensionError on a dimension mismatch and
    /// std::overflow_error if a coefficient leaves the 64-bit range.
    void add(const Cell& cell, std::int64_t coef);
    void add(const Chain& other, std::int64_t scale = 1);

    Chain operator-() const;
    friend bool operator==(const Chain&, const Chain&) = default;

private:
    int dimension_;
    Terms terms_;
};

struct FVector {
    std::vector<std::uint64_t> counts;

    friend bool operator==(const FVector&, const FVector&) = default;
};

/// All cells of dimension k in lexicographic basis order.
/// Throws EmptyDomainError unless 0 <= k <= N - r + 1.
std::vector<Cell> enumerate_cells(const ComplexSpec& spec, int k);

/// Top-dimensional cells; their parts partition {0..N}.
std::vector<Cell> top_cells(const ComplexSpec& spec);

FVector f_vector(const ComplexSpec& spec);

/**
 * Boundary by the Leibniz rule over the product of simplices
 *
 *     d(D(V_1) x ... x D(V_r)) = sum_k (-1)^(d_1+...+d_{k-1}) D(V_1) x ... x dD(V_k) x ... x D(V_r)
 *
 * with dD(v_0..v_s) = sum_j (-1)^j D(v_0..^v_j..v_s). Parts of size one have
 * no boundary, so no term ever produces an empty part. A dimension-0 cell has
 * the zero boundary.
 */
Chain boundary(const SignedCell& cell);

/// Linear extension of boundary().
Chain boundary_chain(const Chain& chain);

/**
 * Top cells having `face` (a codimension-1 cell) on their boundary, i.e. the
 * r ways to put the missing vertex back into one of the parts.
 */
std::vector<Cell> top_parents(const ComplexSpec& spec, const Cell& face);

struct BoundarySquareReport {
    bool pass = true;
    std::size_t cells_checked = 0;
    std::vector<Cell> failures; // cells with a nonzero boundary of the boundary
};

/// Checks that the boundary of the boundary vanishes on every cell.
BoundarySquareReport verify_boundary_squared_zero(const ComplexSpec& spec);

} // namespace prismlab
