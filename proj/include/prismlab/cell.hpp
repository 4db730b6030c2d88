#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace prismlab {

using Vertex = int;

/**
 * Parameters of the complex Y_{N,r}: vertices {0..N} of the N-simplex and r
 * ordered parts. Valid when N >= 1, r >= 2 and N >= r - 1; orientation
 * operations further need N >= r.
 */
struct ComplexSpec {
    int n_vertices_minus_one = 1;
    int parts = 2;

    int vertex_count() const { return n_vertices_minus_one + 1; }
    int top_dimension() const { return n_vertices_minus_one - parts + 1; }

    /// Throws DegenerateSpecError unless N >= 1, r >= 2, N >= r - 1.
    void validate() const;
    /// validate() plus N >= r.
    void require_top_cells() const;

    friend bool operator==(const ComplexSpec&, const ComplexSpec&) = default;
};

/**
 * An ordered r-tuple of pairwise disjoint, nonempty, strictly ascending vertex
 * lists. This is the canonical representative of a cell of Y_{N,r}; the
 * orientation is carried separately (see SignedCell).
 *
 * Stored flattened with -1 between parts, so the default ordering is the
 * lexicographic basis order with separators sorting before vertices.
 */
class Cell {
public:
    Cell() = default;

    /// Throws std::invalid_argument unless the parts are canonical.
    explicit Cell(const std::vector<std::vector<Vertex>>& parts);

    int num_parts() const { return static_cast<int>(starts_.size()) - 1; }
    std::span<const Vertex> part(int i) const;
    std::vector<std::vector<Vertex>> parts() const;

    int vertex_count() const
    {
        return num_parts() == 0 ? 0 : static_cast<int>(flat_.size()) - num_parts() + 1;
    }
    int dimension() const { return vertex_count() - num_parts(); }
    /// Largest vertex label in use.
    Vertex max_vertex() const;
    bool contains(Vertex v) const;

    /// Flattened parts with -1 separators; defines ordering and hashing.
    const std::vector<int>& key() const { return flat_; }

    /// Human form, e.g. "(0)(1,3)".
    std::string to_string() const;

    friend bool operator==(const Cell& a, const Cell& b) { return a.flat_ == b.flat_; }
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b)
    {
        return a.flat_ <=> b.flat_;
    }

private:
    friend class CellBuilder;
    void index_parts();

    std::vector<int> flat_;
    std::vector<int> starts_{0}; // start offset of each part in flat_, plus a sentinel
};

/// Fast construction from trusted data; used inside the library.
class CellBuilder {
public:
    /// Parts given as label-per-vertex (-1 = unused); parts are ascending by construction.
    static Cell from_labels(std::span<const int> labels, int parts);
    /// Copy of `cell` with vertex `v` removed from part `k` (the part must keep a vertex).
    static Cell without_vertex(const Cell& cell, int k, Vertex v);
    /// Copy of `cell` with vertex `v` inserted in ascending position into part `k`.
    static Cell with_vertex(const Cell& cell, int k, Vertex v);
    /// Parts reordered so that new part sigma[i] is old part i.
    static Cell permuted(const Cell& cell, std::span<const int> sigma);
};

/// A cell together with an orientation sign relative to its ascending representative.
struct SignedCell {
    Cell cell;
    int sign = 1;

    friend bool operator==(const SignedCell&, const SignedCell&) = default;
};

/**
 * Normalize arbitrarily ordered parts (each an oriented simplex written as a
 * vertex sequence) to the canonical representative, folding the parity of
 * every sorting permutation into the sign.
 */
SignedCell canonicalize(const std::vector<std::vector<Vertex>>& ordered_parts, int sign = 1);

/// Parse "(0)(1,3)" or "(2,0)(1)"; non-ascending parts are canonicalized with sign.
SignedCell parse_cell(const std::string& text);

} // namespace prismlab

template <>
struct std::hash<prismlab::Cell> {
    std::size_t operator()(const prismlab::Cell& c) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (int v : c.key())
            h = (h ^ static_cast<std::size_t>(v + 2)) * 1099511628211ull;
        return h;
    }
};
