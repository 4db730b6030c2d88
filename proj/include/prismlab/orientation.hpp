#pragma once

#include "prismlab/cell.hpp"

#include <string>
#include <vector>

namespace prismlab {

/// A letter of an orientation string: a vertex v_i or a separator s_i (i >= 1).
struct Symbol {
    enum class Kind { Vertex, Separator };
    Kind kind = Kind::Vertex;
    int index = 0;

    static Symbol vertex(int i) { return {Kind::Vertex, i}; }
    static Symbol separator(int i) { return {Kind::Separator, i}; }

    std::string to_string() const;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using OrientationString = std::vector<Symbol>;

std::string to_string(const OrientationString& s);

/// v_0, s_1, v_1, ..., s_{r-1}, v_{r-1}, v_r, ..., v_N. Requires N >= r.
OrientationString reference_string(const ComplexSpec& spec);

/// part_1, s_1, part_2, ..., s_{r-1}, part_r for a top cell of Y_{N,r}.
OrientationString cell_string(const ComplexSpec& spec, const Cell& cell);

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/**
 * Parity of the permutation carrying `from` onto `to`, found by performing
 * the transpositions that sort it and counting them. Both strings must
 * consist of the same distinct symbols; otherwise IncomparableStringsError.
 */
Parity string_parity(const OrientationString& from, const OrientationString& to);

/**
 * Signs of all top cells, sorted by cell. The sign of F is +1 when the
 * permutation from S(F) (ascending parts) to the reference string is even.
 */
class OrientationAssignment {
public:
    OrientationAssignment() = default;
    OrientationAssignment(ComplexSpec spec, std::vector<Cell> cells, std::vector<int> signs);

    const ComplexSpec& spec() const { return spec_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<int>& signs() const { return signs_; }
    std::size_t size() const { return cells_.size(); }

    /// Throws std::out_of_range for a cell that is not a top cell.
    int sign(const Cell& cell) const;

private:
    ComplexSpec spec_;
    std::vector<Cell> cells_;
    std::vector<int> signs_;
};

OrientationAssignment o_orientation(const ComplexSpec& spec);

/// Induced signs a single codimension-1 cell receives from its top parents.
struct InducedSigns {
    std::string face;
    std::vector<std::string> parents;
    std::vector<int> signs;

    bool coherent() const;
};

struct CoherenceReport {
    std::vector<InducedSigns> faces;
    bool pass = false;
    std::vector<std::string> violations;

    /// Every face has exactly `count` parents.
    bool uniform_parent_count(std::size_t count) const;
};

/**
 * Boundary of every top cell under the O-orientation, grouped per
 * codimension-1 cell. Passes iff each face gets one sign from all parents.
 */
CoherenceReport verify_o_orientability(const ComplexSpec& spec);

/// Same check for an arbitrary assignment of top-cell signs.
CoherenceReport check_coherence(const OrientationAssignment& assignment);

} // namespace prismlab
