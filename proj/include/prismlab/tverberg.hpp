#pragma once

#include "prismlab/cell.hpp"
#include "prismlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prismlab {

using Point = std::vector<Rational>;

struct PointConfig {
    int dim = 1;
    std::vector<Point> points;

    /// Throws DimensionError unless dim >= 1 and every point has dim coordinates.
    void validate() const;
};

/**
 * One point per line, whitespace-separated coordinates written as integers
 * or "p/q". Blank lines and lines starting with '#' are skipped. The
 * dimension is the column count, which must agree on every line.
 */
PointConfig parse_points(const std::string& text);

/// Common point x of the convex hulls together with the convex weights per part.
struct HullWitness {
    Point x;
    std::vector<std::vector<Rational>> weights;
};

/**
 * Exact test whether conv(parts[0]) ∩ ... ∩ conv(parts[r-1]) is nonempty.
 * nullopt is a proof of emptiness. Throws DimensionError if a point is not
 * in R^d and std::invalid_argument for an empty part.
 */
std::optional<HullWitness> hulls_intersect(const std::vector<std::vector<Point>>& parts, int d);

/// Partition of point indices with a common point of the block hulls.
struct PartitionCertificate {
    std::vector<std::vector<int>> parts; // blocks ordered by least index
    Point witness;
    std::vector<std::vector<Rational>> weights; // aligned with parts
};

/// Checks the partition, nonnegativity, normalization and the r convex combinations exactly.
bool verify_certificate(const PointConfig& config, const PartitionCertificate& certificate);

/// (d+1)(r-1)+1, the number of points that always admit a Tverberg partition.
std::size_t tverberg_number(int d, int r);

struct TverbergResult {
    std::optional<PartitionCertificate> certificate;
    bool guaranteed = false; // point count reaches the Tverberg number
    std::size_t partitions_tried = 0;

    bool theorem_violation() const { return guaranteed && !certificate; }
};

/**
 * Tries unordered partitions into r nonempty blocks in canonical order
 * (restricted growth strings, lexicographic) and returns the first whose
 * block hulls meet.
 */
TverbergResult tverberg_search(const PointConfig& config, int r);

/// The affine map on the boundary of the N-simplex given by vertex images.
struct AffineTttResult {
    ComplexSpec spec;
    Cell top_cell;
    std::vector<std::vector<Vertex>> faces;
    PartitionCertificate certificate;
};

/**
 * Takes exactly (d+1)(r-1)+1 vertex images, N = (d+1)(r-1), and returns
 * complementary faces of the N-simplex whose images meet, as a top cell of
 * Y_{N,r}. Throws std::invalid_argument on a wrong point count and
 * TheoremViolationError if no partition exists.
 */
AffineTttResult affine_ttt_check(const PointConfig& images, int r);

} // namespace prismlab
