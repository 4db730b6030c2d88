#pragma once

#include "prismlab/cell.hpp"
#include "prismlab/smith.hpp"
#include "prismlab/sparse_matrix.hpp"

#include <cstdint>
#include <vector>

namespace prismlab {

/// Z^free_rank plus the cyclic torsion summands Z/t.
struct HomologyGroup {
    int dimension = 0;
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion; // invariant factors > 1

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/**
 * Matrix of the boundary from k-cells to (k-1)-cells: rows are (k-1)-cells,
 * columns k-cells, both in lexicographic basis order. Requires 1 <= k <= N-r+1.
 */
SparseIntMatrix boundary_matrix(const ComplexSpec& spec, int k);

struct HomologyOptions {
    bool reduced = true; // include the augmentation C_0 -> Z
};

/// Integral homology in degrees 0..N-r+1.
std::vector<HomologyGroup> homology(const ComplexSpec& spec, HomologyOptions options = {});

std::int64_t euler_characteristic(const ComplexSpec& spec);

/// H~_k = 0 for k <= N-r and H~_{N-r+1} != 0, read off reduced homology.
bool connectivity_holds(const ComplexSpec& spec, const std::vector<HomologyGroup>& reduced);

} // namespace prismlab
