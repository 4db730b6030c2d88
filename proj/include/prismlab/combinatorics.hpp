#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace prismlab {

std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

/// Stirling number of the second kind: partitions of an n-set into k blocks.
std::uint64_t stirling2(int n, int k);

/**
 * Number of cells of dimension k in the complex of ordered r-tuples of
 * disjoint nonempty faces of the N-simplex:
 *
 *     C(N+1, k+r) * r! * S(k+r, r)
 *
 * Pick the k+r vertices in use, then an ordered partition of them into r
 * nonempty blocks.
 */
std::uint64_t cell_count_closed_form(int n_vertices_minus_one, int parts, int k);

/**
 * Visit every partition of {0..n-1} into exactly `blocks` nonempty blocks,
 * encoded as a restricted growth string (label[0] = 0 and each label at most
 * one more than the running maximum). Labels are visited in lexicographic
 * order, so block i is always the block whose least element is i-th smallest.
 *
 * The visitor returns false to stop early. Returns false iff stopped early.
 */
bool for_each_set_partition(int n, int blocks,
                            const std::function<bool(std::span<const int>)>& visit);

/// Group a restricted growth string into its blocks.
std::vector<std::vector<int>> blocks_from_labels(std::span<const int> labels, int blocks);

} // namespace prismlab
