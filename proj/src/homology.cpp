#include "prismlab/homology.hpp"

#include "prismlab/errors.hpp"
#include "prismlab/prism_complex.hpp"

#include <algorithm>
#include <string>

namespace prismlab {

SparseIntMatrix boundary_matrix(const ComplexSpec& spec, int k)
{
    spec.validate();
    if (k < 1 || k > spec.top_dimension())
        throw EmptyDomainError("boundary matrix index " + std::to_string(k) + " outside [1, " +
                               std::to_string(spec.top_dimension()) + "]");
    const std::vector<Cell> rows = enumerate_cells(spec, k - 1);
    const std::vector<Cell> cols = enumerate_cells(spec, k);
    std::vector<MatrixEntry> entries;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Chain d = boundary(SignedCell{cols[j], 1});
        for (const auto& [face, coef] : d.terms()) {
            const auto it = std::lower_bound(rows.begin(), rows.end(), face);
            entries.push_back({static_cast<std::size_t>(it - rows.begin()), j, BigInt(coef)});
        }
    }
    return SparseIntMatrix(rows.size(), cols.size(), std::move(entries));
}

std::vector<HomologyGroup> homology(const ComplexSpec& spec, HomologyOptions options)
{
    spec.validate();
    const int top = spec.top_dimension();
    const auto f = f_vector(spec).counts;

    // snf[k] describes the boundary C_k -> C_{k-1}; snf[0] is the augmentation
    std::vector<SNFResult> snf(static_cast<std::size_t>(top) + 2);
    if (options.reduced && f[0] > 0)
        snf[0].invariant_factors.push_back(1);
    for (int k = 1; k <= top; ++k)
        snf[static_cast<std::size_t>(k)] = smith_normal_form(boundary_matrix(spec, k));

    std::vector<HomologyGroup> groups;
    for (int k = 0; k <= top; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        HomologyGroup h;
        h.dimension = k;
        h.free_rank = f[idx] - snf[idx].rank() - snf[idx + 1].rank();
        for (const BigInt& d : snf[idx + 1].invariant_factors)
            if (d > 1)
                h.torsion.push_back(d);
        groups.push_back(std::move(h));
    }
    return groups;
}

std::int64_t euler_characteristic(const ComplexSpec& spec)
{
    std::int64_t chi = 0;
    const auto f = f_vector(spec).counts;
    for (std::size_t k = 0; k < f.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[k]);
    return chi;
}

bool connectivity_holds(const ComplexSpec& spec, const std::vector<HomologyGroup>& reduced)
{
    const int top = spec.top_dimension();
    for (const auto& h : reduced) {
        if (h.dimension <= spec.n_vertices_minus_one - spec.parts && !h.trivial())
            return false;
        if (h.dimension == top && h.trivial())
            return false;
    }
    return true;
}

} // namespace prismlab
