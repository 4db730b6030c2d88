#include "prismlab/prism_complex.hpp"

#include "prismlab/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace prismlab {

std::int64_t Chain::coefficient(const Cell& cell) const
{
    auto it = terms_.find(cell);
    return it == terms_.end() ? 0 : it->second;
}

void Chain::add(const Cell& cell, std::int64_t coef)
{
    if (coef == 0)
        return;
    if (cell.dimension() != dimension_)
        throw DimensionError("chain of dimension " + std::to_string(dimension_) +
                             " cannot hold cell " + cell.to_string());
    auto [it, inserted] = terms_.try_emplace(cell, 0);
    std::int64_t sum = 0;
    if (__builtin_add_overflow(it->second, coef, &sum))
        throw std::overflow_error("chain coefficient overflow");
    if (sum == 0)
        terms_.erase(it);
    else
        it->second = sum;
}

void Chain::add(const Chain& other, std::int64_t scale)
{
    if (other.is_zero() || scale == 0)
        return;
    if (other.dimension_ != dimension_)
        throw DimensionError("cannot add chains of different dimensions");
    for (const auto& [cell, coef] : other.terms_) {
        std::int64_t scaled = 0;
        if (__builtin_mul_overflow(coef, scale, &scaled))
            throw std::overflow_error("chain coefficient overflow");
        add(cell, scaled);
    }
}

Chain Chain::operator-() const
{
    Chain out(dimension_);
    for (const auto& [cell, coef] : terms_)
        out.terms_.emplace(cell, -coef);
    return out;
}

namespace {

// Every labelling of {0..N} by a part index or -1 (unused), restricted to the
// labellings that use k + r vertices and leave no part empty.
void label_cells(const ComplexSpec& spec, int k, std::vector<Cell>& out)
{
    const int n = spec.vertex_count();
    const int r = spec.parts;
    const int used_target = k + r;
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    std::vector<int> part_sizes(static_cast<std::size_t>(r), 0);

    auto rec = [&](auto&& self, int v, int used) -> void {
        if (used > used_target || used + (n - v) < used_target)
            return;
        if (v == n) {
            if (std::all_of(part_sizes.begin(), part_sizes.end(), [](int s) { return s > 0; }))
                out.push_back(CellBuilder::from_labels(labels, r));
            return;
        }
        labels[v] = -1;
        self(self, v + 1, used);
        for (int p = 0; p < r; ++p) {
            labels[v] = p;
            ++part_sizes[p];
            self(self, v + 1, used + 1);
            --part_sizes[p];
        }
        labels[v] = -1;
    };
    rec(rec, 0, 0);
}

} // namespace

std::vector<Cell> enumerate_cells(const ComplexSpec& spec, int k)
{
    spec.validate();
    if (k < 0 || k > spec.top_dimension())
        throw EmptyDomainError("dimension " + std::to_string(k) + " outside [0, " +
                               std::to_string(spec.top_dimension()) + "]");
    std::vector<Cell> cells;
    label_cells(spec, k, cells);
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<Cell> top_cells(const ComplexSpec& spec)
{
    return enumerate_cells(spec, spec.top_dimension());
}

FVector f_vector(const ComplexSpec& spec)
{
    spec.validate();
    FVector f;
    for (int k = 0; k <= spec.top_dimension(); ++k)
        f.counts.push_back(enumerate_cells(spec, k).size());
    return f;
}

Chain boundary(const SignedCell& sc)
{
    const Cell& cell = sc.cell;
    const int dim = cell.dimension();
    Chain out(dim - 1);
    if (dim <= 0)
        return out;
    int preceding_dims = 0;
    for (int k = 0; k < cell.num_parts(); ++k) {
        const auto part = cell.part(k);
        const int size = static_cast<int>(part.size());
        if (size >= 2) {
            for (int j = 0; j < size; ++j) {
                const int exponent = preceding_dims + j;
                const std::int64_t coef = (exponent % 2 == 0 ? 1 : -1) * sc.sign;
                out.add(CellBuilder::without_vertex(cell, k, part[static_cast<std::size_t>(j)]),
                        coef);
            }
        }
        preceding_dims += size - 1;
    }
    return out;
}

Chain boundary_chain(const Chain& chain)
{
    Chain out(chain.dimension() - 1);
    for (const auto& [cell, coef] : chain.terms())
        out.add(boundary(SignedCell{cell, 1}), coef);
    return out;
}

BoundarySquareReport verify_boundary_squared_zero(const ComplexSpec& spec)
{
    spec.validate();
    BoundarySquareReport report;
    for (int k = 0; k <= spec.top_dimension(); ++k)
        for (const Cell& c : enumerate_cells(spec, k)) {
            ++report.cells_checked;
            if (!boundary_chain(boundary(SignedCell{c, 1})).is_zero())
                report.failures.push_back(c);
        }
    report.pass = report.failures.empty();
    return report;
}

std::vector<Cell> top_parents(const ComplexSpec& spec, const Cell& face)
{
    if (face.num_parts() != spec.parts || face.vertex_count() != spec.vertex_count() - 1)
        throw DimensionError("cell " + face.to_string() + " is not of codimension 1");
    if (face.max_vertex() >= spec.vertex_count())
        throw DimensionError("cell " + face.to_string() + " uses a vertex outside {0..N}");
    Vertex missing = -1;
    for (Vertex v = 0; v < spec.vertex_count(); ++v)
        if (!face.contains(v)) {
            missing = v;
            break;
        }
    std::vector<Cell> parents;
    for (int k = 0; k < spec.parts; ++k)
        parents.push_back(CellBuilder::with_vertex(face, k, missing));
    std::sort(parents.begin(), parents.end());
    return parents;
}

} // namespace prismlab
