#include "prismlab/orientation.hpp"

#include "prismlab/errors.hpp"
#include "prismlab/prism_complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace prismlab {

std::string Symbol::to_string() const
{
    return (kind == Kind::Vertex ? "v" : "s") + std::to_string(index);
}

std::string to_string(const OrientationString& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += s[i].to_string();
    }
    return out;
}

OrientationString reference_string(const ComplexSpec& spec)
{
    spec.require_top_cells();
    OrientationString s;
    for (int i = 0; i < spec.parts - 1; ++i) {
        s.push_back(Symbol::vertex(i));
        s.push_back(Symbol::separator(i + 1));
    }
    for (int v = spec.parts - 1; v <= spec.n_vertices_minus_one; ++v)
        s.push_back(Symbol::vertex(v));
    return s;
}

OrientationString cell_string(const ComplexSpec& spec, const Cell& cell)
{
    if (cell.num_parts() != spec.parts || cell.vertex_count() != spec.vertex_count() ||
        cell.max_vertex() != spec.n_vertices_minus_one)
        throw DimensionError("cell " + cell.to_string() + " is not a top cell of Y_{" +
                             std::to_string(spec.n_vertices_minus_one) + "," +
                             std::to_string(spec.parts) + "}");
    OrientationString s;
    for (int k = 0; k < cell.num_parts(); ++k) {
        if (k > 0)
            s.push_back(Symbol::separator(k));
        for (Vertex v : cell.part(k))
            s.push_back(Symbol::vertex(v));
    }
    return s;
}

Parity string_parity(const OrientationString& from, const OrientationString& to)
{
    if (from.size() != to.size())
        throw IncomparableStringsError("orientation strings differ in length");
    std::map<Symbol, std::size_t> position;
    for (std::size_t i = 0; i < to.size(); ++i)
        if (!position.emplace(to[i], i).second)
            throw IncomparableStringsError("repeated symbol " + to[i].to_string());

    std::vector<std::size_t> perm(from.size());
    std::vector<bool> hit(from.size(), false);
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = position.find(from[i]);
        if (it == position.end())
            throw IncomparableStringsError("symbol " + from[i].to_string() +
                                           " missing from target string");
        if (hit[it->second])
            throw IncomparableStringsError("repeated symbol " + from[i].to_string());
        hit[it->second] = true;
        perm[i] = it->second;
    }

    std::size_t swaps = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        while (perm[i] != i) {
            std::swap(perm[i], perm[perm[i]]);
            ++swaps;
        }
    return swaps % 2 == 0 ? Parity::Even : Parity::Odd;
}

OrientationAssignment::OrientationAssignment(ComplexSpec spec, std::vector<Cell> cells,
                                             std::vector<int> signs)
    : spec_(spec), cells_(std::move(cells)), signs_(std::move(signs))
{
    if (cells_.size() != signs_.size())
        throw std::invalid_argument("one sign per top cell required");
    if (!std::is_sorted(cells_.begin(), cells_.end()))
        throw std::invalid_argument("top cells must be sorted");
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw std::invalid_argument("orientation signs must be +1 or -1");
}

int OrientationAssignment::sign(const Cell& cell) const
{
    auto it = std::lower_bound(cells_.begin(), cells_.end(), cell);
    if (it == cells_.end() || *it != cell)
        throw std::out_of_range("not a top cell: " + cell.to_string());
    return signs_[static_cast<std::size_t>(it - cells_.begin())];
}

OrientationAssignment o_orientation(const ComplexSpec& spec)
{
    const OrientationString reference = reference_string(spec);
    std::vector<Cell> cells = top_cells(spec);
    std::vector<int> signs;
    signs.reserve(cells.size());
    for (const Cell& f : cells)
        signs.push_back(string_parity(cell_string(spec, f), reference) == Parity::Even ? 1 : -1);
    return OrientationAssignment(spec, std::move(cells), std::move(signs));
}

bool InducedSigns::coherent() const
{
    return std::adjacent_find(signs.begin(), signs.end(), std::not_equal_to<>()) == signs.end();
}

bool CoherenceReport::uniform_parent_count(std::size_t count) const
{
    return std::all_of(faces.begin(), faces.end(),
                       [count](const InducedSigns& f) { return f.parents.size() == count; });
}

CoherenceReport check_coherence(const OrientationAssignment& assignment)
{
    std::map<Cell, InducedSigns> by_face;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        const Cell& top = assignment.cells()[i];
        const Chain d = boundary(SignedCell{top, assignment.signs()[i]});
        for (const auto& [face, coef] : d.terms()) {
            auto& entry = by_face[face];
            entry.parents.push_back(top.to_string());
            entry.signs.push_back(coef > 0 ? 1 : -1);
        }
    }
    CoherenceReport report;
    report.faces.reserve(by_face.size());
    for (auto& [face, entry] : by_face) {
        entry.face = face.to_string();
        if (!entry.coherent())
            report.violations.push_back(entry.face);
        report.faces.push_back(std::move(entry));
    }
    report.pass = report.violations.empty();
    return report;
}

CoherenceReport verify_o_orientability(const ComplexSpec& spec)
{
    return check_coherence(o_orientation(spec));
}

} // namespace prismlab
