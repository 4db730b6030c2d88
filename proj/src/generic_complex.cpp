#include "prismlab/generic_complex.hpp"

#include "prismlab/errors.hpp"
#include "prismlab/prism_complex.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace prismlab {

void GenericPrismComplex::validate() const
{
    std::set<std::string> top_ids;
    int top_dim = -1;
    for (const auto& t : tops) {
        if (!top_ids.insert(t.id).second)
            throw ParseError("duplicate top cell id \"" + t.id + "\"");
        if (t.factors.empty())
            throw ParseError("top cell \"" + t.id + "\" has no factors");
        int dim = 0;
        for (int f : t.factors) {
            if (f < 0)
                throw ParseError("top cell \"" + t.id + "\" has a negative factor dimension");
            dim += f;
        }
        if (top_dim >= 0 && dim != top_dim)
            throw ParseError("top cells have different dimensions");
        top_dim = dim;
    }
    std::set<std::string> face_ids;
    for (const auto& f : faces) {
        if (!face_ids.insert(f.id).second)
            throw ParseError("duplicate codim-1 cell id \"" + f.id + "\"");
        if (f.cofaces.empty())
            throw ParseError("codim-1 cell \"" + f.id + "\" has no cofaces");
        std::set<std::size_t> seen;
        for (const auto& c : f.cofaces) {
            if (c.top >= tops.size())
                throw ParseError("codim-1 cell \"" + f.id + "\" refers to an unknown top cell");
            if (!seen.insert(c.top).second)
                throw ParseError("codim-1 cell \"" + f.id + "\" lists a coface twice");
            if (c.induced_sign_if_plus != 1 && c.induced_sign_if_plus != -1)
                throw ParseError("induced sign must be +1 or -1");
        }
    }
}

GenericPrismComplex to_generic(const ComplexSpec& spec)
{
    spec.require_top_cells();
    GenericPrismComplex out;
    const std::vector<Cell> tops = top_cells(spec);
    std::map<Cell, GenericPrismComplex::Face> faces;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        GenericPrismComplex::TopCell t{tops[i].to_string(), {}};
        for (int k = 0; k < tops[i].num_parts(); ++k)
            t.factors.push_back(static_cast<int>(tops[i].part(k).size()) - 1);
        out.tops.push_back(std::move(t));
        const Chain d = boundary(SignedCell{tops[i], 1});
        for (const auto& [face, coef] : d.terms())
            faces[face].cofaces.push_back({i, coef > 0 ? 1 : -1});
    }
    for (auto& [cell, face] : faces) {
        face.id = cell.to_string();
        out.faces.push_back(std::move(face));
    }
    return out;
}

const char* to_string(SearchMethod method)
{
    switch (method) {
    case SearchMethod::Exhaustive:
        return "exhaustive";
    case SearchMethod::Propagation:
        return "propagation";
    default:
        return "auto";
    }
}

namespace {

// bit_a XOR bit_b must equal `differ`, where bit = 1 encodes sign -1.
struct Constraint {
    std::size_t a;
    std::size_t b;
    bool differ;
    std::size_t face;
};

std::vector<Constraint> constraints_of(const GenericPrismComplex& complex)
{
    std::vector<Constraint> out;
    for (std::size_t f = 0; f < complex.faces.size(); ++f) {
        const auto& cof = complex.faces[f].cofaces;
        for (std::size_t i = 1; i < cof.size(); ++i)
            out.push_back({cof[0].top, cof[i].top,
                           cof[0].induced_sign_if_plus != cof[i].induced_sign_if_plus, f});
    }
    return out;
}

CoherenceReport report_for(const GenericPrismComplex& complex, const std::vector<int>& signs)
{
    CoherenceReport report;
    for (const auto& face : complex.faces) {
        InducedSigns entry;
        entry.face = face.id;
        for (const auto& c : face.cofaces) {
            entry.parents.push_back(complex.tops[c.top].id);
            entry.signs.push_back(signs[c.top] * c.induced_sign_if_plus);
        }
        if (!entry.coherent())
            report.violations.push_back(face.id);
        report.faces.push_back(std::move(entry));
    }
    report.pass = report.violations.empty();
    return report;
}

GenericVerdict exhaustive(const GenericPrismComplex& complex)
{
    const std::size_t n = complex.tops.size();
    if (n >= 63)
        throw std::length_error("too many top cells for exhaustive search");
    const auto constraints = constraints_of(complex);
    GenericVerdict verdict;
    verdict.method = SearchMethod::Exhaustive;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const bool ok = std::all_of(constraints.begin(), constraints.end(), [mask](const Constraint& c) {
            return (((mask >> c.a) ^ (mask >> c.b)) & 1u) == (c.differ ? 1u : 0u);
        });
        if (ok) {
            verdict.satisfiable = true;
            for (std::size_t i = 0; i < n; ++i)
                verdict.witness.push_back(((mask >> i) & 1u) ? -1 : 1);
            verdict.report = report_for(complex, verdict.witness);
            return verdict;
        }
    }
    verdict.report = report_for(complex, std::vector<int>(n, 1));
    verdict.report.pass = false;
    return verdict;
}

GenericVerdict propagation(const GenericPrismComplex& complex)
{
    const std::size_t n = complex.tops.size();
    std::vector<std::vector<Constraint>> adjacent(n);
    for (const auto& c : constraints_of(complex)) {
        adjacent[c.a].push_back(c);
        adjacent[c.b].push_back({c.b, c.a, c.differ, c.face});
    }
    GenericVerdict verdict;
    verdict.method = SearchMethod::Propagation;
    std::vector<int> bit(n, -1);
    std::vector<std::size_t> conflict_faces;
    for (std::size_t root = 0; root < n && conflict_faces.empty(); ++root) {
        if (bit[root] >= 0)
            continue;
        bit[root] = 0;
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty() && conflict_faces.empty()) {
            const std::size_t t = queue.front();
            queue.pop();
            for (const auto& c : adjacent[t]) {
                const int want = bit[t] ^ (c.differ ? 1 : 0);
                if (bit[c.b] < 0) {
                    bit[c.b] = want;
                    queue.push(c.b);
                } else if (bit[c.b] != want) {
                    conflict_faces.push_back(c.face);
                    break;
                }
            }
        }
    }
    if (!conflict_faces.empty()) {
        verdict.report = report_for(complex, std::vector<int>(n, 1));
        verdict.report.pass = false;
        verdict.report.violations.clear();
        for (std::size_t f : conflict_faces)
            verdict.report.violations.push_back(complex.faces[f].id);
        return verdict;
    }
    verdict.satisfiable = true;
    for (int b : bit)
        verdict.witness.push_back(b == 1 ? -1 : 1);
    verdict.report = report_for(complex, verdict.witness);
    return verdict;
}

} // namespace

GenericVerdict verify_generic_prism_complex(const GenericPrismComplex& complex, SearchMethod method)
{
    complex.validate();
    if (method == SearchMethod::Auto)
        method = complex.tops.size() < kExhaustiveSearchLimit ? SearchMethod::Exhaustive
                                                              : SearchMethod::Propagation;
    return method == SearchMethod::Exhaustive ? exhaustive(complex) : propagation(complex);
}

} // namespace prismlab
