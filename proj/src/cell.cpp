#include "prismlab/cell.hpp"

#include "prismlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace prismlab {

void ComplexSpec::validate() const
{
    if (n_vertices_minus_one < 1)
        throw DegenerateSpecError("N must be at least 1");
    if (parts < 2)
        throw DegenerateSpecError("r must be at least 2");
    if (n_vertices_minus_one < parts - 1)
        throw DegenerateSpecError("N = " + std::to_string(n_vertices_minus_one) +
                                  " < r - 1: the complex has no cells");
}

void ComplexSpec::require_top_cells() const
{
    validate();
    if (n_vertices_minus_one < parts)
        throw DegenerateSpecError("N = " + std::to_string(n_vertices_minus_one) + " < r = " +
                                  std::to_string(parts) +
                                  ": orientation needs a part with at least two vertices");
}

Cell::Cell(const std::vector<std::vector<Vertex>>& parts)
{
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        if (p.empty())
            throw std::invalid_argument("cell part " + std::to_string(i) + " is empty");
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] < 0)
                throw std::invalid_argument("negative vertex label");
            if (j > 0 && p[j - 1] >= p[j])
                throw std::invalid_argument("cell part " + std::to_string(i) +
                                            " is not strictly ascending");
            if (!seen.insert(p[j]).second)
                throw std::invalid_argument("cell parts are not disjoint");
        }
        if (i > 0)
            flat_.push_back(-1);
        flat_.insert(flat_.end(), p.begin(), p.end());
    }
    index_parts();
}

void Cell::index_parts()
{
    starts_.clear();
    starts_.push_back(0);
    for (std::size_t i = 0; i < flat_.size(); ++i)
        if (flat_[i] < 0)
            starts_.push_back(static_cast<int>(i) + 1);
    starts_.push_back(static_cast<int>(flat_.size()) + 1);
    if (flat_.empty())
        starts_.assign(1, 0);
}

std::span<const Vertex> Cell::part(int i) const
{
    const auto begin = static_cast<std::size_t>(starts_.at(static_cast<std::size_t>(i)));
    const auto end = static_cast<std::size_t>(starts_.at(static_cast<std::size_t>(i) + 1)) - 1;
    return std::span<const Vertex>(flat_).subspan(begin, end - begin);
}

std::vector<std::vector<Vertex>> Cell::parts() const
{
    std::vector<std::vector<Vertex>> out;
    for (int i = 0; i < num_parts(); ++i) {
        auto p = part(i);
        out.emplace_back(p.begin(), p.end());
    }
    return out;
}

Vertex Cell::max_vertex() const
{
    return flat_.empty() ? -1 : *std::max_element(flat_.begin(), flat_.end());
}

bool Cell::contains(Vertex v) const
{
    return v >= 0 && std::find(flat_.begin(), flat_.end(), v) != flat_.end();
}

std::string Cell::to_string() const
{
    std::string out;
    for (int i = 0; i < num_parts(); ++i) {
        out += '(';
        bool first = true;
        for (Vertex v : part(i)) {
            if (!first)
                out += ',';
            out += std::to_string(v);
            first = false;
        }
        out += ')';
    }
    return out;
}

Cell CellBuilder::from_labels(std::span<const int> labels, int parts)
{
    std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(parts));
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] >= 0)
            buckets[static_cast<std::size_t>(labels[v])].push_back(static_cast<Vertex>(v));
    Cell c;
    for (int i = 0; i < parts; ++i) {
        if (i > 0)
            c.flat_.push_back(-1);
        c.flat_.insert(c.flat_.end(), buckets[i].begin(), buckets[i].end());
    }
    c.index_parts();
    return c;
}

Cell CellBuilder::without_vertex(const Cell& cell, int k, Vertex v)
{
    Cell c;
    c.flat_.reserve(cell.flat_.size() - 1);
    const auto begin = cell.starts_[static_cast<std::size_t>(k)];
    const auto end = cell.starts_[static_cast<std::size_t>(k) + 1] - 1;
    if (end - begin < 2)
        throw std::logic_error("removing a vertex would empty part " + std::to_string(k));
    for (int i = 0; i < static_cast<int>(cell.flat_.size()); ++i)
        if (!(i >= begin && i < end && cell.flat_[static_cast<std::size_t>(i)] == v))
            c.flat_.push_back(cell.flat_[static_cast<std::size_t>(i)]);
    c.index_parts();
    return c;
}

Cell CellBuilder::with_vertex(const Cell& cell, int k, Vertex v)
{
    Cell c = cell;
    const auto begin = c.flat_.begin() + c.starts_[static_cast<std::size_t>(k)];
    const auto end = c.flat_.begin() + (c.starts_[static_cast<std::size_t>(k) + 1] - 1);
    c.flat_.insert(std::lower_bound(begin, end, v), v);
    c.index_parts();
    return c;
}

Cell CellBuilder::permuted(const Cell& cell, std::span<const int> sigma)
{
    const int r = cell.num_parts();
    std::vector<int> source(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        source[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
    Cell c;
    c.flat_.reserve(cell.flat_.size());
    for (int j = 0; j < r; ++j) {
        if (j > 0)
            c.flat_.push_back(-1);
        auto p = cell.part(source[static_cast<std::size_t>(j)]);
        c.flat_.insert(c.flat_.end(), p.begin(), p.end());
    }
    c.index_parts();
    return c;
}

SignedCell canonicalize(const std::vector<std::vector<Vertex>>& ordered_parts, int sign)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");
    std::vector<std::vector<Vertex>> sorted = ordered_parts;
    for (auto& p : sorted) {
        // parity of the sorting permutation via its inversion count
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j])
                    sign = -sign;
        std::sort(p.begin(), p.end());
    }
    return SignedCell{Cell(sorted), sign};
}

SignedCell parse_cell(const std::string& text)
{
    std::vector<std::vector<Vertex>> parts;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw ParseError("expected '(' in cell \"" + text + "\"");
        ++i;
        std::vector<Vertex> part;
        for (;;) {
            skip_ws();
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            if (j == i)
                throw ParseError("expected vertex label in cell \"" + text + "\"");
            part.push_back(std::stoi(text.substr(i, j - i)));
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            throw ParseError("unterminated part in cell \"" + text + "\"");
        }
        parts.push_back(std::move(part));
        skip_ws();
    }
    if (parts.empty())
        throw ParseError("empty cell description");
    try {
        return canonicalize(parts);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace prismlab
