#include "prismlab/symmetry.hpp"

#include "prismlab/combinatorics.hpp"
#include "prismlab/errors.hpp"
#include "prismlab/orientation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace prismlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int r)
{
    std::vector<int> images(static_cast<std::size_t>(r));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int r, int a, int b)
{
    std::vector<int> images = identity(r).images();
    std::swap(images.at(static_cast<std::size_t>(a)), images.at(static_cast<std::size_t>(b)));
    return Permutation(std::move(images));
}

Permutation Permutation::cycle(int r)
{
    std::vector<int> images(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        images[static_cast<std::size_t>(i)] = (i + 1) % r;
    return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(int r)
{
    std::vector<int> images = identity(r).images();
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i))
            return false;
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(images_[i] + 1);
    }
    return out + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> images(b.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = a(b.images_[i]);
    return Permutation(std::move(images));
}

Cell act(const Permutation& sigma, const Cell& cell)
{
    if (sigma.size() != cell.num_parts())
        throw std::invalid_argument("permutation size does not match the number of parts");
    return CellBuilder::permuted(cell, sigma.images());
}

FreeActionReport verify_free_action(const ComplexSpec& spec)
{
    spec.validate();
    FreeActionReport report;
    const auto group = Permutation::all(spec.parts);
    for (int k = 0; k <= spec.top_dimension(); ++k)
        for (const Cell& c : enumerate_cells(spec, k)) {
            ++report.cells_checked;
            for (const auto& sigma : group)
                if (!sigma.is_identity() && act(sigma, c) == c)
                    report.fixed.push_back({sigma, c});
        }
    report.pass = report.fixed.empty();
    return report;
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    // keeps the smaller index as root so roots are the least member
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<std::size_t> parent;
};

} // namespace

std::vector<Orbit> orbits(const ComplexSpec& spec, int k)
{
    const std::vector<Cell> cells = enumerate_cells(spec, k);
    const auto group = Permutation::all(spec.parts);
    UnionFind uf(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (const auto& sigma : group) {
            const Cell image = act(sigma, cells[i]);
            const auto it = std::lower_bound(cells.begin(), cells.end(), image);
            uf.unite(i, static_cast<std::size_t>(it - cells.begin()));
        }
    std::vector<Orbit> out;
    std::vector<std::size_t> slot(cells.size(), SIZE_MAX);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::size_t root = uf.find(i);
        if (slot[root] == SIZE_MAX) {
            slot[root] = out.size();
            out.push_back(Orbit{cells[root], {}});
        }
        out[slot[root]].cells.push_back(cells[i]);
    }
    return out;
}

FVector quotient_f_vector(const ComplexSpec& spec)
{
    const FVector f = f_vector(spec);
    const std::uint64_t group_order = factorial(spec.parts);
    FVector q;
    for (std::size_t k = 0; k < f.counts.size(); ++k) {
        if (f.counts[k] % group_order != 0)
            throw FreenessViolationError("f_" + std::to_string(k) + " = " +
                                         std::to_string(f.counts[k]) + " is not divisible by " +
                                         std::to_string(group_order));
        q.counts.push_back(f.counts[k] / group_order);
    }
    return q;
}

std::vector<std::vector<Vertex>> complementary_faces(const Cell& cell)
{
    return cell.parts();
}

std::vector<int> face_dimensions(const Cell& cell)
{
    std::vector<int> dims;
    for (int i = 0; i < cell.num_parts(); ++i)
        dims.push_back(static_cast<int>(cell.part(i).size()) - 1);
    return dims;
}

std::vector<EquivarianceCount> orientation_equivariance(const ComplexSpec& spec)
{
    const OrientationAssignment o = o_orientation(spec);
    std::vector<EquivarianceCount> out;
    for (const auto& sigma : Permutation::all(spec.parts)) {
        EquivarianceCount count{sigma, 0, 0};
        for (std::size_t i = 0; i < o.size(); ++i) {
            const Cell& f = o.cells()[i];
            const auto dims = face_dimensions(f);
            int transport = o.signs()[i];
            for (int a = 0; a < spec.parts; ++a)
                for (int b = a + 1; b < spec.parts; ++b)
                    if (sigma(a) > sigma(b) && (dims[a] * dims[b]) % 2 != 0)
                        transport = -transport;
            if (transport == o.sign(act(sigma, f)))
                ++count.preserved;
            else
                ++count.reversed;
        }
        out.push_back(count);
    }
    return out;
}

} // namespace prismlab
