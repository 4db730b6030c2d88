#include "oracles/combinatorial.hpp"
#include "prismlab/combinatorics.hpp"
#include "prismlab/errors.hpp"
#include "prismlab/orientation.hpp"
#include "prismlab/prism_complex.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace prismlab;

namespace {

Cell cell(const std::vector<std::vector<Vertex>>& parts)
{
    return Cell(parts);
}

} // namespace

TEST_CASE("cell construction and canonical form", "[cell]")
{
    const Cell c = cell({{0, 2}, {1, 3}});
    CHECK(c.num_parts() == 2);
    CHECK(c.dimension() == 2);
    CHECK(c.vertex_count() == 4);
    CHECK(c.to_string() == "(0,2)(1,3)");
    CHECK(c.parts() == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});

    CHECK_THROWS_AS(cell({{0}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(cell({{2, 1}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(cell({{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("canonicalize folds sorting parity into the sign", "[cell]")
{
    CHECK(canonicalize({{2, 0}, {1}}) == SignedCell{cell({{0, 2}, {1}}), -1});
    CHECK(canonicalize({{3, 1, 2}, {0}}) == SignedCell{cell({{1, 2, 3}, {0}}), 1});
    CHECK(canonicalize({{1, 0}, {3, 2}}) == SignedCell{cell({{0, 1}, {2, 3}}), 1});
    CHECK(parse_cell("(2,0)(1)") == SignedCell{cell({{0, 2}, {1}}), -1});
    CHECK_THROWS_AS(parse_cell("(0)(1"), ParseError);
    CHECK_THROWS_AS(parse_cell("(0)(0)"), ParseError);
}

TEST_CASE("canonicalization is idempotent on canonical cells", "[cell][property]")
{
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 4}})
        for (int k = 0; k <= n - r + 1; ++k)
            for (const Cell& c : enumerate_cells(ComplexSpec{n, r}, k)) {
                REQUIRE(canonicalize(c.parts()) == SignedCell{c, 1});
                REQUIRE(canonicalize(c.parts(), -1) == SignedCell{c, -1});
            }
}

TEST_CASE("canonicalization sign is the parity of the part shuffles", "[cell][property]")
{
    std::mt19937 rng(7);
    const auto cells = top_cells(ComplexSpec{6, 3});
    for (int trial = 0; trial < 500; ++trial) {
        const Cell& c = cells[rng() % cells.size()];
        auto parts = c.parts();
        int expected = 1;
        for (auto& p : parts) {
            std::vector<int> order(p.size());
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<Vertex> shuffled;
            for (int i : order)
                shuffled.push_back(p[static_cast<std::size_t>(i)]);
            if (oracle::odd_by_inversions(order))
                expected = -expected;
            p = shuffled;
        }
        REQUIRE(canonicalize(parts) == SignedCell{c, expected});
    }
}

TEST_CASE("enumerate_cells: hexagon edges of Y_{2,2}", "[enumerate]")
{
    const auto edges = enumerate_cells(ComplexSpec{2, 2}, 1);
    std::set<Cell> expected;
    for (const char* e : {"(0)(1,2)", "(1)(2,0)", "(2)(0,1)", "(0,1)(2)", "(1,2)(0)", "(2,0)(1)"})
        expected.insert(parse_cell(e).cell);
    CHECK(std::set<Cell>(edges.begin(), edges.end()) == expected);
    CHECK(edges.size() == 6);
}

TEST_CASE("enumerate_cells: cuboctahedron faces of Y_{3,2}", "[enumerate]")
{
    const auto faces = enumerate_cells(ComplexSpec{3, 2}, 2);
    REQUIRE(faces.size() == 14);
    int triangles = 0;
    int squares = 0;
    for (const Cell& f : faces) {
        const auto a = f.part(0).size();
        const auto b = f.part(1).size();
        if ((a == 1 && b == 3) || (a == 3 && b == 1))
            ++triangles;
        if (a == 2 && b == 2)
            ++squares;
    }
    CHECK(triangles == 8);
    CHECK(squares == 6);
}

TEST_CASE("enumerate_cells: small and derived counts", "[enumerate]")
{
    const auto points = enumerate_cells(ComplexSpec{1, 2}, 0);
    CHECK(points == std::vector<Cell>{cell({{0}, {1}}), cell({{1}, {0}})});

    // frozen from the bitmask oracle
    REQUIRE(oracle::count_cells_by_bitmasks(4, 3, 2) == 150);
    CHECK(enumerate_cells(ComplexSpec{4, 3}, 2).size() == 150);
}

TEST_CASE("enumerate_cells: order, uniqueness and coverage", "[enumerate][property]")
{
    for (int n = 1; n <= 6; ++n)
        for (int r = 2; r <= 4 && r <= n + 1; ++r) {
            const ComplexSpec spec{n, r};
            for (int k = 0; k <= spec.top_dimension(); ++k) {
                const auto cells = enumerate_cells(spec, k);
                REQUIRE(std::adjacent_find(cells.begin(), cells.end(),
                                           [](const Cell& a, const Cell& b) { return !(a < b); }) ==
                        cells.end());
                for (const Cell& c : cells) {
                    REQUIRE(c.dimension() == k);
                    REQUIRE(c.num_parts() == r);
                    if (k == spec.top_dimension())
                        REQUIRE(c.vertex_count() == n + 1);
                }
                REQUIRE(cells.size() == oracle::count_cells_by_bitmasks(n, r, k));
                REQUIRE(cells.size() == cell_count_closed_form(n, r, k));
            }
        }
}

TEST_CASE("enumerate_cells: domain errors", "[enumerate]")
{
    CHECK_THROWS_AS(enumerate_cells(ComplexSpec{3, 2}, 3), EmptyDomainError);
    CHECK_THROWS_AS(enumerate_cells(ComplexSpec{3, 2}, -1), EmptyDomainError);
    CHECK_THROWS_AS(enumerate_cells(ComplexSpec{1, 3}, 0), DegenerateSpecError);
}

TEST_CASE("f_vector examples", "[fvector]")
{
    CHECK(f_vector(ComplexSpec{3, 2}).counts == std::vector<std::uint64_t>{12, 24, 14});
    CHECK(f_vector(ComplexSpec{2, 2}).counts == std::vector<std::uint64_t>{6, 6});
    CHECK(f_vector(ComplexSpec{4, 3}).counts == std::vector<std::uint64_t>{60, 180, 150});
    CHECK(f_vector(ComplexSpec{1, 2}).counts == std::vector<std::uint64_t>{2});
}

TEST_CASE("boundary of a single edge factor", "[boundary]")
{
    // d(0,2) = +(2) - (0) carried along with the other factor
    const Chain d = boundary(SignedCell{cell({{0, 2}, {1}}), 1});
    CHECK(d.dimension() == 0);
    CHECK(d.size() == 2);
    CHECK(d.coefficient(cell({{2}, {1}})) == 1);
    CHECK(d.coefficient(cell({{0}, {1}})) == -1);
}

TEST_CASE("boundary of F0 removes vertex 2 with sign -1", "[boundary]")
{
    const Chain d = boundary(SignedCell{cell({{0}, {1, 2, 3}}), 1});
    CHECK(d.size() == 3);
    CHECK(d.coefficient(cell({{0}, {1, 3}})) == -1);
    CHECK(d.coefficient(cell({{0}, {2, 3}})) == 1);
    CHECK(d.coefficient(cell({{0}, {1, 2}})) == 1);
}

TEST_CASE("Leibniz sign for a later factor", "[boundary]")
{
    // d((0,2) x (1,3)) = d(0,2) x (1,3) - (0,2) x d(1,3)
    const Chain d = boundary(SignedCell{cell({{0, 2}, {1, 3}}), 1});
    CHECK(d.coefficient(cell({{2}, {1, 3}})) == 1);
    CHECK(d.coefficient(cell({{0}, {1, 3}})) == -1);
    CHECK(d.coefficient(cell({{0, 2}, {3}})) == -1);
    CHECK(d.coefficient(cell({{0, 2}, {1}})) == 1);
}

TEST_CASE("boundary edge cases", "[boundary]")
{
    const Chain zero = boundary(SignedCell{cell({{0}, {1}}), 1});
    CHECK(zero.is_zero());
    CHECK(zero.dimension() == -1);

    const SignedCell f{cell({{0, 1}, {2, 3, 4}}), 1};
    CHECK(boundary(SignedCell{f.cell, -1}) == -boundary(f));
}

TEST_CASE("boundary of boundary vanishes on top cells", "[boundary]")
{
    for (const auto spec : {ComplexSpec{3, 2}, ComplexSpec{4, 3}})
        for (const Cell& c : top_cells(spec))
            REQUIRE(boundary_chain(boundary(SignedCell{c, 1})).is_zero());
}

TEST_CASE("boundary of boundary vanishes on every cell", "[boundary][property]")
{
    for (int n = 2; n <= 6; ++n)
        for (int r = 2; r <= 4 && r <= n; ++r) {
            const auto report = verify_boundary_squared_zero(ComplexSpec{n, r});
            REQUIRE(report.pass);
            REQUIRE(report.cells_checked == [&] {
                std::uint64_t total = 0;
                for (int k = 0; k <= n - r + 1; ++k)
                    total += cell_count_closed_form(n, r, k);
                return total;
            }());
        }
}

TEST_CASE("boundary_chain is linear", "[boundary]")
{
    CHECK(boundary_chain(Chain(2)).is_zero());

    const Cell a = cell({{0}, {1, 2, 3}});
    const Cell b = cell({{0, 2}, {1, 3}});
    Chain single(2);
    single.add(a, 1);
    CHECK(boundary_chain(single) == boundary(SignedCell{a, 1}));

    Chain combo(2);
    combo.add(a, 3);
    combo.add(b, -2);
    Chain expected(1);
    expected.add(boundary(SignedCell{a, 1}), 3);
    expected.add(boundary(SignedCell{b, 1}), -2);
    CHECK(boundary_chain(combo) == expected);
}

TEST_CASE("O-oriented hexagon: every vertex gets coefficient +-2", "[boundary]")
{
    const ComplexSpec spec{2, 2};
    const auto o = o_orientation(spec);
    Chain sum(1);
    for (std::size_t i = 0; i < o.size(); ++i)
        sum.add(o.cells()[i], o.signs()[i]);
    const Chain d = boundary_chain(sum);
    CHECK(d.size() == 6);
    for (const auto& [v, coef] : d.terms())
        CHECK((coef == 2 || coef == -2));
}

TEST_CASE("chain bookkeeping", "[chain]")
{
    Chain c(1);
    const Cell e = cell({{0}, {1, 2}});
    c.add(e, 2);
    c.add(e, -2);
    CHECK(c.is_zero());
    CHECK_THROWS_AS(c.add(cell({{0}, {1}}), 1), DimensionError);
    CHECK_NOTHROW(c.add(Chain(2))); // the zero chain is neutral in every dimension
    Chain other(2);
    other.add(cell({{0, 3}, {1, 2}}), 1);
    CHECK_THROWS_AS(c.add(other), DimensionError);
    c.add(e, std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(c.add(e, 1), std::overflow_error);
}

TEST_CASE("codimension-1 cells have exactly r top parents", "[incidence]")
{
    for (int n = 2; n <= 6; ++n)
        for (int r = 2; r <= 4 && r <= n; ++r) {
            const ComplexSpec spec{n, r};
            std::map<Cell, int> parents;
            for (const Cell& f : top_cells(spec)) {
                const Chain d = boundary(SignedCell{f, 1});
                for (const auto& [g, coef] : d.terms()) {
                    REQUIRE((coef == 1 || coef == -1));
                    ++parents[g];
                }
            }
            const auto faces = enumerate_cells(spec, spec.top_dimension() - 1);
            REQUIRE(parents.size() == faces.size());
            for (const Cell& g : faces) {
                REQUIRE(parents[g] == r);
                const auto listed = top_parents(spec, g);
                REQUIRE(listed.size() == static_cast<std::size_t>(r));
                for (const Cell& p : listed)
                    REQUIRE(boundary(SignedCell{p, 1}).coefficient(g) != 0);
            }
        }
}
