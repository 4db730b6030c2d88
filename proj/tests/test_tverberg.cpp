#include "oracles/fourier_motzkin.hpp"
#include "prismlab/combinatorics.hpp"
#include "prismlab/errors.hpp"
#include "prismlab/lp.hpp"
#include "prismlab/tverberg.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace prismlab;

namespace {

Point pt(std::initializer_list<int> coords)
{
    return Point(coords.begin(), coords.end());
}

PointConfig config(int dim, std::vector<Point> points)
{
    return PointConfig{dim, std::move(points)};
}

PointConfig random_config(std::mt19937& rng, int dim, std::size_t count, int spread)
{
    PointConfig c{dim, {}};
    for (std::size_t i = 0; i < count; ++i) {
        Point p;
        for (int k = 0; k < dim; ++k) {
            const int num = static_cast<int>(rng() % static_cast<unsigned>(2 * spread + 1)) - spread;
            const int den = 1 + static_cast<int>(rng() % 3);
            p.push_back(Rational(num, den));
        }
        c.points.push_back(std::move(p));
    }
    return c;
}

std::vector<std::vector<Point>> blocks_of(const PointConfig& c, const std::vector<std::vector<int>>& blocks)
{
    std::vector<std::vector<Point>> out;
    for (const auto& b : blocks) {
        out.emplace_back();
        for (int i : b)
            out.back().push_back(c.points[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("exact LP feasibility", "[lp]")
{
    // y1 + y2 = 1, y1 - y2 = 1/2
    const auto y = find_nonnegative_solution({{1, 1}, {1, -1}}, {1, Rational(1, 2)});
    REQUIRE(y);
    CHECK((*y)[0] == Rational(3, 4));
    CHECK((*y)[1] == Rational(1, 4));
    CHECK_FALSE(find_nonnegative_solution({{1, 1}}, {-1}));
    CHECK_FALSE(find_nonnegative_solution({{1, -1}, {1, -1}}, {1, 2}));
    // redundant rows are fine
    CHECK(find_nonnegative_solution({{1, 1}, {2, 2}}, {1, 2}));
}

TEST_CASE("hull intersection examples", "[tverberg]")
{
    auto w = hulls_intersect({{pt({0})}, {pt({0})}}, 1);
    REQUIRE(w);
    CHECK(w->x == pt({0}));

    w = hulls_intersect({{pt({0}), pt({2})}, {pt({1})}}, 1);
    REQUIRE(w);
    CHECK(w->x == pt({1}));
    CHECK(w->weights[0] == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    CHECK_FALSE(hulls_intersect({{pt({0, 0}), pt({1, 0})}, {pt({0, 1}), pt({1, 1})}}, 2));

    w = hulls_intersect({{pt({0, 0}), pt({1, 1})}, {pt({1, 0}), pt({0, 1})}}, 2);
    REQUIRE(w);
    CHECK(w->x == Point{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("hull intersection errors", "[tverberg]")
{
    CHECK_THROWS_AS(hulls_intersect({{pt({0, 0})}, {pt({1})}}, 2), DimensionError);
    CHECK_THROWS_AS(hulls_intersect({{pt({0})}, {}}, 1), std::invalid_argument);
}

TEST_CASE("hull intersection agrees with Fourier-Motzkin", "[tverberg][property]")
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 2);
        const int r = 2 + static_cast<int>(rng() % 2);
        const std::size_t n = static_cast<std::size_t>(r) + rng() % (7 - static_cast<unsigned>(r));
        const PointConfig c = random_config(rng, d, n, 3);
        std::vector<int> labels(n);
        for (std::size_t i = 0; i < n; ++i)
            labels[i] = i < static_cast<std::size_t>(r) ? static_cast<int>(i) : static_cast<int>(rng() % static_cast<unsigned>(r));
        const auto parts = blocks_of(c, blocks_from_labels(labels, r));
        const auto w = hulls_intersect(parts, d);
        REQUIRE(w.has_value() == oracle::hulls_meet(parts, d));
    }
}

TEST_CASE("Tverberg search examples", "[tverberg]")
{
    auto res = tverberg_search(config(1, {pt({0}), pt({5}), pt({2})}), 2);
    REQUIRE(res.certificate);
    CHECK(res.guaranteed);
    CHECK(res.certificate->parts == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(res.certificate->witness == pt({2}));

    const PointConfig interior = config(2, {pt({0, 0}), pt({4, 0}), pt({0, 4}), pt({1, 1})});
    res = tverberg_search(interior, 2);
    REQUIRE(res.certificate);
    CHECK(res.certificate->parts == std::vector<std::vector<int>>{{0, 1, 2}, {3}});
    CHECK(res.certificate->witness == pt({1, 1}));
    CHECK(verify_certificate(interior, *res.certificate));
}

TEST_CASE("Radon partition of a square is the pair of diagonals", "[tverberg]")
{
    const PointConfig square = parse_points(read_file(std::string(PRISMLAB_TEST_DATA) + "/radon4.txt"));
    REQUIRE(square.dim == 2);
    REQUIRE(square.points.size() == 4);
    const auto res = tverberg_search(square, 2);
    REQUIRE(res.certificate);
    CHECK(res.certificate->parts == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(res.certificate->witness == Point{Rational(1, 2), Rational(1, 2)});

    // oracle: the diagonals are the only one of the 7 partitions that meets
    std::vector<std::vector<std::vector<int>>> meeting;
    std::size_t total = 0;
    for_each_set_partition(4, 2, [&](std::span<const int> labels) {
        ++total;
        const auto blocks = blocks_from_labels(labels, 2);
        if (oracle::hulls_meet(blocks_of(square, blocks), 2))
            meeting.push_back(blocks);
        return true;
    });
    CHECK(total == 7);
    CHECK(meeting == std::vector<std::vector<std::vector<int>>>{{{0, 1}, {2, 3}}});
}

TEST_CASE("certificate verification is exact", "[tverberg]")
{
    const PointConfig line = config(1, {pt({0}), pt({5}), pt({2})});
    auto cert = *tverberg_search(line, 2).certificate;
    CHECK(verify_certificate(line, cert));

    auto bad = cert;
    bad.witness = pt({3});
    CHECK_FALSE(verify_certificate(line, bad));
    bad = cert;
    bad.weights[0] = {Rational(1), Rational(0, 1) - Rational(0)};
    CHECK_FALSE(verify_certificate(line, bad));
    bad = cert;
    bad.weights[0] = {Rational(6, 5), Rational(-1, 5)};
    CHECK_FALSE(verify_certificate(line, bad)); // negative weight
    bad = cert;
    bad.parts = {{0}, {2}};
    CHECK_FALSE(verify_certificate(line, bad));
}

TEST_CASE("affine TTT examples", "[tverberg]")
{
    // triangle plus centroid
    const PointConfig tri = config(2, {pt({0, 0}), pt({3, 0}), pt({0, 3}), pt({1, 1})});
    const auto a = affine_ttt_check(tri, 2);
    CHECK(a.spec == ComplexSpec{3, 2});
    CHECK(a.faces == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3}});
    CHECK(a.certificate.witness == pt({1, 1}));

    const PointConfig line = config(1, {pt({0}), pt({1}), pt({2}), pt({3}), pt({4})});
    const auto b = affine_ttt_check(line, 3);
    CHECK(b.spec == ComplexSpec{4, 3});
    CHECK(b.top_cell.num_parts() == 3);
    CHECK(b.top_cell.vertex_count() == 5);
    CHECK(verify_certificate(line, b.certificate));

    // oracle over all 25 unordered 3-partitions
    std::size_t total = 0;
    std::vector<std::vector<std::vector<int>>> meeting;
    for_each_set_partition(5, 3, [&](std::span<const int> labels) {
        ++total;
        const auto blocks = blocks_from_labels(labels, 3);
        if (oracle::hulls_meet(blocks_of(line, blocks), 1))
            meeting.push_back(blocks);
        return true;
    });
    REQUIRE(total == 25);
    REQUIRE_FALSE(meeting.empty());
    CHECK(b.certificate.parts == meeting.front());
    CHECK(b.certificate.parts == std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2}});

    CHECK_THROWS_AS(affine_ttt_check(config(1, {pt({0}), pt({1})}), 2), std::invalid_argument);
}

TEST_CASE("Tverberg's theorem on random configurations", "[tverberg][property]")
{
    std::mt19937 rng(2024);
    for (int d = 1; d <= 2; ++d)
        for (int r = 2; r <= 3; ++r)
            for (int trial = 0; trial < 25; ++trial) {
                const PointConfig c = random_config(rng, d, tverberg_number(d, r), 5);
                const auto res = tverberg_search(c, r);
                REQUIRE(res.guaranteed);
                REQUIRE(res.certificate);
                REQUIRE_FALSE(res.theorem_violation());
                REQUIRE(verify_certificate(c, *res.certificate));
            }
}

TEST_CASE("search results agree with Fourier-Motzkin below the Tverberg number", "[tverberg][property]")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 2);
        const int r = 2;
        const std::size_t n = 2 + rng() % (tverberg_number(d, r) - 2);
        const PointConfig c = random_config(rng, d, n, 4);
        const auto res = tverberg_search(c, r);
        CHECK_FALSE(res.guaranteed);
        std::optional<std::vector<std::vector<int>>> first;
        for_each_set_partition(static_cast<int>(n), r, [&](std::span<const int> labels) {
            const auto blocks = blocks_from_labels(labels, r);
            if (oracle::hulls_meet(blocks_of(c, blocks), d)) {
                first = blocks;
                return false;
            }
            return true;
        });
        REQUIRE(res.certificate.has_value() == first.has_value());
        if (first)
            REQUIRE(res.certificate->parts == *first);
    }
}

TEST_CASE("affine equivariance", "[tverberg][property]")
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const PointConfig c = random_config(rng, 2, tverberg_number(2, 2), 4);
        // x -> M x + t with det M = 1 * 3 - 1 * 1 != 0
        const Rational m[2][2] = {{1, 1}, {1, 3}};
        const Point t{Rational(-2), Rational(1, 3)};
        auto image = [&](const Point& p) {
            return Point{m[0][0] * p[0] + m[0][1] * p[1] + t[0], m[1][0] * p[0] + m[1][1] * p[1] + t[1]};
        };
        PointConfig moved{2, {}};
        for (const auto& p : c.points)
            moved.points.push_back(image(p));
        const auto before = tverberg_search(c, 2);
        const auto after = tverberg_search(moved, 2);
        REQUIRE(before.certificate);
        REQUIRE(after.certificate);
        REQUIRE(before.certificate->parts == after.certificate->parts);
        // the same weights certify the image witness
        PartitionCertificate carried = *before.certificate;
        carried.witness = image(carried.witness);
        REQUIRE(verify_certificate(moved, carried));
    }
}

TEST_CASE("point file parsing", "[tverberg]")
{
    const auto c = parse_points("# header\n1 2\n\n-3/4 0\n  5 1/2  \n");
    CHECK(c.dim == 2);
    REQUIRE(c.points.size() == 3);
    CHECK(c.points[1] == Point{Rational(-3, 4), Rational(0)});
    CHECK(c.points[2] == Point{Rational(5), Rational(1, 2)});
    CHECK_THROWS_AS(parse_points("1 2\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_points("1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_points("1/0\n"), ParseError);
    CHECK_THROWS_AS(parse_points("# nothing\n"), ParseError);
    CHECK(tverberg_number(2, 3) == 7);
    CHECK(tverberg_number(1, 2) == 3);
}
