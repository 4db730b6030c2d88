#include "prismlab/tverberg.hpp"

#include "prismlab/combinatorics.hpp"
#include "prismlab/errors.hpp"
#include "prismlab/lp.hpp"
#include "prismlab/symmetry.hpp"

#include <sstream>

namespace prismlab {

void PointConfig::validate() const
{
    if (dim < 1)
        throw DimensionError("ambient dimension must be at least 1");
    for (std::size_t i = 0; i < points.size(); ++i)
        if (static_cast<int>(points[i].size()) != dim)
            throw DimensionError("point " + std::to_string(i) + " has " +
                                 std::to_string(points[i].size()) + " coordinates, expected " +
                                 std::to_string(dim));
}

PointConfig parse_points(const std::string& text)
{
    PointConfig config;
    config.dim = 0;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token;
        Point p;
        while (fields >> token) {
            if (p.empty() && token[0] == '#')
                break;
            try {
                p.push_back(parse_rational(token));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (p.empty())
            continue;
        if (config.dim == 0)
            config.dim = static_cast<int>(p.size());
        else if (static_cast<int>(p.size()) != config.dim)
            throw ParseError("line " + std::to_string(line_no) + " has " +
                             std::to_string(p.size()) + " coordinates, expected " +
                             std::to_string(config.dim));
        config.points.push_back(std::move(p));
    }
    if (config.points.empty())
        throw ParseError("no points in input");
    return config;
}

std::optional<HullWitness> hulls_intersect(const std::vector<std::vector<Point>>& parts, int d)
{
    if (d < 1)
        throw DimensionError("ambient dimension must be at least 1");
    if (parts.empty())
        throw std::invalid_argument("no parts given");
    std::size_t vars = 0;
    for (const auto& part : parts) {
        if (part.empty())
            throw std::invalid_argument("empty part");
        for (const auto& p : part)
            if (static_cast<int>(p.size()) != d)
                throw DimensionError("point with " + std::to_string(p.size()) +
                                     " coordinates in R^" + std::to_string(d));
        vars += part.size();
    }

    // Variables: the convex weights of every point, part by part.
    // Rows: sum_j w1_j p1_j - sum_j w0_j p0_j = 0 per part i >= 1 and coordinate,
    // then sum_j wi_j = 1 per part.
    std::vector<std::size_t> offset;
    std::size_t col = 0;
    for (const auto& part : parts) {
        offset.push_back(col);
        col += part.size();
    }
    RationalMatrix a;
    std::vector<Rational> b;
    for (std::size_t i = 1; i < parts.size(); ++i)
        for (int c = 0; c < d; ++c) {
            std::vector<Rational> row(vars);
            for (std::size_t j = 0; j < parts[i].size(); ++j)
                row[offset[i] + j] = parts[i][j][static_cast<std::size_t>(c)];
            for (std::size_t j = 0; j < parts[0].size(); ++j)
                row[offset[0] + j] -= parts[0][j][static_cast<std::size_t>(c)];
            a.push_back(std::move(row));
            b.emplace_back(0);
        }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<Rational> row(vars);
        for (std::size_t j = 0; j < parts[i].size(); ++j)
            row[offset[i] + j] = 1;
        a.push_back(std::move(row));
        b.emplace_back(1);
    }

    const auto y = find_nonnegative_solution(a, b);
    if (!y)
        return std::nullopt;
    HullWitness w;
    w.x.assign(static_cast<std::size_t>(d), Rational(0));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        w.weights.emplace_back(y->begin() + static_cast<std::ptrdiff_t>(offset[i]),
                               y->begin() + static_cast<std::ptrdiff_t>(offset[i] + parts[i].size()));
    }
    for (std::size_t j = 0; j < parts[0].size(); ++j)
        for (int c = 0; c < d; ++c)
            w.x[static_cast<std::size_t>(c)] += w.weights[0][j] * parts[0][j][static_cast<std::size_t>(c)];
    return w;
}

bool verify_certificate(const PointConfig& config, const PartitionCertificate& cert)
{
    const std::size_t n = config.points.size();
    if (cert.parts.size() != cert.weights.size() || cert.parts.empty())
        return false;
    if (static_cast<int>(cert.witness.size()) != config.dim)
        return false;
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const auto& part = cert.parts[i];
        if (part.empty() || part.size() != cert.weights[i].size())
            return false;
        Rational total = 0;
        Point combo(static_cast<std::size_t>(config.dim), Rational(0));
        for (std::size_t j = 0; j < part.size(); ++j) {
            const int idx = part[j];
            if (idx < 0 || static_cast<std::size_t>(idx) >= n || used[static_cast<std::size_t>(idx)])
                return false;
            used[static_cast<std::size_t>(idx)] = true;
            const Rational& w = cert.weights[i][j];
            if (w < 0)
                return false;
            total += w;
            for (int c = 0; c < config.dim; ++c)
                combo[static_cast<std::size_t>(c)] +=
                    w * config.points[static_cast<std::size_t>(idx)][static_cast<std::size_t>(c)];
        }
        if (total != 1 || combo != cert.witness)
            return false;
    }
    for (bool u : used)
        if (!u)
            return false;
    return true;
}

std::size_t tverberg_number(int d, int r)
{
    return static_cast<std::size_t>((d + 1) * (r - 1) + 1);
}

TverbergResult tverberg_search(const PointConfig& config, int r)
{
    config.validate();
    if (r < 2)
        throw std::invalid_argument("r must be at least 2");
    const int n = static_cast<int>(config.points.size());
    TverbergResult result;
    result.guaranteed = config.points.size() >= tverberg_number(config.dim, r);
    for_each_set_partition(n, r, [&](std::span<const int> labels) {
        ++result.partitions_tried;
        auto blocks = blocks_from_labels(labels, r);
        std::vector<std::vector<Point>> parts;
        for (const auto& block : blocks) {
            parts.emplace_back();
            for (int idx : block)
                parts.back().push_back(config.points[static_cast<std::size_t>(idx)]);
        }
        auto hit = hulls_intersect(parts, config.dim);
        if (!hit)
            return true;
        result.certificate = PartitionCertificate{std::move(blocks), std::move(hit->x),
                                                  std::move(hit->weights)};
        return false;
    });
    return result;
}

AffineTttResult affine_ttt_check(const PointConfig& images, int r)
{
    images.validate();
    if (r < 2)
        throw std::invalid_argument("r must be at least 2");
    const std::size_t expected = tverberg_number(images.dim, r);
    if (images.points.size() != expected)
        throw std::invalid_argument("affine check needs exactly " + std::to_string(expected) +
                                    " vertex images, got " + std::to_string(images.points.size()));
    const TverbergResult search = tverberg_search(images, r);
    if (!search.certificate)
        throw TheoremViolationError("no Tverberg partition among " +
                                    std::to_string(search.partitions_tried) + " candidates");
    AffineTttResult out;
    out.spec = ComplexSpec{static_cast<int>(expected) - 1, r};
    out.certificate = *search.certificate;
    out.top_cell = Cell(out.certificate.parts);
    out.faces = complementary_faces(out.top_cell);
    return out;
}

} // namespace prismlab
