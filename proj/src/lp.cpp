#include "prismlab/lp.hpp"

#include <stdexcept>

namespace prismlab {

std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& a,
                                                               const std::vector<Rational>& b)
{
    const std::size_t m = a.size();
    if (b.size() != m)
        throw std::invalid_argument("right-hand side length does not match the row count");
    const std::size_t n = m == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("ragged constraint matrix");

    // Columns 0..n-1 are the original variables, n..n+m-1 the artificials.
    const std::size_t width = n + m;
    RationalMatrix tableau(m, std::vector<Rational>(width + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            tableau[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        tableau[i][n + i] = 1;
        tableau[i][width] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }

    // reduced costs of "minimize the sum of artificials"; cost[width] = -objective
    std::vector<Rational> cost(width + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            cost[j] -= tableau[i][j];
        cost[width] -= tableau[i][width];
    }

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < width; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width)
            break;

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (tableau[i][enter] <= 0)
                continue;
            Rational ratio = tableau[i][width] / tableau[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = std::move(ratio);
            }
        }
        if (leave == m)
            throw std::logic_error("phase-one objective unbounded");

        const Rational pivot = tableau[leave][enter];
        for (auto& v : tableau[leave])
            v /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tableau[i][enter] == 0)
                continue;
            const Rational factor = tableau[i][enter];
            for (std::size_t j = 0; j <= width; ++j)
                tableau[i][j] -= factor * tableau[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational factor = cost[enter];
            for (std::size_t j = 0; j <= width; ++j)
                cost[j] -= factor * tableau[leave][j];
        }
        basis[leave] = enter;
    }

    if (cost[width] != 0)
        return std::nullopt;
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            y[basis[i]] = tableau[i][width];
    return y;
}

} // namespace prismlab
