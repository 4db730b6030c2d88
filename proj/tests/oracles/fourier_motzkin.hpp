#pragma once

// Test-only feasibility oracle, independent of the simplex code in src/lp.cpp.

#include "prismlab/rational.hpp"
#include "prismlab/tverberg.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using prismlab::Point;
using prismlab::Rational;

// coeffs . y <= rhs
struct Inequality {
    std::vector<Rational> coeffs;
    Rational rhs;

    bool operator<(const Inequality& o) const
    {
        if (coeffs != o.coeffs)
            return std::lexicographical_compare(coeffs.begin(), coeffs.end(), o.coeffs.begin(), o.coeffs.end());
        return rhs < o.rhs;
    }
};

inline Inequality normalized(Inequality q)
{
    Rational scale = 0;
    for (const auto& c : q.coeffs)
        if (c != 0) {
            scale = c < 0 ? Rational(-c) : c;
            break;
        }
    if (scale == 0)
        return q;
    for (auto& c : q.coeffs)
        c /= scale;
    q.rhs /= scale;
    return q;
}

/// Fourier-Motzkin elimination of every variable; feasible iff no 0 <= negative remains.
inline bool fourier_motzkin_feasible(std::vector<Inequality> system, std::size_t vars)
{
    std::set<Inequality> current;
    for (auto& q : system)
        current.insert(normalized(std::move(q)));
    for (std::size_t v = 0; v < vars; ++v) {
        std::vector<Inequality> pos, neg;
        std::set<Inequality> next;
        for (const auto& q : current) {
            if (q.coeffs[v] > 0)
                pos.push_back(q);
            else if (q.coeffs[v] < 0)
                neg.push_back(q);
            else
                next.insert(q);
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                const Rational a = p.coeffs[v];
                const Rational b = -n.coeffs[v];
                Inequality combo;
                combo.coeffs.resize(p.coeffs.size());
                for (std::size_t i = 0; i < p.coeffs.size(); ++i)
                    combo.coeffs[i] = b * p.coeffs[i] + a * n.coeffs[i];
                combo.coeffs[v] = 0;
                combo.rhs = b * p.rhs + a * n.rhs;
                next.insert(normalized(std::move(combo)));
            }
        current = std::move(next);
        for (const auto& q : current)
            if (std::all_of(q.coeffs.begin(), q.coeffs.end(), [](const Rational& c) { return c == 0; }) &&
                q.rhs < 0)
                return false;
    }
    return std::all_of(current.begin(), current.end(), [](const Inequality& q) { return q.rhs >= 0; });
}

/**
 * Common point of the hulls, modelled with the point x as free variables:
 * sum_j w_ij p_ij - x = 0 and sum_j w_ij = 1 for every part i, w >= 0.
 */
inline bool hulls_meet(const std::vector<std::vector<Point>>& parts, int d)
{
    std::size_t weights = 0;
    for (const auto& p : parts)
        weights += p.size();
    const std::size_t vars = weights + static_cast<std::size_t>(d);
    std::vector<Inequality> system;
    auto add_equality = [&](std::vector<Rational> coeffs, Rational rhs) {
        Inequality le{coeffs, rhs};
        for (auto& c : coeffs)
            c = -c;
        Inequality ge{coeffs, -rhs};
        system.push_back(std::move(le));
        system.push_back(std::move(ge));
    };
    std::size_t offset = 0;
    for (const auto& part : parts) {
        for (int c = 0; c < d; ++c) {
            std::vector<Rational> row(vars);
            for (std::size_t j = 0; j < part.size(); ++j)
                row[offset + j] = part[j][static_cast<std::size_t>(c)];
            row[weights + static_cast<std::size_t>(c)] = -1;
            add_equality(std::move(row), 0);
        }
        std::vector<Rational> sum(vars);
        for (std::size_t j = 0; j < part.size(); ++j) {
            sum[offset + j] = 1;
            std::vector<Rational> nonneg(vars);
            nonneg[offset + j] = -1;
            system.push_back({std::move(nonneg), 0});
        }
        add_equality(std::move(sum), 1);
        offset += part.size();
    }
    return fourier_motzkin_feasible(std::move(system), vars);
}

} // namespace oracle
