#include "prismlab/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>

namespace prismlab {

namespace {

bool is_unit(const BigInt& v)
{
    return v == 1 || v == -1;
}

class Eliminator {
public:
    explicit Eliminator(const SparseIntMatrix& m) : rows_(m.rows()), col_rows_(m.cols())
    {
        for (const auto& e : m.entries()) {
            const auto r = static_cast<std::uint32_t>(e.row);
            const auto c = static_cast<std::uint32_t>(e.col);
            rows_[e.row].emplace_back(c, e.value);
            col_rows_[e.col].push_back(r);
            track(r, c, nullptr, &e.value);
        }
    }

    std::vector<BigInt> run()
    {
        std::vector<BigInt> diagonal;
        for (;;) {
            std::uint32_t i = 0;
            std::uint32_t j = 0;
            if (!units_.empty()) {
                std::tie(i, j) = *units_.begin();
            } else if (nonunits_ > 0) {
                std::tie(i, j) = least_nonunit();
            } else {
                break;
            }
            const BigInt p = *find(i, j);

            bool column_clear = true;
            for (std::uint32_t k : rows_in_column(j, i)) {
                const BigInt q = *find(k, j) / p;
                if (q != 0)
                    subtract_row(k, i, q);
                if (find(k, j) != nullptr)
                    column_clear = false;
            }
            if (!column_clear)
                continue;

            // column j now holds only p, so column operations touch row i alone
            auto& row = rows_[i];
            Row kept;
            for (auto& [c, v] : row) {
                if (c == j) {
                    kept.emplace_back(c, v);
                    continue;
                }
                BigInt reduced = v % p; // v - (v / p) * p, truncating
                if (reduced != v)
                    track(i, c, &v, &reduced);
                if (reduced != 0)
                    kept.emplace_back(c, std::move(reduced));
            }
            row = std::move(kept);
            if (row.size() > 1)
                continue;

            track(i, j, &p, nullptr);
            row.clear();
            col_rows_[j].clear();
            diagonal.push_back(abs(p));
        }
        return diagonal;
    }

private:
    using Row = std::vector<std::pair<std::uint32_t, BigInt>>;

    const BigInt* find(std::uint32_t r, std::uint32_t c) const
    {
        const Row& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::uint32_t col) { return e.first < col; });
        return it != row.end() && it->first == c ? &it->second : nullptr;
    }

    // Live rows other than `skip` with an entry in column c, ascending.
    // Also compacts the lazily maintained column index.
    std::vector<std::uint32_t> rows_in_column(std::uint32_t c, std::uint32_t skip)
    {
        auto& list = col_rows_[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](std::uint32_t r) { return find(r, c) == nullptr; }),
                   list.end());
        std::vector<std::uint32_t> out;
        for (std::uint32_t r : list)
            if (r != skip)
                out.push_back(r);
        return out;
    }

    // Bookkeeping for an entry changing from `before` to `after` (null = zero).
    void track(std::uint32_t r, std::uint32_t c, const BigInt* before, const BigInt* after)
    {
        if (before != nullptr && *before != 0) {
            if (is_unit(*before))
                units_.erase({r, c});
            else
                --nonunits_;
        }
        if (after != nullptr && *after != 0) {
            if (is_unit(*after))
                units_.emplace(r, c);
            else
                ++nonunits_;
        }
    }

    // row k -= q * row i
    void subtract_row(std::uint32_t k, std::uint32_t i, const BigInt& q)
    {
        const Row& src = rows_[i];
        Row& dst = rows_[k];
        Row out;
        out.reserve(dst.size() + src.size());
        auto a = dst.begin();
        auto b = src.begin();
        while (a != dst.end() || b != src.end()) {
            if (b == src.end() || (a != dst.end() && a->first < b->first)) {
                out.push_back(std::move(*a));
                ++a;
            } else if (a == dst.end() || b->first < a->first) {
                BigInt v = -q * b->second;
                track(k, b->first, nullptr, &v);
                col_rows_[b->first].push_back(k);
                out.emplace_back(b->first, std::move(v));
                ++b;
            } else {
                BigInt v = a->second - q * b->second;
                track(k, a->first, &a->second, &v);
                if (v != 0)
                    out.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        dst = std::move(out);
    }

    std::pair<std::uint32_t, std::uint32_t> least_nonunit() const
    {
        std::pair<std::uint32_t, std::uint32_t> best{0, 0};
        const BigInt* best_value = nullptr;
        for (std::uint32_t r = 0; r < rows_.size(); ++r)
            for (const auto& [c, v] : rows_[r])
                if (best_value == nullptr || abs(v) < abs(*best_value)) {
                    best = {r, c};
                    best_value = &v;
                }
        return best;
    }

    std::vector<Row> rows_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::set<std::pair<std::uint32_t, std::uint32_t>> units_;
    std::size_t nonunits_ = 0;
};

} // namespace

SNFResult smith_normal_form(const SparseIntMatrix& m)
{
    std::vector<BigInt> d = Eliminator(m).run();
    std::sort(d.begin(), d.end());
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0)
                continue;
            const BigInt g = gcd(d[i], d[j]);
            const BigInt l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    return SNFResult{std::move(d)};
}

} // namespace prismlab
