#include "prismlab/combinatorics.hpp"

#include <stdexcept>

namespace prismlab {

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return result;
}

std::uint64_t factorial(int n)
{
    if (n < 0 || n > 20)
        throw std::out_of_range("factorial: argument out of 64-bit range");
    std::uint64_t result = 1;
    for (int i = 2; i <= n; ++i)
        result *= static_cast<std::uint64_t>(i);
    return result;
}

std::uint64_t stirling2(int n, int k)
{
    if (n < 0 || k < 0)
        return 0;
    // S(i, j) = j S(i-1, j) + S(i-1, j-1)
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = static_cast<std::uint64_t>(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

std::uint64_t cell_count_closed_form(int n_vertices_minus_one, int parts, int k)
{
    if (k < 0)
        return 0;
    return binomial(n_vertices_minus_one + 1, k + parts) * factorial(parts) *
           stirling2(k + parts, parts);
}

namespace {

bool extend(std::vector<int>& labels, int pos, int used, int blocks,
            const std::function<bool(std::span<const int>)>& visit)
{
    const int n = static_cast<int>(labels.size());
    if (pos == n)
        return used == blocks ? visit(labels) : true;
    // not enough positions left to open the remaining blocks
    if (blocks - used > n - pos)
        return true;
    const int top = std::min(used, blocks - 1);
    for (int label = 0; label <= top; ++label) {
        labels[pos] = label;
        if (!extend(labels, pos + 1, std::max(used, label + 1), blocks, visit))
            return false;
    }
    return true;
}

} // namespace

bool for_each_set_partition(int n, int blocks,
                            const std::function<bool(std::span<const int>)>& visit)
{
    if (n <= 0 || blocks <= 0 || blocks > n)
        return true;
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    return extend(labels, 1, 1, blocks, visit);
}

std::vector<std::vector<int>> blocks_from_labels(std::span<const int> labels, int blocks)
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < labels.size(); ++i)
        out.at(static_cast<std::size_t>(labels[i])).push_back(static_cast<int>(i));
    return out;
}

} // namespace prismlab
