#include "prismlab/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace prismlab {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols,
                                 std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (e.row >= rows_ || e.col >= cols_)
            throw std::invalid_argument("matrix entry index out of range");
        if (e.value == 0)
            throw std::invalid_argument("explicit zero entry in sparse matrix");
        if (i > 0 && entries_[i - 1].row == e.row && entries_[i - 1].col == e.col)
            throw std::invalid_argument("duplicate matrix entry");
    }
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<BigInt>>& dense)
{
    const std::size_t rows = dense.size();
    const std::size_t cols = rows == 0 ? 0 : dense[0].size();
    std::vector<MatrixEntry> entries;
    for (std::size_t i = 0; i < rows; ++i) {
        if (dense[i].size() != cols)
            throw std::invalid_argument("ragged dense matrix");
        for (std::size_t j = 0; j < cols; ++j)
            if (dense[i][j] != 0)
                entries.push_back({i, j, dense[i][j]});
    }
    return SparseIntMatrix(rows, cols, std::move(entries));
}

std::vector<std::vector<BigInt>> SparseIntMatrix::to_dense() const
{
    std::vector<std::vector<BigInt>> dense(rows_, std::vector<BigInt>(cols_, 0));
    for (const auto& e : entries_)
        dense[e.row][e.col] = e.value;
    return dense;
}

std::string SparseIntMatrix::to_text() const
{
    std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + " " +
                      std::to_string(entries_.size()) + "\n";
    for (const auto& e : entries_)
        out += std::to_string(e.row) + " " + std::to_string(e.col) + " " + e.value.str() + "\n";
    return out;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix shapes do not compose");
    std::vector<std::vector<const MatrixEntry*>> b_rows(b.rows());
    for (const auto& e : b.entries())
        b_rows[e.row].push_back(&e);
    std::map<std::pair<std::size_t, std::size_t>, BigInt> acc;
    for (const auto& e : a.entries())
        for (const MatrixEntry* f : b_rows[e.col])
            acc[{e.row, f->col}] += e.value * f->value;
    std::vector<MatrixEntry> entries;
    for (auto& [pos, v] : acc)
        if (v != 0)
            entries.push_back({pos.first, pos.second, std::move(v)});
    return SparseIntMatrix(a.rows(), b.cols(), std::move(entries));
}

} // namespace prismlab
