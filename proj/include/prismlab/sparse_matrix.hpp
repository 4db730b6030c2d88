#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace prismlab {

using BigInt = boost::multiprecision::cpp_int;

struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    BigInt value;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Integer matrix in coordinate form, entries sorted by (row, col), no zeros.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    /// Sorts the entries; throws std::invalid_argument on out-of-range
    /// indices, duplicate positions or zero values.
    SparseIntMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

    static SparseIntMatrix from_dense(const std::vector<std::vector<BigInt>>& dense);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<MatrixEntry>& entries() const { return entries_; }

    std::vector<std::vector<BigInt>> to_dense() const;

    /// "rows cols nnz" header, then one "row col value" line per entry.
    std::string to_text() const;

    friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<MatrixEntry> entries_;
};

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

} // namespace prismlab
