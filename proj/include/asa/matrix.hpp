#pragma once

#include "asa/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace asa {

/// Dense integer matrix, row-major, exact entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<BigInt>& entries() const { return data_; }

    bool is_zero() const;
    bool is_identity() const;
    IntegerMatrix transposed() const;

    /// Exact determinant by fraction-free (Bareiss) elimination.
    BigInt determinant() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix matrix_power(const IntegerMatrix& m, BigInt exponent);

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

} // namespace asa
