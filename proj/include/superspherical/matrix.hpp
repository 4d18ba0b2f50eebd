#pragma once

#include "superspherical/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace superspherical {

using ScalarVector = std::vector<Scalar>;

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    // Rows given as vectors of equal length.
    static Matrix from_rows(const std::vector<ScalarVector> &rows);
    // Each vector becomes a column.
    static Matrix from_columns(const std::vector<ScalarVector> &cols, std::size_t height);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ScalarVector row(std::size_t r) const;
    ScalarVector column(std::size_t c) const;

    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator+(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    friend Matrix operator*(const Scalar &s, const Matrix &m);
    friend bool operator==(const Matrix &a, const Matrix &b) = default;

    ScalarVector apply(const ScalarVector &v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

// Exact rank. Rows are scaled to integers and reduced with Bareiss'
// fraction-free elimination.
std::size_t rank(const Matrix &m);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix &m);

// Basis of {x : m x = 0}, one vector per free column, in RREF normal form.
std::vector<ScalarVector> nullspace(const Matrix &m);

// Coefficients c with sum_i c_i span[i] == target, or nullopt when target is
// not in the span. Free coefficients are set to zero.
std::optional<ScalarVector> solve_membership(const ScalarVector &target,
                                             const std::vector<ScalarVector> &span);

// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix &m);

} // namespace superspherical
