#include "superspherical/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace superspherical {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<ScalarVector> &rows)
{
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), width);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width) {
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        }
        for (std::size_t c = 0; c < width; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<ScalarVector> &cols, std::size_t height)
{
    Matrix m(height, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != height) {
            throw std::invalid_argument("Matrix::from_columns: column length mismatch");
        }
        for (std::size_t r = 0; r < height; ++r) {
            m(r, c) = cols[c][r];
        }
    }
    return m;
}

ScalarVector Matrix::row(std::size_t r) const
{
    return ScalarVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ScalarVector Matrix::column(std::size_t c) const
{
    ScalarVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto &x : data_) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("Matrix product: dimension mismatch");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar &aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j) != 0) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix &a, const Matrix &b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("Matrix sum: dimension mismatch");
    }
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

Matrix operator-(const Matrix &a, const Matrix &b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("Matrix difference: dimension mismatch");
    }
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] -= b.data_[i];
    }
    return out;
}

Matrix operator*(const Scalar &s, const Matrix &m)
{
    Matrix out = m;
    for (auto &x : out.data_) {
        x *= s;
    }
    return out;
}

ScalarVector Matrix::apply(const ScalarVector &v) const
{
    if (v.size() != cols_) {
        throw std::invalid_argument("Matrix::apply: dimension mismatch");
    }
    ScalarVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if ((*this)(r, c) != 0 && v[c] != 0) {
                out[r] += (*this)(r, c) * v[c];
            }
        }
    }
    return out;
}

std::size_t rank(const Matrix &m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            a[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
        }
    }

    // Bareiss: after step k every remaining entry is an exact k x k minor, so
    // the division by the previous pivot is exact.
    Integer prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t pivot = rk;
        while (pivot < rows && a[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(a[pivot], a[rk]);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[r][j] = (a[rk][c] * a[r][j] - a[r][c] * a[rk][j]);
                mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rk][c];
        ++rk;
    }
    return rk;
}

std::vector<std::size_t> row_reduce(Matrix &m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m(p, j), m(r, j));
            }
        }
        const Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) {
                continue;
            }
            const Scalar factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (m(r, j) != 0) {
                    m(i, j) -= factor * m(r, j);
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<ScalarVector> nullspace(const Matrix &m)
{
    Matrix reduced = m;
    const auto pivots = row_reduce(reduced);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<ScalarVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        ScalarVector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -reduced(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<ScalarVector> solve_membership(const ScalarVector &target,
                                             const std::vector<ScalarVector> &span)
{
    const std::size_t n = target.size();
    for (const auto &v : span) {
        if (v.size() != n) {
            throw std::invalid_argument("solve_membership: vector length mismatch");
        }
    }
    // Columns are the spanning vectors, last column is the target.
    Matrix aug(n, span.size() + 1);
    for (std::size_t c = 0; c < span.size(); ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            aug(r, c) = span[c][r];
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        aug(r, span.size()) = target[r];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == span.size()) {
        return std::nullopt;
    }
    ScalarVector coeffs(span.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        coeffs[pivots[i]] = aug(i, span.size());
    }
    return coeffs;
}

std::optional<Matrix> inverse(const Matrix &m)
{
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("inverse: matrix not square");
    }
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, n + r) = 1;
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
        return std::nullopt;
    }
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = aug(r, n + c);
        }
    }
    return out;
}

} // namespace superspherical
