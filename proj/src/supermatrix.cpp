#include "superspherical/supermatrix.hpp"

#include <stdexcept>

namespace superspherical {

namespace {

void check_shape(const Matrix &x, SuperShape shape)
{
    if (x.rows() != shape.size() || x.cols() != shape.size()) {
        throw std::invalid_argument("supermatrix has the wrong size");
    }
}

} // namespace

Matrix to_supermatrix(const SuperVector &v, SuperShape shape)
{
    const std::size_t s = shape.size();
    Matrix x(s, s);
    for (const auto &[idx, c] : v.terms()) {
        if (idx >= s * s) {
            throw std::invalid_argument("to_supermatrix: index out of range");
        }
        x(idx / s, idx % s) = c;
    }
    return x;
}

SuperVector from_supermatrix(const Matrix &x, SuperShape shape)
{
    check_shape(x, shape);
    const std::size_t s = shape.size();
    SuperVector v;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            v.add(i * s + j, x(i, j));
        }
    }
    return v;
}

Matrix parity_part(const Matrix &x, SuperShape shape, Parity p)
{
    check_shape(x, shape);
    Matrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (shape.entry_parity(i, j) == p) {
                out(i, j) = x(i, j);
            }
        }
    }
    return out;
}

Matrix supercommutator(const Matrix &x, const Matrix &y, SuperShape shape)
{
    Matrix out(shape.size(), shape.size());
    for (Parity px : {Parity::even, Parity::odd}) {
        const Matrix xp = parity_part(x, shape, px);
        for (Parity py : {Parity::even, Parity::odd}) {
            const Matrix yp = parity_part(y, shape, py);
            const Scalar sign = sign_of_swap(px, py);
            out = out + (xp * yp - sign * (yp * xp));
        }
    }
    return out;
}

Matrix supertranspose(const Matrix &x, SuperShape shape, SupertransposeConvention convention)
{
    check_shape(x, shape);
    const std::size_t s = shape.size();
    Matrix out(s, s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            // out(i,j) comes from x(j,i)
            Scalar v = x(j, i);
            const bool upper_right = !is_odd(shape.index_parity(i)) && is_odd(shape.index_parity(j));
            const bool lower_left = is_odd(shape.index_parity(i)) && !is_odd(shape.index_parity(j));
            if ((convention == SupertransposeConvention::negate_upper_right && upper_right) ||
                (convention == SupertransposeConvention::negate_lower_left && lower_left)) {
                v = -v;
            }
            out(i, j) = v;
        }
    }
    return out;
}

} // namespace superspherical
