#pragma once

#include "superspherical/lie_superalgebra.hpp"
#include "superspherical/matrix.hpp"

#include <cstddef>

namespace superspherical {

// Square (m+n) x (m+n) matrices with rows/columns 0..m-1 even and the rest
// odd. An entry (i,j) has parity |i|+|j|.
struct SuperShape {
    std::size_t m = 0;
    std::size_t n = 0;

    std::size_t size() const { return m + n; }
    Parity index_parity(std::size_t i) const { return parity_of(i >= m); }
    Parity entry_parity(std::size_t i, std::size_t j) const { return index_parity(i) + index_parity(j); }
};

// Coordinates on the gl(m|n) matrix-unit basis <-> matrices.
Matrix to_supermatrix(const SuperVector &v, SuperShape shape);
SuperVector from_supermatrix(const Matrix &x, SuperShape shape);

// Part of x with entry parity `p`.
Matrix parity_part(const Matrix &x, SuperShape shape, Parity p);

// XY - (-1)^{|X||Y|} YX, extended bilinearly over the even/odd parts.
Matrix supercommutator(const Matrix &x, const Matrix &y, SuperShape shape);

// Sign placed on the transposed off-diagonal blocks.
//   negate_upper_right: [[A,B],[C,D]]^st = [[A^t, -C^t],[B^t, D^t]]
//   negate_lower_left:  [[A,B],[C,D]]^st = [[A^t,  C^t],[-B^t, D^t]]
enum class SupertransposeConvention { negate_upper_right, negate_lower_left };

Matrix supertranspose(const Matrix &x, SuperShape shape, SupertransposeConvention convention);

} // namespace superspherical
