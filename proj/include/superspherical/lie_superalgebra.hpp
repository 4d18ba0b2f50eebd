#pragma once

#include "superspherical/matrix.hpp"
#include "superspherical/parity.hpp"
#include "superspherical/scalar.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superspherical {

struct Generator {
    std::size_t index = 0;
    std::string name;
    Parity parity = Parity::even;
};

// Sparse coordinate vector over the basis of an algebra. Zero coefficients are
// never stored.
class SuperVector {
public:
    SuperVector() = default;

    static SuperVector basis(std::size_t index, Scalar coeff = 1);
    static SuperVector from_dense(const ScalarVector &coords);

    const std::map<std::size_t, Scalar> &terms() const { return terms_; }
    Scalar coefficient(std::size_t index) const;
    bool is_zero() const { return terms_.empty(); }
    // One past the largest index with a nonzero coefficient.
    std::size_t support_end() const { return terms_.empty() ? 0 : terms_.rbegin()->first + 1; }

    ScalarVector to_dense(std::size_t dim) const;

    void add(std::size_t index, const Scalar &coeff);
    SuperVector &operator+=(const SuperVector &other);
    SuperVector &operator-=(const SuperVector &other);
    SuperVector &operator*=(const Scalar &s);

    friend SuperVector operator+(SuperVector a, const SuperVector &b) { return a += b; }
    friend SuperVector operator-(SuperVector a, const SuperVector &b) { return a -= b; }
    friend SuperVector operator*(const Scalar &s, SuperVector v) { return v *= s; }
    friend SuperVector operator-(SuperVector v) { return v *= Scalar(-1); }
    friend bool operator==(const SuperVector &, const SuperVector &) = default;

private:
    std::map<std::size_t, Scalar> terms_;
};

// Finite-dimensional Lie superalgebra given by structure constants on a
// homogeneous basis. Construction checks the grading and super
// skew-symmetry of the table; the Jacobi identity is checked separately by
// check_jacobi.
class LieSuperalgebra {
public:
    using Table = std::map<std::pair<std::size_t, std::size_t>, SuperVector>;

    LieSuperalgebra() = default;
    // `table` may list either or both of (i,j) and (j,i); a missing partner is
    // filled in by super skew-symmetry. Throws std::invalid_argument on a
    // grading or skew-symmetry violation.
    LieSuperalgebra(std::vector<Generator> generators, const Table &table);

    std::size_t dim() const { return generators_.size(); }
    const std::vector<Generator> &generators() const { return generators_; }
    const Generator &generator(std::size_t i) const { return generators_.at(i); }
    Parity parity(std::size_t i) const { return generators_[i].parity; }
    std::optional<std::size_t> index_of(const std::string &name) const;

    // [x_i, x_j]
    const SuperVector &bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    SuperVector bracket(const SuperVector &x, const SuperVector &y) const;

    // nullopt for inhomogeneous vectors; even for zero.
    std::optional<Parity> parity_of(const SuperVector &v) const;

    // Matrix of ad_x in the basis (column j holds [x, x_j]).
    Matrix ad_matrix(const SuperVector &x) const;

    std::string format(const SuperVector &v) const;

private:
    void check_index(const SuperVector &v) const;

    std::vector<Generator> generators_;
    std::vector<SuperVector> table_;
};

struct JacobiReport {
    bool pass = true;
    // (i, j, k) with [x_i,[x_j,x_k]] != [[x_i,x_j],x_k] + (-1)^{|i||j|}[x_j,[x_i,x_k]]
    std::vector<std::array<std::size_t, 3>> failures;
};

JacobiReport check_jacobi(const LieSuperalgebra &g);

// gl(m|n) on matrix units E_{ij}, generator index i*(m+n)+j. Rows 0..m-1 are
// even, m..m+n-1 odd. Names are E<a>,<b> with odd labels suffixed by 'b'
// (E1,1b is the unit in row 1, column 1-bar).
LieSuperalgebra gl_superalgebra(std::size_t m, std::size_t n);

// Re-express g in a new homogeneous basis. `basis[i]` becomes generator i
// with the given name.
struct Rebased {
    LieSuperalgebra algebra;
    Matrix to_new; // old coordinates -> new coordinates
    Matrix to_old; // new coordinates -> old coordinates
};
Rebased rebase(const LieSuperalgebra &g, const std::vector<SuperVector> &basis,
               const std::vector<std::string> &names);

} // namespace superspherical
