#pragma once

#include "superspherical/lie_superalgebra.hpp"
#include "superspherical/matrix.hpp"
#include "superspherical/supermatrix.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace superspherical {

class PairError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Linear map on g given by its matrix in the basis (column j is theta(x_j)).
class Involution {
public:
    Involution() = default;
    explicit Involution(Matrix action) : action_(std::move(action)) {}

    const Matrix &matrix() const { return action_; }
    SuperVector apply(const SuperVector &x) const;

private:
    Matrix action_;
};

// Throws PairError unless theta^2 = 1, theta preserves parity and
// theta([x,y]) = [theta x, theta y] on all basis pairs.
void validate_involution(const LieSuperalgebra &g, const Involution &theta);

// Builds a linear map on gl(m|n) from its action on supermatrices.
Involution involution_from_matrices(SuperShape shape, const std::function<Matrix(const Matrix &)> &action);

// theta(X) = -P X^st P^{-1} on gl(m|n).
Involution supertranspose_involution(SuperShape shape, const Matrix &conjugator,
                                     SupertransposeConvention convention);

// gl(n|n) -> gl(n|n), [[A,B],[C,D]] -> [[D,C],[B,A]]; fixed points q(n).
Involution queer_involution(std::size_t n);

struct SymmetricPair {
    std::shared_ptr<const LieSuperalgebra> algebra;
    Involution theta;
    std::vector<SuperVector> k_basis; // +1 eigenspace, homogeneous, evens first
    std::vector<SuperVector> p_basis; // -1 eigenspace, homogeneous, evens first
    std::vector<SuperVector> a_basis; // even abelian subspace of p
};

// Decompose g = k + p for theta and attach the Cartan subspace. Throws
// PairError when theta is not an involutive automorphism, the eigenspaces do
// not fill g, or a_basis is not an even abelian subspace of p.
SymmetricPair split_pair(std::shared_ptr<const LieSuperalgebra> g, Involution theta,
                         std::vector<SuperVector> a_basis);

// Basis of {x in p : [x, a] = 0 for all a in a}.
std::vector<SuperVector> centralizer_in_p(const SymmetricPair &pair);

// True iff the centralizer of a in p is exactly a.
bool check_centralizer(const SymmetricPair &pair);

class NotDiagonalizable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// g = g_0 + sum_alpha g_alpha for the adjoint action of span(h_basis). Roots
// are rational coordinate vectors (alpha(h_1), ..., alpha(h_r)).
struct RootDecomposition {
    std::vector<SuperVector> h_basis;
    std::vector<SuperVector> zero_weight;
    std::map<ScalarVector, std::vector<SuperVector>> roots;
};

// Throws NotDiagonalizable when the ad h_i do not commute or are not
// diagonalizable over Q.
RootDecomposition root_decomposition(const LieSuperalgebra &g, const std::vector<SuperVector> &h_basis);

// theta(alpha) = alpha o theta, in h coordinates. Requires theta(h) = h.
ScalarVector twist_root(const RootDecomposition &roots, const Involution &theta, const ScalarVector &alpha,
                        std::size_t dim);

// Coordinates of v in the given independent family, or nullopt.
std::optional<ScalarVector> coordinates_in(const std::vector<SuperVector> &family, const SuperVector &v,
                                           std::size_t dim);

} // namespace superspherical
