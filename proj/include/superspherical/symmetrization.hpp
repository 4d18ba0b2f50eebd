#pragma once

#include "superspherical/enveloping.hpp"
#include "superspherical/report.hpp"
#include "superspherical/span.hpp"
#include "superspherical/symmetric_pair.hpp"

#include <memory>
#include <string>
#include <vector>

namespace superspherical {

// Elements of a symmetric superalgebra are combinations of exponent vectors
// over the algebra's basis; the container is shared with U(g).
using SymElement = UElement;

// S(V) for a homogeneous family V of vectors in g (a basis of p or a).
class SymmetricAlgebra {
public:
    // Throws std::invalid_argument on an inhomogeneous or dependent basis.
    SymmetricAlgebra(std::shared_ptr<const LieSuperalgebra> g, std::vector<SuperVector> basis, std::string tag);

    const LieSuperalgebra &algebra() const { return *algebra_; }
    const std::vector<SuperVector> &basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    Parity parity(std::size_t i) const { return parities_[i]; }
    Parity parity(const Monomial &m) const;
    // "S(p)" or "S(a)"
    const std::string &tag() const { return tag_; }

    SymElement one() const { return SymElement(Monomial(dim()), 1); }
    SymElement generator(std::size_t i) const;
    // Coordinates of v in the basis; throws std::invalid_argument when v is
    // outside the span.
    SymElement from_vector(const SuperVector &v) const;

    // Supercommutative product: x_i x_j = (-1)^{|i||j|} x_j x_i.
    SymElement multiply(const SymElement &a, const SymElement &b) const;

    std::vector<Monomial> monomials_of_degree(unsigned d) const;
    std::vector<Monomial> monomials_up_to(unsigned d) const;

    std::string format(const SymElement &s) const;

private:
    std::shared_ptr<const LieSuperalgebra> algebra_;
    std::vector<SuperVector> basis_;
    std::vector<Parity> parities_;
    std::string tag_;
};

// x_1...x_r -> (1/r!) sum_pi sgn(pi; x) x_pi(1) ... x_pi(r) in U(g), with
// the x_i the basis vectors of `s`.
UElement supersymmetrize(const Enveloping &u, const SymmetricAlgebra &s, const SymElement &y);

// Super-derivation extension of ad_x to S(p). Throws std::invalid_argument
// when [x, basis] leaves the span of the basis.
SymElement ad_action(const SymmetricAlgebra &s, const SuperVector &x, const SymElement &y);

// s-bar: S(p) -> U(g)/U(g)k. Reduction inverts it on a chosen element.
class LeftIdealReducer {
public:
    LeftIdealReducer(const SymmetricPair &pair, const Enveloping &u);

    const SymmetricAlgebra &sp() const { return sp_; }
    // The unique y in S(p) with s(y) = u mod U(g)k.
    SymElement reduce(const UElement &u) const;
    // u written in the p-first PBW basis with k-bearing monomials dropped,
    // as a combination of ordered p-monomials (same exponent vectors as S(p)).
    UElement strip_left_ideal(const UElement &u) const;

private:
    UElement to_p_first(const UElement &u) const;

    const Enveloping &u_;
    SymmetricAlgebra sp_;
    std::shared_ptr<const LieSuperalgebra> rebased_;
    std::shared_ptr<const Enveloping> up_;
    std::vector<SuperVector> image_of_generator_; // old generator -> new coordinates
    std::size_t p_count_ = 0;
};

SymElement reduce_mod_IL(const SymmetricPair &pair, const Enveloping &u, const UElement &x);

// reduce o supersymmetrize = id on S(p)_{<= d}, and the matrix taking
// S(p)-monomials to ordered p-monomials mod U(g)k is unitriangular with full
// rank.
CheckReport check_symmetrization_inverse(const SymmetricPair &pair, const Enveloping &u, unsigned d);

// s(ad_x(m)) in the ideal span for every x in the k basis and every S(p)
// monomial m of degree <= d.
bool check_symmetrization_in_ideal(const SymmetricPair &pair, const Enveloping &u, unsigned d);

// s(ad_x(y)) = x s(y) - (-1)^{|x||y|} s(y) x exactly, for all basis x of k
// and S(p) monomials y of degree <= d.
bool check_ad_intertwining(const SymmetricPair &pair, const Enveloping &u, unsigned d);

struct DecompositionRanks {
    std::size_t spa_dim = 0;   // dim S^r(p)
    std::size_t sa_rank = 0;   // rank of S^r(a)
    std::size_t ad_rank = 0;   // rank of ad_k(S^r(p))
    std::size_t total_rank = 0;   // rank of S^r(a) + ad_k(S^r(p))
    std::size_t closure_rank = 0; // smallest ad_k-invariant subspace containing S^r(a)
    bool pass() const { return total_rank == spa_dim && closure_rank == spa_dim; }
};

// S^r(p) = S^r(a) + ad_k(S^r(p)) by exact rank, together with the stronger
// form: iterating ad_k on S^r(a) to closure already fills S^r(p).
DecompositionRanks spa_decomposition_ranks(const SymmetricPair &pair, unsigned r);
bool check_Spa_decomposition(const SymmetricPair &pair, unsigned r);

// U(g)_{<= d} = (I + s(S(a)))_{<= d}: every PBW monomial of degree <= d lies
// in the span of the ideal generators and s(S(a))_{<= d}.
bool check_radial_spanning(const SymmetricPair &pair, const Enveloping &u, unsigned d);

// For each root alpha, x in g_alpha, a in the a basis and k <= k_max:
//   ad_{x + theta x}(a^k) = -k alpha(a) (x - theta x) a^{k-1} in S(p).
CheckItem check_ad_power_lemma(const SymmetricPair &pair, const RootDecomposition &roots, unsigned k_max);

} // namespace superspherical
