#pragma once

#include "superspherical/dual.hpp"
#include "superspherical/enveloping.hpp"
#include "superspherical/report.hpp"
#include "superspherical/span.hpp"
#include "superspherical/symmetric_pair.hpp"
#include "superspherical/unipoly.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superspherical {

// The pair (gl(1|2), osp(1|2)) on the basis z < k < k1 < k2 < e' < f' < p < e < f.
// Rows of the 3x3 supermatrices are ordered 1, 1-bar, 2-bar.
struct Gl12 {
    enum Gen : std::size_t { z, k, k1, k2, ep, fp, p, e, f };
    static constexpr std::size_t dim = 9;

    // gl(1|2) on matrix units and the nine basis vectors in those units.
    std::shared_ptr<const LieSuperalgebra> matrix_units;
    std::vector<SuperVector> in_matrix_units;
    Matrix to_matrix_units; // coordinates on the nine -> matrix-unit coordinates

    std::shared_ptr<const LieSuperalgebra> algebra;
    SymmetricPair pair;
    std::shared_ptr<const Enveloping> u;

    UElement gen(Gen g) const { return u->generator(g); }
    // Supermatrix of a vector of the nine-generator algebra.
    Matrix supermatrix(const SuperVector &v) const;
};

// Builds the pair, checking that every basis vector is a theta eigenvector
// with the expected eigenvalue. Throws PairError on a mismatch, which is what
// the other supertranspose convention produces.
Gl12 build_pair(SupertransposeConvention convention = SupertransposeConvention::negate_upper_right);

// Shared instance (built once, thread-safe).
const Gl12 &gl12();

// v_k = a e' + b f', v_p = a e + b f.
std::pair<SuperVector, SuperVector> v_vectors(const Scalar &a, const Scalar &b);

// The brackets behind the second relations plus
// [v_p, p] = -v_k and [v_k, p] = -v_p, each computed from the structure
// constants and from 3x3 supermatrices.
CheckReport verify_table(const Gl12 &g);

// alpha_n and beta_{n-1} by the recursion, alpha_1 = x, beta_0 = 1.
std::pair<UniPoly, UniPoly> alpha_beta_recursive(unsigned n);
// sum_k E_{2k} C(n,2k) x^{n-2k}
UniPoly alpha_closed(unsigned n);
// beta_{n-1}(x) = sum_k 2^{2k+2}(2^{2k+2}-1) B_{2k+2}/(2k+2) C(n, n-1-2k) x^{n-1-2k}
UniPoly beta_closed(unsigned n);
// beta_{n-1} = sum over odd i of C(n,i) alpha_{n-i}
UniPoly beta_from_alpha(unsigned n);
// Read off p^n v_k = v_k alpha_n(p) + beta_{n-1}(p) v_p in U(g) for v = (1,0)
// and v = (0,1). Throws std::logic_error on residual terms or disagreement.
std::pair<UniPoly, UniPoly> alpha_beta_from_pbw(const Gl12 &g, unsigned n);

// P(p) as an element of U(g).
UElement poly_in(const Gl12 &g, const UniPoly &poly, Gl12::Gen x = Gl12::p);

// p^n v_k = v_k sum_{even i} C(n,i) p^{n-i} + v_p sum_{odd i} C(n,i) p^{n-i}
bool verify_binomial_splitting(const Gl12 &g, unsigned n, const Scalar &a = 1, const Scalar &b = 0);

struct LemmaIdentity {
    std::string name;
    UElement lhs;
    UElement rhs;
};

// k0 = alpha k + beta k1 + gamma k2.
std::vector<LemmaIdentity> first_relations(const Gl12 &g, unsigned n, const Scalar &alpha, const Scalar &beta,
                                           const Scalar &gamma);
// Relations (i)-(iv) for v = (a,b). Relation (iv) is in its corrected form:
//   p^n e f v_k = v_k alpha_n(p) e f - a k2 beta_{n-1}(p) f + b k beta_{n-1}(p) f
//                 - b k1 beta_{n-1}(p) e - b beta_{n-1}(p) f + p^{n+1} v_p
//                 - a e' alpha_n(p) - a beta_{n-1}(p) e
std::vector<LemmaIdentity> second_relations(const Gl12 &g, unsigned n, const Scalar &a, const Scalar &b);
// Relation (iv) with the k2 term missing its trailing f and the last term
// missing the factor a. Holds at n = 0 only; kept as a negative check.
LemmaIdentity second_relation_iv_variant(const Gl12 &g, unsigned n, const Scalar &a, const Scalar &b);
// v_p p^n = alpha_n(p) v_p - v_k beta_{n-1}(p)
LemmaIdentity mirror_relation(const Gl12 &g, unsigned n, const Scalar &a, const Scalar &b);

// Every relation for n <= n_max with `draws` random parameter choices drawn
// from small rationals.
CheckReport verify_lemma_suites(const Gl12 &g, unsigned n_max, unsigned draws, std::uint64_t seed);

struct IdealVector {
    // "i", "ii" or "iii"
    std::string family;
    UElement vector;
};

// Basis vectors of I of degree <= d:
//   (i)   z^m p^n e, z^m p^n f
//   (ii)  z^m beta_{n-1}(p) e f - z^m p^{n+1}, beta_{-1} = 0
//   (iii) PBW monomials containing one of k, k1, k2, e', f'
std::vector<IdealVector> ideal_basis(const Gl12 &g, unsigned d);

// Representatives z^m and z^m p^k e f of degree <= d.
std::vector<Monomial> quotient_representatives(const Gl12 &g, unsigned d);

// (a) membership of every basis vector in the span of ideal generators,
// (b) rank of the basis vectors equals their count,
// (c) basis vectors together with the representatives span U(g)_{<= d}.
CheckReport verify_ideal_basis(const Gl12 &g, unsigned d);

// Canonical representative of u modulo I, a combination of z^m and
// z^m p^k e f.
UElement quotient_reduce(const Gl12 &g, const UElement &u);

// (a) quotient images of z^a p^b, a + b <= d, span the representatives of
// degree <= d; (b) the kernel of that map at degree <= d is spanned by
// z^a p, a <= d - 1.
CheckReport radial_restriction_check(const Gl12 &g, unsigned d);

// Functional vanishing on I: a random linear form on the representatives
// composed with quotient_reduce, tabulated up to degree_bound.
DualFunctional random_spherical_functional(const Gl12 &g, unsigned degree_bound, std::uint64_t seed);

// Products of random I-vanishing functionals vanish on the ideal basis at
// degree <= d.
CheckItem check_spherical_products(const Gl12 &g, unsigned d, unsigned draws, std::uint64_t seed);

// Root decomposition of gl(1|2) for h = span{z, p, k}.
RootDecomposition gl12_roots(const Gl12 &g);

} // namespace superspherical
