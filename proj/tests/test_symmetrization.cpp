#include "doctest.h"

#include "superspherical/gl12.hpp"
#include "superspherical/symmetrization.hpp"

#include <stdexcept>

using namespace superspherical;

namespace {

SymmetricAlgebra sp()
{
    const Gl12 &g = gl12();
    return SymmetricAlgebra(g.algebra, g.pair.p_basis, "S(p)");
}

std::size_t index_in_p(Gl12::Gen x)
{
    const auto &pb = gl12().pair.p_basis;
    for (std::size_t i = 0; i < pb.size(); ++i) {
        if (pb[i] == SuperVector::basis(x)) {
            return i;
        }
    }
    throw std::logic_error("not a p basis vector");
}

} // namespace

TEST_CASE("S(p) is supercommutative")
{
    const SymmetricAlgebra s = sp();
    const SymElement e = s.generator(index_in_p(Gl12::e));
    const SymElement f = s.generator(index_in_p(Gl12::f));
    const SymElement p = s.generator(index_in_p(Gl12::p));
    CHECK(s.multiply(e, f) == -s.multiply(f, e));
    CHECK(s.multiply(e, e).is_zero());
    CHECK(s.multiply(p, e) == s.multiply(e, p));
    CHECK(s.monomials_of_degree(2).size() == 3 + 4 + 1);
    CHECK_THROWS_AS(s.from_vector(SuperVector::basis(Gl12::k)), std::invalid_argument);
}

TEST_CASE("supersymmetrization of small elements")
{
    const Gl12 &g = gl12();
    const SymmetricAlgebra s = sp();
    const auto &u = *g.u;
    const SymElement e = s.generator(index_in_p(Gl12::e));
    const SymElement f = s.generator(index_in_p(Gl12::f));
    const SymElement p = s.generator(index_in_p(Gl12::p));
    CHECK(supersymmetrize(u, s, e) == g.gen(Gl12::e));
    // (ef - fe)/2 for two odd factors
    const UElement ef = u.multiply(g.gen(Gl12::e), g.gen(Gl12::f));
    const UElement fe = u.multiply(g.gen(Gl12::f), g.gen(Gl12::e));
    CHECK(supersymmetrize(u, s, s.multiply(e, f)) == Scalar(1, 2) * (ef - fe));
    // (pe + ep)/2 for a mixed pair
    const UElement pe = u.multiply(g.gen(Gl12::p), g.gen(Gl12::e));
    const UElement ep = u.multiply(g.gen(Gl12::e), g.gen(Gl12::p));
    CHECK(supersymmetrize(u, s, s.multiply(p, e)) == Scalar(1, 2) * (pe + ep));
    CHECK(supersymmetrize(u, s, s.multiply(p, p)) == u.multiply(g.gen(Gl12::p), g.gen(Gl12::p)));
}

TEST_CASE("reduction modulo the left ideal")
{
    const Gl12 &g = gl12();
    const SymmetricAlgebra s = sp();
    const UElement fpe = g.u->multiply(g.gen(Gl12::fp), g.gen(Gl12::e));
    CHECK(reduce_mod_IL(g.pair, *g.u, fpe) == -s.generator(index_in_p(Gl12::p)));
    CHECK(reduce_mod_IL(g.pair, *g.u, g.gen(Gl12::k)).is_zero());
    CHECK(reduce_mod_IL(g.pair, *g.u, g.u->multiply(g.gen(Gl12::p), g.gen(Gl12::k))).is_zero());
}

TEST_CASE("supersymmetrization inverse on the gl(1|2) pair")
{
    const Gl12 &g = gl12();
    const CheckReport r = check_symmetrization_inverse(g.pair, *g.u, 3);
    CHECK(r.pass());
    CHECK(check_symmetrization_in_ideal(g.pair, *g.u, 3));
    CHECK(check_ad_intertwining(g.pair, *g.u, 3));
}

TEST_CASE("supersymmetrization inverse on gl(2|2) / q(2)")
{
    auto q = std::make_shared<const LieSuperalgebra>(gl_superalgebra(2, 2));
    const std::vector<SuperVector> a{SuperVector::basis(0) - SuperVector::basis(10),
                                     SuperVector::basis(5) - SuperVector::basis(15)};
    const SymmetricPair pair = split_pair(q, queer_involution(2), a);
    const Enveloping u(q);
    CHECK(check_symmetrization_inverse(pair, u, 2).pass());
    CHECK(check_ad_intertwining(pair, u, 2));
}

TEST_CASE("decomposition of S(p)")
{
    const Gl12 &g = gl12();
    const std::vector<std::array<std::size_t, 5>> expected{
        {1, 1, 0, 1, 1}, {4, 2, 3, 4, 4}, {8, 3, 6, 8, 8}, {12, 4, 9, 12, 12}};
    for (unsigned r = 0; r < expected.size(); ++r) {
        const DecompositionRanks d = spa_decomposition_ranks(g.pair, r);
        CAPTURE(r);
        CHECK(d.spa_dim == expected[r][0]);
        CHECK(d.sa_rank == expected[r][1]);
        CHECK(d.ad_rank == expected[r][2]);
        CHECK(d.total_rank == expected[r][3]);
        CHECK(d.closure_rank == expected[r][4]);
        CHECK(check_Spa_decomposition(g.pair, r));
    }
}

TEST_CASE("decomposition fails without the Cartan subspace")
{
    const Gl12 &g = gl12();
    const SymmetricPair small = split_pair(g.algebra, g.pair.theta, {SuperVector::basis(Gl12::z)});
    CHECK_FALSE(check_Spa_decomposition(small, 1));
    CHECK_FALSE(check_radial_spanning(small, *g.u, 2));
}

TEST_CASE("radial spanning and the ad power lemma")
{
    const Gl12 &g = gl12();
    CHECK(check_radial_spanning(g.pair, *g.u, 3));
    const CheckItem item = check_ad_power_lemma(g.pair, gl12_roots(g), 4);
    CHECK(item.pass);
    CHECK(item.witness.empty());
}

TEST_CASE("ad action is a super derivation")
{
    const Gl12 &g = gl12();
    const SymmetricAlgebra s = sp();
    const SymElement e = s.generator(index_in_p(Gl12::e));
    const SymElement p = s.generator(index_in_p(Gl12::p));
    for (const auto &x : g.pair.k_basis) {
        const Parity px = g.algebra->parity_of(x).value();
        const SymElement lhs = ad_action(s, x, s.multiply(e, p));
        const SymElement rhs = s.multiply(ad_action(s, x, e), p) +
                               Scalar(sign_of_swap(px, Parity::odd)) * s.multiply(e, ad_action(s, x, p));
        CHECK(lhs == rhs);
    }
    CHECK_THROWS_AS(ad_action(s, SuperVector::basis(Gl12::p), e), std::invalid_argument);
}
