#include "doctest.h"

#include "superspherical/gl12.hpp"
#include "superspherical/sequences.hpp"

#include <random>

using namespace superspherical;

namespace {

UniPoly poly(std::vector<long> c)
{
    std::vector<Scalar> s(c.begin(), c.end());
    return UniPoly(std::move(s));
}

} // namespace

TEST_CASE("alpha and beta spot values")
{
    auto [a1, b0] = alpha_beta_recursive(1);
    CHECK(a1 == UniPoly::x());
    CHECK(b0 == UniPoly::constant(1));
    CHECK(alpha_beta_recursive(4).first == poly({5, 0, -6, 0, 1}));
    CHECK(alpha_beta_recursive(3).second == poly({-2, 0, 3}));
    CHECK(alpha_beta_recursive(4).second == poly({0, -8, 0, 4}));
    CHECK(alpha_closed(4) == poly({5, 0, -6, 0, 1}));
    CHECK(beta_closed(3) == poly({-2, 0, 3}));
    CHECK(alpha_beta_from_pbw(gl12(), 4).first == poly({5, 0, -6, 0, 1}));
    CHECK(alpha_beta_from_pbw(gl12(), 3).second == poly({-2, 0, 3}));
    // alpha_n(0) = E_n
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(alpha_closed(n).evaluate(0) == Scalar(euler_number(n)));
    }
}

TEST_CASE("three routes agree")
{
    for (unsigned n = 1; n <= 12; ++n) {
        CAPTURE(n);
        const auto rec = alpha_beta_recursive(n);
        CHECK(rec.first == alpha_closed(n));
        CHECK(rec.second == beta_closed(n));
        CHECK(rec.second == beta_from_alpha(n));
        CHECK(rec == alpha_beta_from_pbw(gl12(), n));
    }
}

TEST_CASE("binomial splitting")
{
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(verify_binomial_splitting(gl12(), n, 1, 0));
        CHECK(verify_binomial_splitting(gl12(), n, Scalar(2, 3), -5));
    }
}

TEST_CASE("bracket table")
{
    const CheckReport r = verify_table(gl12());
    CHECK(r.pass());
    CHECK(r.items.size() >= 20);
}

TEST_CASE("relation lemmas hold")
{
    const Gl12 &g = gl12();
    for (unsigned n = 0; n <= 4; ++n) {
        for (const auto &id : first_relations(g, n, 2, Scalar(-1, 3), 5)) {
            CAPTURE(id.name);
            CHECK(id.lhs == id.rhs);
        }
        for (const auto &id : second_relations(g, n, Scalar(3, 2), -2)) {
            CAPTURE(id.name);
            CHECK(id.lhs == id.rhs);
        }
        const auto m = mirror_relation(g, n, 1, 4);
        CHECK(m.lhs == m.rhs);
    }
    CHECK(verify_lemma_suites(g, 4, 5, 1).pass());
}

TEST_CASE("relation (iv) variant fails from n = 1")
{
    const Gl12 &g = gl12();
    const auto at0 = second_relation_iv_variant(g, 0, 2, 3);
    CHECK(at0.lhs == at0.rhs);
    for (unsigned n = 1; n <= 4; ++n) {
        const auto id = second_relation_iv_variant(g, n, 2, 3);
        CHECK(id.lhs != id.rhs);
    }
}

TEST_CASE("ideal basis")
{
    const Gl12 &g = gl12();
    const std::vector<std::size_t> counts{0, 8, 47, 173, 490};
    for (unsigned d = 1; d <= 4; ++d) {
        CAPTURE(d);
        CHECK(ideal_basis(g, d).size() == counts[d]);
        CHECK(verify_ideal_basis(g, d).pass());
    }
    const std::vector<std::size_t> reps{1, 2, 4, 7, 11};
    for (unsigned d = 0; d <= 4; ++d) {
        CHECK(quotient_representatives(g, d).size() == reps[d]);
    }
}

TEST_CASE("generic spanning set misses basis vectors at their own degree")
{
    const Gl12 &g = gl12();
    // p = f e' + e' f needs degree-2 products
    CHECK_FALSE(ideal_span(*g.u, g.pair.k_basis, 1, 0).contains(g.gen(Gl12::p)));
    CHECK(ideal_span(*g.u, g.pair.k_basis, 1).contains(g.gen(Gl12::p)));
    for (unsigned d = 1; d <= 3; ++d) {
        const EchelonSpan generic = ideal_span(*g.u, g.pair.k_basis, d, d - 1);
        const EchelonSpan full = ideal_span(*g.u, g.pair.k_basis, d);
        CHECK(generic.rank() < full.rank());
        std::size_t missing = 0;
        for (const auto &v : ideal_basis(g, d)) {
            CHECK(full.contains(v.vector));
            missing += generic.contains(v.vector) ? 0 : 1;
        }
        CHECK(missing > 0);
    }
}

TEST_CASE("quotient reduction")
{
    const Gl12 &g = gl12();
    const auto &u = *g.u;
    const UElement p = g.gen(Gl12::p);
    const UElement ef = u.multiply(g.gen(Gl12::e), g.gen(Gl12::f));
    CHECK(quotient_reduce(g, p).is_zero());
    CHECK(quotient_reduce(g, g.gen(Gl12::k)).is_zero());
    CHECK(quotient_reduce(g, g.gen(Gl12::z)) == g.gen(Gl12::z));
    CHECK(quotient_reduce(g, u.power(p, 2)) == ef);
    CHECK(quotient_reduce(g, u.power(p, 3)) == Scalar(2) * u.multiply(p, ef));
    // f e = k - e f
    CHECK(quotient_reduce(g, u.multiply(g.gen(Gl12::f), g.gen(Gl12::e))) == -ef);
    // Reduction agrees with the ideal span: u - quotient(u) lies in I.
    const EchelonSpan span = ideal_span(u, g.pair.k_basis, 4);
    std::mt19937_64 rng(5);
    const auto mons = u.monomials_up_to(4);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    for (int i = 0; i < 60; ++i) {
        const UElement x(mons[pick(rng)], 1);
        CHECK(span.contains(x - quotient_reduce(g, x)));
    }
}

TEST_CASE("radial restriction")
{
    const Gl12 &g = gl12();
    const CheckReport r = radial_restriction_check(g, 4);
    CHECK(r.pass());
    CHECK(check_spherical_products(g, 3, 2, 17).pass);
}

TEST_CASE("a generic functional is not bi-invariant")
{
    const Gl12 &g = gl12();
    DualFunctional lam;
    lam.degree_bound = 2;
    for (const auto &m : g.u->monomials_up_to(2)) {
        lam.values[m] = 1;
    }
    std::vector<UElement> basis;
    for (const auto &v : ideal_basis(g, 2)) {
        basis.push_back(v.vector);
    }
    CHECK_FALSE(is_bi_invariant(lam, basis));
    CHECK(is_bi_invariant(random_spherical_functional(g, 2, 4), basis));
}
