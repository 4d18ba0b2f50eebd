#include "doctest.h"

#include "superspherical/dual.hpp"
#include "superspherical/gl12.hpp"
#include "superspherical/hopf.hpp"
#include "superspherical/span.hpp"

#include <map>
#include <random>

using namespace superspherical;

namespace {

using Word = std::vector<std::size_t>;

// Rewrites the leftmost out-of-order adjacent pair until every word is
// ordered. Independent of the engine's right insertion.
UElement leftmost_rewrite(const LieSuperalgebra &g, const Word &start)
{
    std::map<Word, Scalar> pending{{start, 1}};
    UElement out;
    while (!pending.empty()) {
        auto node = pending.begin();
        const Word w = node->first;
        const Scalar c = node->second;
        pending.erase(node);
        if (c == 0) {
            continue;
        }
        std::size_t pos = w.size();
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1] || (w[i] == w[i + 1] && is_odd(g.parity(w[i])))) {
                pos = i;
                break;
            }
        }
        if (pos == w.size()) {
            Monomial m(g.dim());
            for (auto x : w) {
                m.increment(x);
            }
            out.add(m, c);
            continue;
        }
        const std::size_t a = w[pos];
        const std::size_t b = w[pos + 1];
        Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
        Word suffix(w.begin() + static_cast<long>(pos) + 2, w.end());
        const Scalar half = a == b ? Scalar(1, 2) : Scalar(1);
        if (a != b) {
            Word swapped = prefix;
            swapped.push_back(b);
            swapped.push_back(a);
            swapped.insert(swapped.end(), suffix.begin(), suffix.end());
            pending[swapped] += c * sign_of_swap(g.parity(a), g.parity(b));
        }
        for (const auto &[idx, coeff] : g.bracket_basis(a, b).terms()) {
            Word replaced = prefix;
            replaced.push_back(idx);
            replaced.insert(replaced.end(), suffix.begin(), suffix.end());
            pending[replaced] += c * coeff * half;
        }
    }
    return out;
}

TensorElement coproduct_by_generators(const Enveloping &u, const Monomial &m)
{
    TensorElement acc;
    acc.add(u.unit_monomial(), u.unit_monomial(), 1);
    for (auto x : m.word()) {
        TensorElement dx;
        dx.add(u.generator_monomial(x), u.unit_monomial(), 1);
        dx.add(u.unit_monomial(), u.generator_monomial(x), 1);
        acc = u.tensor_multiply(acc, dx);
    }
    return acc;
}

// S(x w) = (-1)^{|x||w|} S(w) S(x), S(x) = -x
UElement antipode_recursive(const Enveloping &u, const Word &w)
{
    if (w.empty()) {
        return u.one();
    }
    Word rest(w.begin() + 1, w.end());
    Parity pr = Parity::even;
    for (auto x : rest) {
        pr += u.algebra().parity(x);
    }
    const UElement tail = antipode_recursive(u, rest);
    const Scalar sign = -sign_of_swap(u.algebra().parity(w.front()), pr);
    return sign * u.multiply(tail, u.generator(w.front()));
}

UElement parse_gl12(std::initializer_list<std::pair<Scalar, std::vector<Gl12::Gen>>> terms)
{
    const Gl12 &g = gl12();
    UElement out;
    for (const auto &[c, gens] : terms) {
        UElement t = g.u->one();
        for (auto x : gens) {
            t = g.u->multiply(t, g.gen(x));
        }
        out.add_scaled(t, c);
    }
    return out;
}

} // namespace

TEST_CASE("basic normal forms in U(gl(1|2))")
{
    const Gl12 &g = gl12();
    const auto &u = *g.u;
    using G = Gl12;
    CHECK(u.multiply(g.gen(G::e), g.gen(G::p)) == parse_gl12({{1, {G::p, G::e}}, {-1, {G::ep}}}));
    CHECK(u.multiply(g.gen(G::e), g.gen(G::e)) == -g.gen(G::k2));
    CHECK(u.multiply(g.gen(G::p), g.gen(G::ep)) == parse_gl12({{1, {G::ep, G::p}}, {1, {G::e}}}));
    CHECK(u.multiply(g.gen(G::f), g.gen(G::e)) == parse_gl12({{1, {G::k}}, {-1, {G::e, G::f}}}));
    CHECK(u.format(u.multiply(g.gen(G::e), g.gen(G::p))) == "-e' + p*e");
    CHECK(u.antipode(u.multiply(g.gen(G::e), g.gen(G::f))) == parse_gl12({{1, {G::e, G::f}}, {-1, {G::k}}}));
    CHECK(u.counit(u.multiply(g.gen(G::p), g.gen(G::p))) == 0);
    CHECK(u.counit(u.scalar(7)) == 7);
}

TEST_CASE("engine agrees with the leftmost rewriter on random words")
{
    std::mt19937_64 rng(7);
    const Gl12 &g = gl12();
    const Enveloping u22(std::make_shared<const LieSuperalgebra>(gl_superalgebra(2, 2)));
    for (const Enveloping *u : {g.u.get(), &u22}) {
        std::uniform_int_distribution<std::size_t> pick(0, u->dim() - 1);
        for (int trial = 0; trial < 150; ++trial) {
            Word w(1 + trial % 5);
            for (auto &x : w) {
                x = pick(rng);
            }
            CAPTURE(trial);
            CHECK(u->normal_form_indices(w) == leftmost_rewrite(u->algebra(), w));
        }
    }
}

TEST_CASE("multiplication is associative")
{
    const Gl12 &g = gl12();
    const auto mons = g.u->monomials_up_to(2);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const UElement a(mons[pick(rng)], 1), b(mons[pick(rng)], 2), c(mons[pick(rng)], -1);
        CHECK(g.u->multiply(g.u->multiply(a, b), c) == g.u->multiply(a, g.u->multiply(b, c)));
    }
}

TEST_CASE("PBW monomial counts")
{
    const Gl12 &g = gl12();
    // 5 even and 4 odd generators
    CHECK(g.u->monomials_of_degree(0).size() == 1);
    CHECK(g.u->monomials_of_degree(1).size() == 9);
    CHECK(g.u->monomials_of_degree(2).size() == 15 + 20 + 6);
    CHECK(pbw_dimension(*g.u, 6) == 2471);
    for (const auto &m : g.u->monomials_up_to(4)) {
        CHECK(g.u->is_pbw(m));
    }
}

TEST_CASE("closed-form coproduct matches products of generator coproducts")
{
    for (const Enveloping *u : {gl12().u.get()}) {
        for (const auto &m : u->monomials_up_to(3)) {
            CHECK(u->coproduct(m) == coproduct_by_generators(*u, m));
        }
    }
    const Enveloping u11(std::make_shared<const LieSuperalgebra>(gl_superalgebra(1, 1)));
    for (const auto &m : u11.monomials_up_to(4)) {
        CHECK(u11.coproduct(m) == coproduct_by_generators(u11, m));
    }
}

TEST_CASE("antipode matches the anti-homomorphism recursion")
{
    const Gl12 &g = gl12();
    for (const auto &m : g.u->monomials_up_to(3)) {
        CHECK(g.u->antipode(m) == antipode_recursive(*g.u, m.word()));
    }
}

TEST_CASE("Hopf axioms")
{
    const Gl12 &g = gl12();
    const CheckReport r = hopf_suite(*g.u, 3);
    CHECK(r.items.size() == 4);
    CHECK(r.pass());
    const Enveloping u22(std::make_shared<const LieSuperalgebra>(gl_superalgebra(2, 2)));
    CHECK(hopf_suite(u22, 2).pass());
}

TEST_CASE("dual product is the counit-unital convolution")
{
    const Gl12 &g = gl12();
    const DualFunctional eps = counit_functional(*g.u, 3);
    DualFunctional lam;
    lam.degree_bound = 3;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const auto &m : g.u->monomials_up_to(3)) {
        if (g.u->parity(m) == Parity::even) {
            lam.values[m] = coeff(rng);
        }
    }
    for (const auto &m : g.u->monomials_up_to(3)) {
        CHECK(dual_product(*g.u, eps, lam, m) == lam(m));
        CHECK(dual_product(*g.u, lam, eps, m) == lam(m));
    }
    CHECK_THROWS_AS(lam(g.u->power(g.gen(Gl12::p), 4)), std::invalid_argument);
}

TEST_CASE("ideal span membership")
{
    const Gl12 &g = gl12();
    const EchelonSpan span = ideal_span(*g.u, g.pair.k_basis, 2);
    CHECK(span.contains(g.gen(Gl12::k)));
    CHECK(span.contains(g.gen(Gl12::p)));
    CHECK_FALSE(span.contains(g.gen(Gl12::z)));
    CHECK_FALSE(span.contains(g.u->one()));
    CHECK(span.contains(g.u->multiply(g.gen(Gl12::p), g.gen(Gl12::e))));
}
