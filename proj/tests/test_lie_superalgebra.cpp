#include "doctest.h"

#include "superspherical/gl12.hpp"
#include "superspherical/lie_superalgebra.hpp"
#include "superspherical/supermatrix.hpp"
#include "superspherical/symmetric_pair.hpp"
#include "superspherical/suites.hpp"

#include <stdexcept>

using namespace superspherical;

namespace {

LieSuperalgebra::Table table_of(const LieSuperalgebra &g)
{
    LieSuperalgebra::Table t;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i; j < g.dim(); ++j) {
            if (!g.bracket_basis(i, j).is_zero()) {
                t[{i, j}] = g.bracket_basis(i, j);
            }
        }
    }
    return t;
}

std::vector<SuperVector> diagonal(std::size_t size)
{
    std::vector<SuperVector> h;
    for (std::size_t i = 0; i < size; ++i) {
        h.push_back(SuperVector::basis(i * size + i));
    }
    return h;
}

} // namespace

TEST_CASE("gl(m|n) brackets are supercommutators of matrices")
{
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 1}, {2, 2}, {0, 3}, {3, 0}}) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(check_gl_brackets_match_matrices(m, n));
        CHECK(check_jacobi(gl_superalgebra(m, n)).pass);
    }
}

TEST_CASE("odd generators anticommute into the even part")
{
    const LieSuperalgebra g = gl_superalgebra(1, 1);
    // [E01, E10] = E00 + E11 for odd matrix units
    CHECK(g.bracket_basis(1, 2) == SuperVector::basis(0) + SuperVector::basis(3));
    CHECK(g.bracket_basis(2, 1) == g.bracket_basis(1, 2));
    CHECK(g.parity_of(SuperVector::basis(1) + SuperVector::basis(0)) == std::nullopt);
    CHECK(g.index_of("E1,1b").has_value());
    CHECK_FALSE(g.index_of("E0,0").has_value());
}

TEST_CASE("perturbed structure constants break Jacobi")
{
    const LieSuperalgebra g = gl_superalgebra(1, 2);
    auto t = table_of(g);
    // [E00, E01] = E01; doubling it keeps the grading and skew-symmetry
    t[{0, 1}] = Scalar(2) * t[{0, 1}];
    const LieSuperalgebra bad(g.generators(), t);
    const JacobiReport r = check_jacobi(bad);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.failures.empty());
}

TEST_CASE("table construction rejects grading and symmetry violations")
{
    std::vector<Generator> gens{{0, "x", Parity::even}, {1, "y", Parity::odd}};
    LieSuperalgebra::Table parity_bad{{{0, 1}, SuperVector::basis(0)}};
    CHECK_THROWS_AS(LieSuperalgebra(gens, parity_bad), std::invalid_argument);
    LieSuperalgebra::Table skew_bad{{{1, 1}, SuperVector::basis(0)}, {{0, 0}, SuperVector::basis(0)}};
    CHECK_THROWS_AS(LieSuperalgebra(gens, skew_bad), std::invalid_argument);
}

TEST_CASE("rebasing preserves brackets")
{
    const Gl12 &g = gl12();
    CHECK(check_jacobi(*g.algebra).pass);
    for (std::size_t i = 0; i < Gl12::dim; ++i) {
        for (std::size_t j = 0; j < Gl12::dim; ++j) {
            const Matrix lhs = g.supermatrix(g.algebra->bracket_basis(i, j));
            const Matrix rhs = supercommutator(g.supermatrix(SuperVector::basis(i)),
                                               g.supermatrix(SuperVector::basis(j)), SuperShape{1, 2});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("supertranspose conventions")
{
    const SuperShape shape{1, 2};
    Matrix x(3, 3);
    x(0, 1) = 1; // B block
    x(2, 0) = 5; // C block
    const Matrix a = supertranspose(x, shape, SupertransposeConvention::negate_upper_right);
    CHECK(a(1, 0) == 1);
    CHECK(a(0, 2) == -5);
    const Matrix b = supertranspose(x, shape, SupertransposeConvention::negate_lower_left);
    CHECK(b(1, 0) == -1);
    CHECK(b(0, 2) == 5);

    CHECK_NOTHROW(build_pair(SupertransposeConvention::negate_upper_right));
    CHECK_THROWS_AS(build_pair(SupertransposeConvention::negate_lower_left), PairError);
}

TEST_CASE("the gl(1|2) pair")
{
    const Gl12 &g = gl12();
    CHECK(g.pair.k_basis.size() == 5);
    CHECK(g.pair.p_basis.size() == 4);
    for (auto x : {Gl12::k, Gl12::k1, Gl12::k2, Gl12::ep, Gl12::fp}) {
        CHECK(g.pair.theta.apply(SuperVector::basis(x)) == SuperVector::basis(x));
    }
    for (auto x : {Gl12::z, Gl12::p, Gl12::e, Gl12::f}) {
        CHECK(g.pair.theta.apply(SuperVector::basis(x)) == -SuperVector::basis(x));
    }
    CHECK(check_centralizer(g.pair));
    CHECK(centralizer_in_p(g.pair).size() == 2);
}

TEST_CASE("split_pair rejects bad input")
{
    const Gl12 &g = gl12();
    CHECK_THROWS_AS(split_pair(g.algebra, g.pair.theta, {SuperVector::basis(Gl12::k)}), PairError);
    CHECK_THROWS_AS(split_pair(g.algebra, g.pair.theta, {SuperVector::basis(Gl12::e)}), PairError);
    CHECK_THROWS_AS(split_pair(g.algebra, g.pair.theta, {SuperVector::basis(Gl12::p), SuperVector::basis(Gl12::p)}),
                    PairError);
    Matrix not_auto = Matrix::identity(Gl12::dim);
    not_auto(Gl12::k, Gl12::k) = -1;
    CHECK_THROWS_AS(split_pair(g.algebra, Involution(not_auto), {}), PairError);
}

TEST_CASE("centralizer degenerate cases")
{
    const Gl12 &g = gl12();
    const SymmetricPair small = split_pair(g.algebra, g.pair.theta, {});
    CHECK_FALSE(check_centralizer(small));
    CHECK(centralizer_in_p(small).size() == 4);
    const SymmetricPair only_z = split_pair(g.algebra, g.pair.theta, {SuperVector::basis(Gl12::z)});
    CHECK_FALSE(check_centralizer(only_z));

    // even abelian toy algebra, theta = -id
    auto toy = std::make_shared<const LieSuperalgebra>(
        std::vector<Generator>{{0, "x", Parity::even}, {1, "y", Parity::even}}, LieSuperalgebra::Table{});
    const Involution minus(Scalar(-1) * Matrix::identity(2));
    CHECK_FALSE(check_centralizer(split_pair(toy, minus, {})));
    CHECK_FALSE(check_centralizer(split_pair(toy, minus, {SuperVector::basis(0)})));
    CHECK(check_centralizer(split_pair(toy, minus, {SuperVector::basis(0), SuperVector::basis(1)})));
}

TEST_CASE("gl(n|n) and the queer involution")
{
    for (std::size_t n = 1; n <= 2; ++n) {
        auto q = std::make_shared<const LieSuperalgebra>(gl_superalgebra(n, n));
        std::vector<SuperVector> a;
        for (std::size_t i = 0; i < n; ++i) {
            a.push_back(SuperVector::basis(i * 2 * n + i) - SuperVector::basis((i + n) * 2 * n + i + n));
        }
        const SymmetricPair pair = split_pair(q, queer_involution(n), a);
        CHECK(pair.k_basis.size() == 2 * n * n);
        CHECK(pair.p_basis.size() == 2 * n * n);
        CHECK(check_centralizer(pair));
        a.pop_back();
        CHECK_FALSE(check_centralizer(split_pair(q, queer_involution(n), a)));
    }
}

TEST_CASE("root decompositions")
{
    const Gl12 &g = gl12();
    const RootDecomposition r = gl12_roots(g);
    CHECK(r.roots.size() == 6);
    CHECK(r.zero_weight.size() == 3);
    for (const auto &[alpha, vecs] : r.roots) {
        CHECK(vecs.size() == 1);
        const ScalarVector twisted = twist_root(r, g.pair.theta, alpha, Gl12::dim);
        CHECK(r.roots.count(twisted) == 1);
    }

    const LieSuperalgebra gl22 = gl_superalgebra(2, 2);
    const RootDecomposition r22 = root_decomposition(gl22, diagonal(4));
    CHECK(r22.roots.size() == 12);
    CHECK(r22.zero_weight.size() == 4);

    // ad of a nilpotent element is not diagonalizable
    CHECK_THROWS_AS(root_decomposition(gl_superalgebra(2, 0), {SuperVector::basis(1)}), NotDiagonalizable);
}
