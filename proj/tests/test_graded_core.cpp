#include "doctest.h"

#include "superspherical/lie_superalgebra.hpp"
#include "superspherical/matrix.hpp"
#include "superspherical/parity.hpp"
#include "superspherical/scalar.hpp"
#include "superspherical/unipoly.hpp"

#include <stdexcept>

using namespace superspherical;

TEST_CASE("scalar text round trip")
{
    CHECK(to_string(parse_scalar("3/6")) == "1/2");
    CHECK(to_string(parse_scalar("-4/2")) == "-2");
    CHECK(to_string(Scalar(1, 3) + Scalar(1, 6)) == "1/2");
    CHECK(parse_scalar("-7/21") == Scalar(-1, 3));
    CHECK(parse_scalar("12") == 12);
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("koszul signs")
{
    CHECK(sign_of_swap(Parity::odd, Parity::odd) == -1);
    CHECK(sign_of_swap(Parity::odd, Parity::even) == 1);
    const Parity a[] = {Parity::odd, Parity::even, Parity::odd};
    const Parity b[] = {Parity::odd, Parity::odd};
    // two odd on the left, two odd on the right: four crossings
    CHECK(koszul_sign(a, b) == 1);
    const Parity c[] = {Parity::odd};
    CHECK(koszul_sign(a, c) == 1);
    CHECK(koszul_sign(c, c) == -1);
}

TEST_CASE("exact rank, nullspace and membership")
{
    const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, Scalar(1, 2)}});
    CHECK(rank(m) == 2);
    const auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    for (const auto &v : ns) {
        for (const auto &x : m.apply(v)) {
            CHECK(x == 0);
        }
    }
    const auto c = solve_membership({3, 4, Scalar(3, 2)}, {{1, 2, 1}, {2, 2, Scalar(1, 2)}});
    REQUIRE(c);
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == 1);
    CHECK_FALSE(solve_membership({0, 0, 1}, {{1, 0, 0}, {0, 1, 0}}));

    const Matrix a = Matrix::from_rows({{2, 1}, {7, 4}});
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
}

TEST_CASE("univariate polynomials")
{
    const UniPoly x = UniPoly::x();
    const UniPoly p = x * x - UniPoly::constant(2) * x - UniPoly::constant(3);
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(3) == 0);
    CHECK(p.rational_roots() == std::vector<Scalar>{-1, 3});
    CHECK((p - p).is_zero());
    CHECK(p.coefficient_strings() == std::vector<std::string>{"-3", "-2", "1"});
    const UniPoly q(std::vector<Scalar>{Scalar(1, 2), 0, 0});
    CHECK(q.degree() == 0);
    CHECK((UniPoly::constant(4) * x * x - UniPoly::constant(1)).rational_roots() ==
          std::vector<Scalar>{Scalar(-1, 2), Scalar(1, 2)});
}

TEST_CASE("super vectors stay sparse")
{
    SuperVector v = SuperVector::basis(2, 3) + SuperVector::basis(5, -1);
    v -= SuperVector::basis(2, 3);
    CHECK(v.terms().size() == 1);
    CHECK(v.support_end() == 6);
    CHECK(SuperVector::from_dense(v.to_dense(6)) == v);
}
