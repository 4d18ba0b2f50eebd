#include "doctest.h"

#include "superspherical/sequences.hpp"

#include <stdexcept>

using namespace superspherical;

TEST_CASE("zigzag numbers")
{
    const std::vector<long> known{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765};
    const auto table = zigzag_table(12);
    REQUIRE(table.size() == known.size());
    for (std::size_t n = 0; n < known.size(); ++n) {
        CHECK(table[n] == known[n]);
        CHECK(zigzag(static_cast<unsigned>(n)) == known[n]);
    }
}

TEST_CASE("zigzag against enumeration of alternating permutations")
{
    for (unsigned n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(zigzag(n) == zigzag_bruteforce(n));
    }
    CHECK_THROWS_AS(zigzag_bruteforce(11), std::invalid_argument);
}

TEST_CASE("Euler numbers")
{
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(8) == 1385);
    CHECK(euler_number(7) == 0);
}

TEST_CASE("Bernoulli numbers")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Scalar(-1, 2));
    CHECK(bernoulli(2) == Scalar(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == Scalar(-1, 30));
    CHECK(bernoulli(12) == Scalar(-691, 2730));
    CHECK(bernoulli(20) == Scalar(-174611, 330));
    const auto t = bernoulli_table(12);
    // sum_{k<=n} C(n+1,k) B_k = 0
    for (unsigned n = 1; n <= 12; ++n) {
        Scalar s = 0;
        for (unsigned k = 0; k <= n; ++k) {
            s += Scalar(binomial(n + 1, k)) * t[k];
        }
        CHECK(s == 0);
    }
}

TEST_CASE("tangent numbers from Bernoulli numbers")
{
    for (unsigned m = 1; m <= 8; ++m) {
        CHECK(check_tangent_identity(m));
    }
    CHECK(check_tan_sec_series(14));
}
