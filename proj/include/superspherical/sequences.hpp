#pragma once

#include "superspherical/scalar.hpp"

#include <vector>

namespace superspherical {

// Euler zigzag number A_n (alternating permutations of {1..n}), from the
// Seidel boustrophedon triangle. A_0 = 1.
Integer zigzag(unsigned n);
// A_0 .. A_n
std::vector<Integer> zigzag_table(unsigned n);

// Counts down-up permutations sigma(1) > sigma(2) < sigma(3) > ... of
// {1..n} by enumeration.
// Throws std::invalid_argument for n > 10.
Integer zigzag_bruteforce(unsigned n);

// E_{2n} = (-1)^n A_{2n}; odd indices give 0.
Integer euler_number(unsigned n);

// B_n from sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1 (so B_1 = -1/2).
Scalar bernoulli(unsigned n);
std::vector<Scalar> bernoulli_table(unsigned n);

// A_{2m-1} == (-1)^{m-1} 2^{2m} (2^{2m}-1) B_{2m} / (2m), m >= 1.
bool check_tangent_identity(unsigned m);

// sum_{n<=N} A_n x^n/n! against tan x + sec x built from B and E:
// checks (tan + sec) cos = sin + 1 coefficientwise up to x^N, where tan comes
// from the Bernoulli closed form and sec from the Euler numbers.
bool check_tan_sec_series(unsigned order);

} // namespace superspherical
