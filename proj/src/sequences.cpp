#include "superspherical/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superspherical {

std::vector<Integer> zigzag_table(unsigned n)
{
    // Seidel triangle: row k is built from row k-1 in alternating directions;
    // the far end of row k is A_k.
    std::vector<Integer> out{1};
    std::vector<Integer> row{1};
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<Integer> next(k + 1);
        if (k % 2 == 1) {
            next[0] = 0;
            for (unsigned j = 1; j <= k; ++j) {
                next[j] = next[j - 1] + row[j - 1];
            }
            out.push_back(next[k]);
        } else {
            next[k] = 0;
            for (unsigned j = k; j-- > 0;) {
                next[j] = next[j + 1] + row[j];
            }
            out.push_back(next[0]);
        }
        row = std::move(next);
    }
    return out;
}

Integer zigzag(unsigned n) { return zigzag_table(n).back(); }

Integer zigzag_bruteforce(unsigned n)
{
    if (n > 10) {
        throw std::invalid_argument("zigzag_bruteforce: n must be at most 10");
    }
    std::vector<unsigned> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1u);
    Integer count = 0;
    do {
        bool alternating = n < 2 || sigma[0] > sigma[1];
        for (unsigned i = 0; i + 2 < n && alternating; ++i) {
            const bool up = sigma[i] < sigma[i + 1];
            const bool down_next = sigma[i + 1] > sigma[i + 2];
            alternating = up == down_next;
        }
        if (alternating) {
            ++count;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return count;
}

Integer euler_number(unsigned n)
{
    if (n % 2 == 1) {
        return 0;
    }
    const Integer a = zigzag(n);
    return (n / 2) % 2 == 0 ? a : Integer(-a);
}

std::vector<Scalar> bernoulli_table(unsigned n)
{
    std::vector<Scalar> b{Scalar(1)};
    for (unsigned m = 1; m <= n; ++m) {
        Scalar acc = 0;
        for (unsigned k = 0; k < m; ++k) {
            acc += Scalar(binomial(m + 1, k)) * b[k];
        }
        b.push_back(-acc / Scalar(Integer(m + 1)));
    }
    return b;
}

Scalar bernoulli(unsigned n) { return bernoulli_table(n).back(); }

namespace {

Integer pow2(unsigned e)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

} // namespace

bool check_tangent_identity(unsigned m)
{
    if (m == 0) {
        throw std::invalid_argument("check_tangent_identity: m must be at least 1");
    }
    const Integer four_m = pow2(2 * m);
    Scalar rhs = Scalar(four_m * (four_m - 1)) * bernoulli(2 * m) / Scalar(Integer(2 * m));
    if ((m - 1) % 2 == 1) {
        rhs = -rhs;
    }
    return Scalar(zigzag(2 * m - 1)) == rhs;
}

bool check_tan_sec_series(unsigned order)
{
    const auto a = zigzag_table(order);
    const auto b = bernoulli_table(order + 1);
    std::vector<Scalar> series(order + 1);
    std::vector<Scalar> closed(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        series[n] = Scalar(a[n]) / Scalar(factorial(n));
        if (n % 2 == 1) {
            // tan: (-1)^{(n-1)/2} 2^{n+1} (2^{n+1} - 1) B_{n+1} / (n+1)!
            const Integer p = pow2(n + 1);
            Scalar c = Scalar(p * (p - 1)) * b[n + 1] / Scalar(factorial(n + 1));
            closed[n] = ((n - 1) / 2) % 2 == 0 ? c : Scalar(-c);
        } else {
            // sec: (-1)^{n/2} E_n / n!
            const Integer e = euler_number(n);
            closed[n] = Scalar((n / 2) % 2 == 0 ? e : Integer(-e)) / Scalar(factorial(n));
        }
    }
    if (series != closed) {
        return false;
    }
    // (tan + sec) cos = sin + 1
    for (unsigned n = 0; n <= order; ++n) {
        Scalar lhs = 0;
        for (unsigned j = 0; j <= n; j += 2) {
            const Scalar cos_j = Scalar((j / 2) % 2 == 0 ? 1 : -1) / Scalar(factorial(j));
            lhs += series[n - j] * cos_j;
        }
        Scalar rhs = n == 0 ? Scalar(1) : Scalar(0);
        if (n % 2 == 1) {
            rhs = Scalar(((n - 1) / 2) % 2 == 0 ? 1 : -1) / Scalar(factorial(n));
        }
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

} // namespace superspherical
