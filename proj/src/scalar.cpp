#include "superspherical/scalar.hpp"
#include "superspherical/parity.hpp"

#include <stdexcept>

namespace superspherical {

std::string to_string(const Scalar &s)
{
    if (s.get_den() == 1) {
        return s.get_num().get_str();
    }
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view t)
{
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
        t.remove_prefix(1);
    }
    if (t.empty()) {
        return false;
    }
    for (char c : t) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view t)
{
    if (!t.empty() && t.front() == '+') {
        t.remove_prefix(1);
    }
    return Integer(std::string(t), 10);
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_text(num_text)) {
        throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    }
    Scalar out(parse_integer(num_text));
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_text(den_text) || den_text.front() == '-' || den_text.front() == '+') {
            throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
        }
        const Integer den = parse_integer(den_text);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        out /= Scalar(den);
    }
    return out;
}

Integer binomial(unsigned long n, unsigned long k)
{
    if (k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

int koszul_sign(std::span<const Parity> left, std::span<const Parity> right)
{
    std::size_t odd_left = 0;
    for (Parity p : left) {
        odd_left += is_odd(p) ? 1 : 0;
    }
    std::size_t odd_right = 0;
    for (Parity p : right) {
        odd_right += is_odd(p) ? 1 : 0;
    }
    return (odd_left * odd_right) % 2 == 0 ? 1 : -1;
}

} // namespace superspherical
