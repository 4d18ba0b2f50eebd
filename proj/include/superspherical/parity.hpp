#pragma once

#include <cstdint>
#include <span>

namespace superspherical {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b)
{
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr Parity &operator+=(Parity &a, Parity b)
{
    a = a + b;
    return a;
}

constexpr bool is_odd(Parity p) { return p == Parity::odd; }

constexpr Parity parity_of(bool odd) { return odd ? Parity::odd : Parity::even; }

// (-1)^{|a||b|}
constexpr int sign_of_swap(Parity a, Parity b) { return is_odd(a) && is_odd(b) ? -1 : 1; }

// Sign picked up when the block `right` is moved past the block `left`:
// (-1) raised to the number of odd-odd crossings.
int koszul_sign(std::span<const Parity> left, std::span<const Parity> right);

} // namespace superspherical
