#pragma once

#include "superspherical/scalar.hpp"

#include <string>
#include <vector>

namespace superspherical {

// Univariate polynomial over Q, coefficients in ascending powers of x.
// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs);

    static UniPoly constant(const Scalar &c);
    static UniPoly monomial(const Scalar &c, std::size_t power);
    static UniPoly x() { return monomial(1, 1); }

    const std::vector<Scalar> &coefficients() const { return coeffs_; }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coefficient(std::size_t power) const;
    Scalar leading() const;

    Scalar evaluate(const Scalar &at) const;

    UniPoly &operator+=(const UniPoly &o);
    UniPoly &operator-=(const UniPoly &o);
    UniPoly &operator*=(const Scalar &s);

    friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
    friend UniPoly operator*(const Scalar &s, UniPoly p) { return p *= s; }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    friend bool operator==(const UniPoly &, const UniPoly &) = default;

    // Coefficients as "p/q" strings, ascending.
    std::vector<std::string> coefficient_strings() const;
    std::string format(const std::string &var = "x") const;

    // Rational roots (each listed once), ascending.
    std::vector<Scalar> rational_roots() const;

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

} // namespace superspherical
