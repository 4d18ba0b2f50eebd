#include "superspherical/unipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace superspherical {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Scalar &c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Scalar &c, std::size_t power)
{
    std::vector<Scalar> coeffs(power + 1);
    coeffs[power] = c;
    return UniPoly(std::move(coeffs));
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Scalar UniPoly::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : Scalar(0);
}

Scalar UniPoly::leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

Scalar UniPoly::evaluate(const Scalar &at) const
{
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

UniPoly &UniPoly::operator+=(const UniPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly &UniPoly::operator-=(const UniPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly &UniPoly::operator*=(const Scalar &s)
{
    for (auto &c : coeffs_) {
        c *= s;
    }
    trim();
    return *this;
}

UniPoly operator*(const UniPoly &a, const UniPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

std::vector<std::string> UniPoly::coefficient_strings() const
{
    std::vector<std::string> out;
    for (const auto &c : coeffs_) {
        out.push_back(to_string(c));
    }
    return out;
}

std::string UniPoly::format(const std::string &var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Scalar &c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        const Scalar mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        if (mag != 1 || k == 0) {
            os << to_string(mag);
            if (k > 0) {
                os << "*";
            }
        }
        if (k >= 1) {
            os << var;
        }
        if (k >= 2) {
            os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

namespace {

std::vector<Integer> positive_divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<Scalar> UniPoly::rational_roots() const
{
    if (degree() <= 0) {
        return {};
    }
    Integer scale = 1;
    for (const auto &c : coeffs_) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<Integer> ints;
    for (const auto &c : coeffs_) {
        ints.push_back(c.get_num() * (scale / c.get_den()));
    }
    std::set<Scalar> roots;
    std::size_t low = 0;
    while (ints[low] == 0) {
        ++low;
    }
    if (low > 0) {
        roots.insert(Scalar(0));
    }
    if (low + 1 < ints.size()) {
        for (const auto &p : positive_divisors(ints[low])) {
            for (const auto &q : positive_divisors(ints.back())) {
                for (int sign : {1, -1}) {
                    Scalar cand(sign * p, q);
                    cand.canonicalize();
                    if (evaluate(cand) == 0) {
                        roots.insert(cand);
                    }
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

} // namespace superspherical
