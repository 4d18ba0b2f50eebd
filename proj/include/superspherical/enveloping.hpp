#pragma once

#include "superspherical/lie_superalgebra.hpp"
#include "superspherical/parity.hpp"
#include "superspherical/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace superspherical {

// Ordered PBW monomial x_0^{e_0} ... x_{n-1}^{e_{n-1}} over the generator order
// of an algebra. Ordered by total degree, then lexicographically on the
// exponent vector (a larger exponent on an earlier generator is larger).
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(std::size_t dim) : exps_(dim, 0) {}
    explicit Monomial(std::vector<Exponent> exps);

    std::size_t size() const { return exps_.size(); }
    unsigned degree() const { return degree_; }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const { return exps_; }

    void set(std::size_t i, Exponent e);
    void increment(std::size_t i) { set(i, static_cast<Exponent>(exps_[i] + 1)); }
    void decrement(std::size_t i) { set(i, static_cast<Exponent>(exps_[i] - 1)); }

    // Generator indices in order, each repeated by its exponent.
    std::vector<std::size_t> word() const;

    friend bool operator==(const Monomial &a, const Monomial &b) { return a.exps_ == b.exps_; }
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b);

private:
    std::vector<Exponent> exps_;
    unsigned degree_ = 0;
};

// Exponent vectors of total degree d with odd exponents in {0,1}, ascending.
std::vector<Monomial> graded_monomials(std::span<const Parity> parities, unsigned d);

// Finite linear combination of PBW monomials. No zero coefficients stored.
class UElement {
public:
    using Terms = std::map<Monomial, Scalar>;

    UElement() = default;
    UElement(const Monomial &m, const Scalar &c) { add(m, c); }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Monomial &m) const;
    // -1 for zero.
    long degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.degree()); }
    const Monomial &leading_monomial() const { return terms_.rbegin()->first; }

    void add(const Monomial &m, const Scalar &c);
    void add_scaled(const UElement &other, const Scalar &c);

    UElement &operator+=(const UElement &o);
    UElement &operator-=(const UElement &o);
    UElement &operator*=(const Scalar &s);
    friend UElement operator+(UElement a, const UElement &b) { return a += b; }
    friend UElement operator-(UElement a, const UElement &b) { return a -= b; }
    friend UElement operator*(const Scalar &s, UElement a) { return a *= s; }
    friend UElement operator-(UElement a) { return a *= Scalar(-1); }
    friend bool operator==(const UElement &, const UElement &) = default;

private:
    Terms terms_;
};

// Element of U(g) (x) U(g) on pairs of PBW monomials.
class TensorElement {
public:
    using Key = std::pair<Monomial, Monomial>;
    using Terms = std::map<Key, Scalar>;

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Monomial &a, const Monomial &b, const Scalar &c);
    TensorElement &operator+=(const TensorElement &o);
    TensorElement &operator-=(const TensorElement &o);
    friend bool operator==(const TensorElement &, const TensorElement &) = default;

private:
    Terms terms_;
};

// A factor of a word: coeff * vector.
struct Factor {
    SuperVector vector;
    Scalar coeff = 1;
};

// U(g) for a fixed algebra. Products are rewritten into the PBW basis by
// inserting generators from the right: for a monomial m = m' x_l and a
// generator x_g with g < l,
//   m x_g = (-1)^{|l||g|} (m' x_g) x_l + m' [x_l, x_g],
// and an odd x_l x_l becomes [x_l, x_l]/2. The products m * x_g are memoized;
// the cache is filled idempotently and is safe to share across threads.
class Enveloping {
public:
    explicit Enveloping(std::shared_ptr<const LieSuperalgebra> g);

    const LieSuperalgebra &algebra() const { return *algebra_; }
    std::shared_ptr<const LieSuperalgebra> algebra_ptr() const { return algebra_; }
    std::size_t dim() const { return algebra_->dim(); }

    Monomial unit_monomial() const { return Monomial(dim()); }
    Monomial generator_monomial(std::size_t i) const;
    UElement one() const { return scalar(1); }
    UElement scalar(const Scalar &c) const;
    UElement generator(std::size_t i) const;
    UElement from_vector(const SuperVector &v) const;
    // Throws std::invalid_argument for an unknown name.
    UElement generator(const std::string &name) const;

    Parity parity(const Monomial &m) const;
    // nullopt when the element mixes parities; even for zero.
    std::optional<Parity> parity(const UElement &u) const;
    bool is_pbw(const Monomial &m) const;

    UElement multiply(const UElement &a, const UElement &b) const;
    UElement multiply(std::initializer_list<UElement> factors) const;
    UElement power(const UElement &a, unsigned n) const;
    // Product of the factors, in PBW normal form.
    UElement normal_form(const std::vector<Factor> &word) const;
    // Product of basis generators given by index.
    UElement normal_form_indices(std::span<const std::size_t> word) const;

    // Delta(x) = x (x) 1 + 1 (x) x extended as an algebra map into the
    // Koszul-signed tensor product. Computed in closed form on monomials.
    TensorElement coproduct(const UElement &a) const;
    TensorElement coproduct(const Monomial &m) const;
    Scalar counit(const UElement &a) const;
    // S(x_1...x_r) = (-1)^r (Koszul sign of the reversal) x_r...x_1.
    UElement antipode(const UElement &a) const;
    UElement antipode(const Monomial &m) const;

    // (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd
    TensorElement tensor_multiply(const TensorElement &x, const TensorElement &y) const;
    // a (x) b -> ab
    UElement contract(const TensorElement &t) const;

    // All PBW monomials of total degree exactly / at most d, ascending.
    std::vector<Monomial> monomials_of_degree(unsigned d) const;
    std::vector<Monomial> monomials_up_to(unsigned d) const;

    std::string format(const Monomial &m) const;
    std::string format(const UElement &u) const;

    std::size_t cache_size() const;

private:
    void check(const Monomial &m) const;
    void check(const UElement &u) const;
    const UElement &times_generator(const Monomial &m, std::size_t g) const;
    UElement times_generator(const UElement &u, std::size_t g) const;
    UElement times_vector(const Monomial &m, const SuperVector &v) const;

    std::shared_ptr<const LieSuperalgebra> algebra_;
    mutable std::shared_mutex cache_mutex_;
    mutable std::map<std::pair<Monomial, std::size_t>, UElement> cache_;
};

} // namespace superspherical
