#include "superspherical/enveloping.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superspherical {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps))
{
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

void Monomial::set(std::size_t i, Exponent e)
{
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
}

std::vector<std::size_t> Monomial::word() const
{
    std::vector<std::size_t> out;
    out.reserve(degree_);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        out.insert(out.end(), exps_[i], i);
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
{
    if (auto c = a.degree_ <=> b.degree_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
}

Scalar UElement::coefficient(const Monomial &m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void UElement::add(const Monomial &m, const Scalar &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void UElement::add_scaled(const UElement &other, const Scalar &c)
{
    if (c == 0) {
        return;
    }
    for (const auto &[m, v] : other.terms_) {
        add(m, v * c);
    }
}

UElement &UElement::operator+=(const UElement &o)
{
    for (const auto &[m, v] : o.terms_) {
        add(m, v);
    }
    return *this;
}

UElement &UElement::operator-=(const UElement &o)
{
    for (const auto &[m, v] : o.terms_) {
        add(m, -v);
    }
    return *this;
}

UElement &UElement::operator*=(const Scalar &s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_) {
        v *= s;
    }
    return *this;
}

void TensorElement::add(const Monomial &a, const Monomial &b, const Scalar &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

TensorElement &TensorElement::operator+=(const TensorElement &o)
{
    for (const auto &[k, v] : o.terms_) {
        add(k.first, k.second, v);
    }
    return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &o)
{
    for (const auto &[k, v] : o.terms_) {
        add(k.first, k.second, -v);
    }
    return *this;
}

Enveloping::Enveloping(std::shared_ptr<const LieSuperalgebra> g) : algebra_(std::move(g))
{
    if (!algebra_) {
        throw std::invalid_argument("Enveloping: null algebra");
    }
}

void Enveloping::check(const Monomial &m) const
{
    if (m.size() != dim()) {
        throw std::invalid_argument("monomial belongs to a different algebra");
    }
}

void Enveloping::check(const UElement &u) const
{
    if (!u.is_zero()) {
        check(u.terms().begin()->first);
    }
}

Monomial Enveloping::generator_monomial(std::size_t i) const
{
    Monomial m(dim());
    m.increment(i);
    return m;
}

UElement Enveloping::scalar(const Scalar &c) const { return UElement(unit_monomial(), c); }

UElement Enveloping::generator(std::size_t i) const { return UElement(generator_monomial(i), 1); }

UElement Enveloping::generator(const std::string &name) const
{
    const auto idx = algebra_->index_of(name);
    if (!idx) {
        throw std::invalid_argument("unknown generator '" + name + "'");
    }
    return generator(*idx);
}

UElement Enveloping::from_vector(const SuperVector &v) const
{
    if (v.support_end() > dim()) {
        throw std::invalid_argument("vector belongs to a different algebra");
    }
    UElement out;
    for (const auto &[i, c] : v.terms()) {
        out.add(generator_monomial(i), c);
    }
    return out;
}

Parity Enveloping::parity(const Monomial &m) const
{
    Parity p = Parity::even;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] % 2 == 1 && is_odd(algebra_->parity(i))) {
            p += Parity::odd;
        }
    }
    return p;
}

std::optional<Parity> Enveloping::parity(const UElement &u) const
{
    std::optional<Parity> p;
    for (const auto &[m, c] : u.terms()) {
        const Parity q = parity(m);
        if (p && *p != q) {
            return std::nullopt;
        }
        p = q;
    }
    return p.value_or(Parity::even);
}

bool Enveloping::is_pbw(const Monomial &m) const
{
    if (m.size() != dim()) {
        return false;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (is_odd(algebra_->parity(i)) && m[i] > 1) {
            return false;
        }
    }
    return true;
}

const UElement &Enveloping::times_generator(const Monomial &m, std::size_t g) const
{
    auto key = std::make_pair(m, g);
    {
        std::shared_lock lock(cache_mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
    }

    std::size_t last = m.size();
    for (std::size_t i = m.size(); i-- > 0;) {
        if (m[i] > 0) {
            last = i;
            break;
        }
    }

    UElement result;
    if (last == m.size() || g > last || (g == last && !is_odd(algebra_->parity(g)))) {
        Monomial appended = m;
        appended.increment(g);
        result.add(appended, 1);
    } else {
        Monomial rest = m;
        rest.decrement(last);
        if (g == last) {
            // odd x x = [x, x] / 2
            result = times_vector(rest, Scalar(1, 2) * algebra_->bracket_basis(g, g));
        } else {
            const UElement left = times_generator(rest, g);
            result = times_generator(left, last);
            result *= Scalar(sign_of_swap(algebra_->parity(last), algebra_->parity(g)));
            result += times_vector(rest, algebra_->bracket_basis(last, g));
        }
    }

    std::unique_lock lock(cache_mutex_);
    auto [it, inserted] = cache_.try_emplace(std::move(key), std::move(result));
    return it->second;
}

UElement Enveloping::times_generator(const UElement &u, std::size_t g) const
{
    UElement out;
    for (const auto &[m, c] : u.terms()) {
        out.add_scaled(times_generator(m, g), c);
    }
    return out;
}

UElement Enveloping::times_vector(const Monomial &m, const SuperVector &v) const
{
    UElement out;
    for (const auto &[g, c] : v.terms()) {
        out.add_scaled(times_generator(m, g), c);
    }
    return out;
}

UElement Enveloping::multiply(const UElement &a, const UElement &b) const
{
    check(a);
    check(b);
    UElement out;
    for (const auto &[mb, cb] : b.terms()) {
        UElement cur = a;
        for (std::size_t g : mb.word()) {
            cur = times_generator(cur, g);
        }
        out.add_scaled(cur, cb);
    }
    return out;
}

UElement Enveloping::multiply(std::initializer_list<UElement> factors) const
{
    UElement out = one();
    for (const auto &f : factors) {
        out = multiply(out, f);
    }
    return out;
}

UElement Enveloping::power(const UElement &a, unsigned n) const
{
    UElement out = one();
    for (unsigned i = 0; i < n; ++i) {
        out = multiply(out, a);
    }
    return out;
}

UElement Enveloping::normal_form(const std::vector<Factor> &word) const
{
    UElement out = one();
    for (const auto &f : word) {
        UElement factor = from_vector(f.vector);
        factor *= f.coeff;
        out = multiply(out, factor);
    }
    return out;
}

UElement Enveloping::normal_form_indices(std::span<const std::size_t> word) const
{
    UElement out = one();
    for (std::size_t g : word) {
        if (g >= dim()) {
            throw std::invalid_argument("generator index out of range");
        }
        out = times_generator(out, g);
    }
    return out;
}

TensorElement Enveloping::coproduct(const Monomial &m) const
{
    check(m);
    const std::size_t n = dim();
    TensorElement out;
    std::vector<Monomial::Exponent> left(n, 0);
    // Odometer over 0 <= left_i <= m_i.
    while (true) {
        Monomial lm(left);
        std::vector<Monomial::Exponent> right(n);
        Integer coeff = 1;
        for (std::size_t i = 0; i < n; ++i) {
            right[i] = static_cast<Monomial::Exponent>(m[i] - left[i]);
            coeff *= binomial(m[i], left[i]);
        }
        // Left piece of generator l passes the right piece of every i < l.
        unsigned crossings = 0;
        unsigned odd_right_so_far = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_odd(algebra_->parity(i))) {
                continue;
            }
            crossings += left[i] * odd_right_so_far;
            odd_right_so_far += right[i];
        }
        Scalar c(coeff);
        if (crossings % 2 == 1) {
            c = -c;
        }
        out.add(lm, Monomial(right), c);

        std::size_t i = 0;
        while (i < n && left[i] == m[i]) {
            left[i] = 0;
            ++i;
        }
        if (i == n) {
            break;
        }
        ++left[i];
    }
    return out;
}

TensorElement Enveloping::coproduct(const UElement &a) const
{
    TensorElement out;
    for (const auto &[m, c] : a.terms()) {
        for (const auto owned = coproduct(m); const auto &[k, v] : owned.terms()) {
            out.add(k.first, k.second, v * c);
        }
    }
    return out;
}

Scalar Enveloping::counit(const UElement &a) const
{
    check(a);
    return a.coefficient(unit_monomial());
}

UElement Enveloping::antipode(const Monomial &m) const
{
    check(m);
    std::vector<std::size_t> w = m.word();
    std::size_t odd = 0;
    for (std::size_t g : w) {
        odd += is_odd(algebra_->parity(g)) ? 1 : 0;
    }
    const std::size_t flips = w.size() + odd * (odd == 0 ? 0 : odd - 1) / 2;
    std::reverse(w.begin(), w.end());
    UElement out = normal_form_indices(w);
    if (flips % 2 == 1) {
        out *= Scalar(-1);
    }
    return out;
}

UElement Enveloping::antipode(const UElement &a) const
{
    UElement out;
    for (const auto &[m, c] : a.terms()) {
        out.add_scaled(antipode(m), c);
    }
    return out;
}

TensorElement Enveloping::tensor_multiply(const TensorElement &x, const TensorElement &y) const
{
    TensorElement out;
    for (const auto &[kx, cx] : x.terms()) {
        const UElement a(kx.first, 1);
        const UElement b(kx.second, 1);
        const Parity pb = parity(kx.second);
        for (const auto &[ky, cy] : y.terms()) {
            const UElement ac = multiply(a, UElement(ky.first, 1));
            const UElement bd = multiply(b, UElement(ky.second, 1));
            Scalar c = cx * cy * sign_of_swap(pb, parity(ky.first));
            for (const auto &[m1, c1] : ac.terms()) {
                for (const auto &[m2, c2] : bd.terms()) {
                    out.add(m1, m2, c * c1 * c2);
                }
            }
        }
    }
    return out;
}

UElement Enveloping::contract(const TensorElement &t) const
{
    UElement out;
    for (const auto &[k, c] : t.terms()) {
        out.add_scaled(multiply(UElement(k.first, 1), UElement(k.second, 1)), c);
    }
    return out;
}

std::vector<Monomial> graded_monomials(std::span<const Parity> parities, unsigned d)
{
    const std::size_t n = parities.size();
    std::vector<Monomial> out;
    std::vector<Monomial::Exponent> exps(n, 0);
    auto rec = [&](auto &&self, std::size_t i, unsigned remaining) -> void {
        if (i == n) {
            if (remaining == 0) {
                out.emplace_back(exps);
            }
            return;
        }
        const unsigned cap = is_odd(parities[i]) ? std::min(remaining, 1u) : remaining;
        for (unsigned e = 0; e <= cap; ++e) {
            exps[i] = static_cast<Monomial::Exponent>(e);
            self(self, i + 1, remaining - e);
        }
        exps[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> Enveloping::monomials_of_degree(unsigned d) const
{
    std::vector<Parity> parities;
    for (const auto &g : algebra_->generators()) {
        parities.push_back(g.parity);
    }
    return graded_monomials(parities, d);
}

std::vector<Monomial> Enveloping::monomials_up_to(unsigned d) const
{
    std::vector<Monomial> out;
    for (unsigned k = 0; k <= d; ++k) {
        auto part = monomials_of_degree(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string Enveloping::format(const Monomial &m) const
{
    if (m.degree() == 0) {
        return "1";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!first) {
            os << "*";
        }
        os << algebra_->generator(i).name;
        if (m[i] > 1) {
            os << "^" << m[i];
        }
        first = false;
    }
    return os.str();
}

std::string Enveloping::format(const UElement &u) const
{
    if (u.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : u.terms()) {
        const Scalar mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        if (m.degree() == 0) {
            os << to_string(mag);
        } else {
            if (mag != 1) {
                os << to_string(mag) << "*";
            }
            os << format(m);
        }
        first = false;
    }
    return os.str();
}

std::size_t Enveloping::cache_size() const
{
    std::shared_lock lock(cache_mutex_);
    return cache_.size();
}

} // namespace superspherical
