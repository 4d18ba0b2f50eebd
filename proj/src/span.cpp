#include "superspherical/span.hpp"

#include <algorithm>

namespace superspherical {

UElement EchelonSpan::reduce(UElement v) const
{
    while (!v.is_zero()) {
        const auto row = rows_.find(v.leading_monomial());
        if (row == rows_.end()) {
            break;
        }
        v.add_scaled(row->second, -v.terms().rbegin()->second);
    }
    return v;
}

bool EchelonSpan::insert(const UElement &v)
{
    UElement r = reduce(v);
    if (r.is_zero()) {
        return false;
    }
    const Scalar lead = r.terms().rbegin()->second;
    r *= 1 / lead;
    Monomial key = r.leading_monomial();
    rows_.emplace(std::move(key), std::move(r));
    return true;
}

void for_each_ideal_generator(const Enveloping &u, const std::vector<SuperVector> &k_basis, unsigned d,
                              unsigned max_m_degree, const std::function<void(const UElement &)> &visit)
{
    std::vector<UElement> ks;
    std::vector<Parity> kp;
    for (const auto &x : k_basis) {
        ks.push_back(u.from_vector(x));
        kp.push_back(u.algebra().parity_of(x).value_or(Parity::even));
    }
    if (d == 0) {
        return;
    }
    const unsigned top = std::max(d - 1, std::min(max_m_degree, d));
    for (unsigned deg = 0; deg <= top; ++deg) {
        for (const auto &m : u.monomials_of_degree(deg)) {
            const UElement um(m, 1);
            const Parity pm = u.parity(m);
            for (std::size_t i = 0; i < ks.size(); ++i) {
                UElement left = u.multiply(ks[i], um);
                UElement right = u.multiply(um, ks[i]);
                if (deg < d) {
                    visit(left);
                    visit(right);
                } else {
                    left.add_scaled(right, Scalar(-sign_of_swap(kp[i], pm)));
                    visit(left);
                }
            }
        }
    }
}

void for_each_ideal_generator(const Enveloping &u, const std::vector<SuperVector> &k_basis, unsigned d,
                              const std::function<void(const UElement &)> &visit)
{
    for_each_ideal_generator(u, k_basis, d, d, visit);
}

EchelonSpan ideal_span(const Enveloping &u, const std::vector<SuperVector> &k_basis, unsigned d,
                       unsigned max_m_degree)
{
    EchelonSpan span;
    for_each_ideal_generator(u, k_basis, d, max_m_degree, [&](const UElement &v) { span.insert(v); });
    return span;
}

EchelonSpan ideal_span(const Enveloping &u, const std::vector<SuperVector> &k_basis, unsigned d)
{
    return ideal_span(u, k_basis, d, d);
}

std::size_t pbw_dimension(const Enveloping &u, unsigned d)
{
    std::size_t n = 0;
    for (unsigned k = 0; k <= d; ++k) {
        n += u.monomials_of_degree(k).size();
    }
    return n;
}

} // namespace superspherical
