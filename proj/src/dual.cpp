#include "superspherical/dual.hpp"

#include <stdexcept>

namespace superspherical {

Scalar DualFunctional::operator()(const Monomial &m) const
{
    if (m.degree() > degree_bound) {
        throw std::invalid_argument("functional evaluated above its degree bound");
    }
    const auto it = values.find(m);
    return it == values.end() ? Scalar(0) : it->second;
}

Scalar DualFunctional::operator()(const UElement &u) const
{
    Scalar acc = 0;
    for (const auto &[m, c] : u.terms()) {
        acc += c * (*this)(m);
    }
    return acc;
}

DualFunctional counit_functional(const Enveloping &u, unsigned degree_bound)
{
    DualFunctional eps;
    eps.degree_bound = degree_bound;
    eps.values[u.unit_monomial()] = 1;
    return eps;
}

Scalar dual_product(const Enveloping &u, const DualFunctional &lam, const DualFunctional &mu, const Monomial &x)
{
    if (x.degree() > lam.degree_bound || x.degree() > mu.degree_bound) {
        throw std::invalid_argument("dual_product: degree bound exceeded");
    }
    Scalar acc = 0;
    for (const auto owned = u.coproduct(x); const auto &[k, c] : owned.terms()) {
        const Scalar l = lam(k.first);
        if (l == 0) {
            continue;
        }
        acc += c * sign_of_swap(u.parity(k.first), mu.parity) * l * mu(k.second);
    }
    return acc;
}

DualFunctional dual_product(const Enveloping &u, const DualFunctional &lam, const DualFunctional &mu)
{
    DualFunctional out;
    out.degree_bound = std::min(lam.degree_bound, mu.degree_bound);
    out.parity = lam.parity + mu.parity;
    for (const auto &m : u.monomials_up_to(out.degree_bound)) {
        const Scalar v = dual_product(u, lam, mu, m);
        if (v != 0) {
            out.values.emplace(m, v);
        }
    }
    return out;
}

bool is_bi_invariant(const DualFunctional &lam, const std::vector<UElement> &ideal_vectors)
{
    for (const auto &v : ideal_vectors) {
        if (lam(v) != 0) {
            return false;
        }
    }
    return true;
}

} // namespace superspherical
