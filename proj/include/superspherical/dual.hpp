#pragma once

#include "superspherical/enveloping.hpp"
#include "superspherical/symmetric_pair.hpp"

#include <map>
#include <vector>

namespace superspherical {

// Linear functional on U(g)_{<= degree_bound}, given on the PBW basis.
// Monomials missing from `values` evaluate to 0.
struct DualFunctional {
    unsigned degree_bound = 0;
    std::map<Monomial, Scalar> values;
    Parity parity = Parity::even;

    Scalar operator()(const Monomial &m) const;
    // Throws std::invalid_argument when u has a term above the bound.
    Scalar operator()(const UElement &u) const;
};

DualFunctional counit_functional(const Enveloping &u, unsigned degree_bound);

// (lam mu)(x) = sum (-1)^{|x_1||mu|} lam(x_1) mu(x_2) over Delta(x) = sum x_1 (x) x_2.
// Throws std::invalid_argument when deg x exceeds either bound.
Scalar dual_product(const Enveloping &u, const DualFunctional &lam, const DualFunctional &mu, const Monomial &x);

// The product functional on all PBW monomials up to the smaller bound.
DualFunctional dual_product(const Enveloping &u, const DualFunctional &lam, const DualFunctional &mu);

// True iff lam vanishes on every given vector of I.
bool is_bi_invariant(const DualFunctional &lam, const std::vector<UElement> &ideal_vectors);

} // namespace superspherical
