#pragma once

#include "superspherical/enveloping.hpp"

#include <functional>
#include <map>
#include <vector>

namespace superspherical {

// Row echelon basis of a subspace of U(g), one row per leading monomial.
// Rows are kept with leading coefficient 1; reduction only clears leading
// terms, which is enough to decide membership.
class EchelonSpan {
public:
    // Remainder of v after clearing every pivot leading term.
    UElement reduce(UElement v) const;
    bool contains(const UElement &v) const { return reduce(v).is_zero(); }
    // Adds v; returns true when the rank grew.
    bool insert(const UElement &v);

    std::size_t rank() const { return rows_.size(); }
    bool has_pivot(const Monomial &m) const { return rows_.count(m) > 0; }

private:
    std::map<Monomial, UElement> rows_;
};

// Spanning vectors of I = kU(g) + U(g)k up to degree d, generated in order of
// increasing degree of m:
//   x m and m x            for x in k_basis, m a PBW monomial of degree < d,
//   x m - (-1)^{|x||m|} m x for deg m = d.
// The second family is needed because some elements of I of degree d only
// arise from products of degree d + 1 whose top parts cancel (for example
// p = f e' + e' f). `max_m_degree` overrides the bound on deg m in the
// second family; passing d - 1 drops it.
void for_each_ideal_generator(const Enveloping &u, const std::vector<SuperVector> &k_basis, unsigned d,
                              const std::function<void(const UElement &)> &visit);
void for_each_ideal_generator(const Enveloping &u, const std::vector<SuperVector> &k_basis, unsigned d,
                              unsigned max_m_degree, const std::function<void(const UElement &)> &visit);

EchelonSpan ideal_span(const Enveloping &u, const std::vector<SuperVector> &k_basis, unsigned d);
EchelonSpan ideal_span(const Enveloping &u, const std::vector<SuperVector> &k_basis, unsigned d,
                       unsigned max_m_degree);

// Number of PBW monomials of degree <= d.
std::size_t pbw_dimension(const Enveloping &u, unsigned d);

} // namespace superspherical
