#pragma once

#include "superspherical/enveloping.hpp"
#include "superspherical/report.hpp"

#include <cstdint>

namespace superspherical {

// Each check runs over every PBW monomial of degree <= d and stops at the
// first failure, which becomes the witness.
CheckItem check_coassociativity(const Enveloping &u, unsigned d);
CheckItem check_counit_laws(const Enveloping &u, unsigned d);
CheckItem check_antipode_law(const Enveloping &u, unsigned d);
// Delta(ab) = Delta(a) Delta(b) for all pairs of monomials with
// deg a + deg b <= d.
CheckItem check_coproduct_morphism(const Enveloping &u, unsigned d);

CheckReport hopf_suite(const Enveloping &u, unsigned d);

} // namespace superspherical
