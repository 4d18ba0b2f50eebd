#include "superspherical/hopf.hpp"

#include <array>
#include <map>

namespace superspherical {

namespace {

using Triple = std::map<std::array<Monomial, 3>, Scalar>;

void add_term(Triple &t, std::array<Monomial, 3> key, const Scalar &c)
{
    auto [it, inserted] = t.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            t.erase(it);
        }
    }
}

} // namespace

CheckItem check_coassociativity(const Enveloping &u, unsigned d)
{
    CheckItem item{"coassociativity", true, {}, {}};
    std::size_t count = 0;
    for (const auto &m : u.monomials_up_to(d)) {
        const TensorElement delta = u.coproduct(m);
        Triple left;
        Triple right;
        for (const auto &[k, c] : delta.terms()) {
            for (const auto owned = u.coproduct(k.first); const auto &[k1, c1] : owned.terms()) {
                add_term(left, {k1.first, k1.second, k.second}, c * c1);
            }
            for (const auto owned = u.coproduct(k.second); const auto &[k2, c2] : owned.terms()) {
                add_term(right, {k.first, k2.first, k2.second}, c * c2);
            }
        }
        ++count;
        if (left != right) {
            item.pass = false;
            item.witness = u.format(m);
            break;
        }
    }
    item.data["cases"] = std::to_string(count);
    return item;
}

CheckItem check_counit_laws(const Enveloping &u, unsigned d)
{
    CheckItem item{"counit", true, {}, {}};
    std::size_t count = 0;
    const Monomial one = u.unit_monomial();
    for (const auto &m : u.monomials_up_to(d)) {
        UElement left;
        UElement right;
        for (const auto owned = u.coproduct(m); const auto &[k, c] : owned.terms()) {
            if (k.first == one) {
                left.add(k.second, c);
            }
            if (k.second == one) {
                right.add(k.first, c);
            }
        }
        const UElement expected(m, 1);
        ++count;
        if (left != expected || right != expected) {
            item.pass = false;
            item.witness = u.format(m);
            break;
        }
    }
    item.data["cases"] = std::to_string(count);
    return item;
}

CheckItem check_antipode_law(const Enveloping &u, unsigned d)
{
    CheckItem item{"antipode", true, {}, {}};
    std::size_t count = 0;
    for (const auto &m : u.monomials_up_to(d)) {
        UElement left;
        UElement right;
        for (const auto owned = u.coproduct(m); const auto &[k, c] : owned.terms()) {
            left.add_scaled(u.multiply(u.antipode(k.first), UElement(k.second, 1)), c);
            right.add_scaled(u.multiply(UElement(k.first, 1), u.antipode(k.second)), c);
        }
        const UElement expected = m.degree() == 0 ? u.one() : UElement();
        ++count;
        if (left != expected || right != expected) {
            item.pass = false;
            item.witness = u.format(m);
            break;
        }
    }
    item.data["cases"] = std::to_string(count);
    return item;
}

CheckItem check_coproduct_morphism(const Enveloping &u, unsigned d)
{
    CheckItem item{"coproduct_morphism", true, {}, {}};
    std::size_t count = 0;
    const auto monomials = u.monomials_up_to(d);
    for (const auto &a : monomials) {
        const TensorElement da = u.coproduct(a);
        for (const auto &b : monomials) {
            if (a.degree() + b.degree() > d) {
                break;
            }
            const TensorElement lhs = u.coproduct(u.multiply(UElement(a, 1), UElement(b, 1)));
            const TensorElement rhs = u.tensor_multiply(da, u.coproduct(b));
            ++count;
            if (lhs != rhs) {
                item.pass = false;
                item.witness = u.format(a) + " * " + u.format(b);
                item.data["cases"] = std::to_string(count);
                return item;
            }
        }
    }
    item.data["cases"] = std::to_string(count);
    return item;
}

CheckReport hopf_suite(const Enveloping &u, unsigned d)
{
    CheckReport report;
    report.suite = "hopf";
    report.degree = d;
    report.items.push_back(check_coassociativity(u, d));
    report.items.push_back(check_counit_laws(u, d));
    report.items.push_back(check_antipode_law(u, d));
    report.items.push_back(check_coproduct_morphism(u, d));
    return report;
}

} // namespace superspherical
