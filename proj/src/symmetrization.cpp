#include "superspherical/symmetrization.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace superspherical {

SymmetricAlgebra::SymmetricAlgebra(std::shared_ptr<const LieSuperalgebra> g, std::vector<SuperVector> basis,
                                   std::string tag)
    : algebra_(std::move(g)), basis_(std::move(basis)), tag_(std::move(tag))
{
    std::vector<ScalarVector> dense;
    for (const auto &v : basis_) {
        const auto p = algebra_->parity_of(v);
        if (!p || v.is_zero()) {
            throw std::invalid_argument("symmetric algebra basis vector is not homogeneous");
        }
        parities_.push_back(*p);
        dense.push_back(v.to_dense(algebra_->dim()));
    }
    if (!dense.empty() && rank(Matrix::from_rows(dense)) != dense.size()) {
        throw std::invalid_argument("symmetric algebra basis is linearly dependent");
    }
}

Parity SymmetricAlgebra::parity(const Monomial &m) const
{
    Parity p = Parity::even;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] % 2 == 1) {
            p += parities_[i];
        }
    }
    return p;
}

SymElement SymmetricAlgebra::generator(std::size_t i) const
{
    Monomial m(dim());
    m.increment(i);
    return SymElement(m, 1);
}

SymElement SymmetricAlgebra::from_vector(const SuperVector &v) const
{
    const auto coords = coordinates_in(basis_, v, algebra_->dim());
    if (!coords) {
        throw std::invalid_argument("vector is outside the span of the " + tag_ + " basis");
    }
    SymElement out;
    for (std::size_t i = 0; i < coords->size(); ++i) {
        out.add_scaled(generator(i), (*coords)[i]);
    }
    return out;
}

SymElement SymmetricAlgebra::multiply(const SymElement &a, const SymElement &b) const
{
    SymElement out;
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            bool zero = false;
            unsigned crossings = 0;
            unsigned odd_in_a_after = 0;
            // Walk from the top index down: each odd factor of b at index i
            // passes the odd factors of a with index > i.
            for (std::size_t i = dim(); i-- > 0;) {
                if (!is_odd(parities_[i])) {
                    continue;
                }
                if (ma[i] > 0 && mb[i] > 0) {
                    zero = true;
                    break;
                }
                crossings += mb[i] * odd_in_a_after;
                odd_in_a_after += ma[i];
            }
            if (zero) {
                continue;
            }
            std::vector<Monomial::Exponent> exps(dim());
            for (std::size_t i = 0; i < dim(); ++i) {
                exps[i] = static_cast<Monomial::Exponent>(ma[i] + mb[i]);
            }
            out.add(Monomial(std::move(exps)), crossings % 2 == 0 ? ca * cb : Scalar(-ca * cb));
        }
    }
    return out;
}

std::vector<Monomial> SymmetricAlgebra::monomials_of_degree(unsigned d) const
{
    return graded_monomials(parities_, d);
}

std::vector<Monomial> SymmetricAlgebra::monomials_up_to(unsigned d) const
{
    std::vector<Monomial> out;
    for (unsigned k = 0; k <= d; ++k) {
        auto part = monomials_of_degree(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string SymmetricAlgebra::format(const SymElement &s) const
{
    if (s.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : s.terms()) {
        const Scalar mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        if (m.degree() == 0 || mag != 1) {
            os << to_string(mag);
        }
        bool first_factor = m.degree() == 0 || mag != 1 ? false : true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            os << (first_factor ? "" : "*") << "[" << algebra_->format(basis_[i]) << "]";
            if (m[i] > 1) {
                os << "^" << m[i];
            }
            first_factor = false;
        }
        first = false;
    }
    return os.str();
}

UElement supersymmetrize(const Enveloping &u, const SymmetricAlgebra &s, const SymElement &y)
{
    std::vector<UElement> factors;
    for (const auto &v : s.basis()) {
        factors.push_back(u.from_vector(v));
    }
    UElement out;
    for (const auto &[m, c] : y.terms()) {
        std::vector<unsigned> remaining(m.exponents().begin(), m.exponents().end());
        Scalar weight = c / Scalar(factorial(m.degree()));
        for (std::size_t i = 0; i < m.size(); ++i) {
            weight *= Scalar(factorial(m[i]));
        }
        // Distinct arrangements of the multiset; the sign counts odd pairs
        // that end up out of order.
        auto rec = [&](auto &&self, const UElement &prefix, unsigned placed, bool negative) -> void {
            if (placed == m.degree()) {
                out.add_scaled(prefix, negative ? Scalar(-weight) : weight);
                return;
            }
            for (std::size_t j = 0; j < remaining.size(); ++j) {
                if (remaining[j] == 0) {
                    continue;
                }
                bool flip = false;
                if (is_odd(s.parity(j))) {
                    for (std::size_t i = 0; i < j; ++i) {
                        if (remaining[i] > 0 && is_odd(s.parity(i))) {
                            flip = !flip;
                        }
                    }
                }
                --remaining[j];
                self(self, u.multiply(prefix, factors[j]), placed + 1, negative != flip);
                ++remaining[j];
            }
        };
        rec(rec, u.one(), 0, false);
    }
    return out;
}

SymElement ad_action(const SymmetricAlgebra &s, const SuperVector &x, const SymElement &y)
{
    const LieSuperalgebra &g = s.algebra();
    const auto px = g.parity_of(x);
    if (!px) {
        throw std::invalid_argument("ad_action: x is not homogeneous");
    }
    std::vector<SymElement> images;
    for (const auto &b : s.basis()) {
        images.push_back(s.from_vector(g.bracket(x, b)));
    }
    SymElement out;
    for (const auto &[m, c] : y.terms()) {
        const std::vector<std::size_t> word = m.word();
        for (std::size_t i = 0; i < word.size(); ++i) {
            SymElement term = s.one();
            Parity passed = Parity::even;
            for (std::size_t t = 0; t < i; ++t) {
                term = s.multiply(term, s.generator(word[t]));
                passed += s.parity(word[t]);
            }
            term = s.multiply(term, images[word[i]]);
            for (std::size_t t = i + 1; t < word.size(); ++t) {
                term = s.multiply(term, s.generator(word[t]));
            }
            out.add_scaled(term, c * sign_of_swap(*px, passed));
        }
    }
    return out;
}

namespace {

std::string generator_label(const LieSuperalgebra &g, const SuperVector &v, const std::string &fallback)
{
    if (v.terms().size() == 1 && v.terms().begin()->second == 1) {
        return g.generator(v.terms().begin()->first).name;
    }
    return fallback;
}

} // namespace

LeftIdealReducer::LeftIdealReducer(const SymmetricPair &pair, const Enveloping &u)
    : u_(u), sp_(pair.algebra, pair.p_basis, "S(p)"), p_count_(pair.p_basis.size())
{
    std::vector<SuperVector> basis;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < pair.p_basis.size(); ++i) {
        basis.push_back(pair.p_basis[i]);
        names.push_back(generator_label(*pair.algebra, pair.p_basis[i], "p" + std::to_string(i)));
    }
    for (std::size_t i = 0; i < pair.k_basis.size(); ++i) {
        basis.push_back(pair.k_basis[i]);
        names.push_back(generator_label(*pair.algebra, pair.k_basis[i], "k" + std::to_string(i)));
    }
    Rebased r = rebase(*pair.algebra, basis, names);
    rebased_ = std::make_shared<const LieSuperalgebra>(std::move(r.algebra));
    up_ = std::make_shared<const Enveloping>(rebased_);
    for (std::size_t i = 0; i < pair.algebra->dim(); ++i) {
        image_of_generator_.push_back(SuperVector::from_dense(r.to_new.column(i)));
    }
}

UElement LeftIdealReducer::to_p_first(const UElement &x) const
{
    UElement out;
    for (const auto &[m, c] : x.terms()) {
        std::vector<Factor> word;
        for (std::size_t g : m.word()) {
            word.push_back(Factor{image_of_generator_[g], 1});
        }
        out.add_scaled(up_->normal_form(word), c);
    }
    return out;
}

UElement LeftIdealReducer::strip_left_ideal(const UElement &x) const
{
    UElement out;
    for (const auto owned = to_p_first(x); const auto &[m, c] : owned.terms()) {
        bool in_ideal = false;
        for (std::size_t i = p_count_; i < m.size(); ++i) {
            in_ideal = in_ideal || m[i] > 0;
        }
        if (in_ideal) {
            continue;
        }
        std::vector<Monomial::Exponent> exps(m.exponents().begin(), m.exponents().begin() + p_count_);
        out.add(Monomial(std::move(exps)), c);
    }
    return out;
}

SymElement LeftIdealReducer::reduce(const UElement &x) const
{
    UElement w = strip_left_ideal(x);
    SymElement out;
    while (!w.is_zero()) {
        const Monomial lead = w.leading_monomial();
        const Scalar c = w.terms().rbegin()->second;
        const SymElement y(lead, 1);
        const UElement image = strip_left_ideal(supersymmetrize(u_, sp_, y));
        if (image.is_zero() || image.leading_monomial() != lead || image.terms().rbegin()->second != 1) {
            throw std::logic_error("symmetrization is not unitriangular at " + sp_.format(y));
        }
        out.add(lead, c);
        w.add_scaled(image, -c);
    }
    return out;
}

SymElement reduce_mod_IL(const SymmetricPair &pair, const Enveloping &u, const UElement &x)
{
    return LeftIdealReducer(pair, u).reduce(x);
}

CheckReport check_symmetrization_inverse(const SymmetricPair &pair, const Enveloping &u, unsigned d)
{
    CheckReport report;
    report.suite = "symmetrization_inverse";
    report.degree = d;
    const LeftIdealReducer reducer(pair, u);
    const SymmetricAlgebra &sp = reducer.sp();
    const auto monomials = sp.monomials_up_to(d);

    CheckItem inverse{"reduce_after_symmetrize_is_identity", true, {}, {}};
    CheckItem tri{"unitriangular", true, {}, {}};
    std::map<Monomial, std::size_t> column;
    for (const auto &m : monomials) {
        column.emplace(m, column.size());
    }
    Matrix a(monomials.size(), monomials.size());
    for (std::size_t row = 0; row < monomials.size(); ++row) {
        const Monomial &m = monomials[row];
        const SymElement y(m, 1);
        const UElement sy = supersymmetrize(u, sp, y);
        if (inverse.pass && reducer.reduce(sy) != y) {
            inverse.pass = false;
            inverse.witness = sp.format(y);
        }
        const UElement image = reducer.strip_left_ideal(sy);
        for (const auto &[mm, c] : image.terms()) {
            a(row, column.at(mm)) = c;
            const bool ok = mm == m ? c == 1 : mm.degree() < m.degree();
            if (!ok && tri.pass) {
                tri.pass = false;
                tri.witness = sp.format(y);
            }
        }
        if (image.coefficient(m) != 1 && tri.pass) {
            tri.pass = false;
            tri.witness = sp.format(y);
        }
    }
    report.items.push_back(inverse);
    report.items.push_back(tri);
    const std::size_t r = rank(a);
    CheckItem &full = report.add("full_rank", r == monomials.size());
    full.data["rank"] = std::to_string(r);
    full.data["dim"] = std::to_string(monomials.size());
    return report;
}

bool check_symmetrization_in_ideal(const SymmetricPair &pair, const Enveloping &u, unsigned d)
{
    const SymmetricAlgebra sp(pair.algebra, pair.p_basis, "S(p)");
    const EchelonSpan span = ideal_span(u, pair.k_basis, d);
    for (const auto &x : pair.k_basis) {
        for (const auto &m : sp.monomials_up_to(d)) {
            const SymElement y = ad_action(sp, x, SymElement(m, 1));
            if (!span.contains(supersymmetrize(u, sp, y))) {
                return false;
            }
        }
    }
    return true;
}

bool check_ad_intertwining(const SymmetricPair &pair, const Enveloping &u, unsigned d)
{
    const SymmetricAlgebra sp(pair.algebra, pair.p_basis, "S(p)");
    for (const auto &x : pair.k_basis) {
        const UElement ux = u.from_vector(x);
        const Parity px = pair.algebra->parity_of(x).value_or(Parity::even);
        for (const auto &m : sp.monomials_up_to(d)) {
            const SymElement y(m, 1);
            const UElement sy = supersymmetrize(u, sp, y);
            UElement rhs = u.multiply(ux, sy);
            rhs.add_scaled(u.multiply(sy, ux), Scalar(-sign_of_swap(px, sp.parity(m))));
            if (supersymmetrize(u, sp, ad_action(sp, x, y)) != rhs) {
                return false;
            }
        }
    }
    return true;
}

DecompositionRanks spa_decomposition_ranks(const SymmetricPair &pair, unsigned r)
{
    const SymmetricAlgebra sp(pair.algebra, pair.p_basis, "S(p)");
    const SymmetricAlgebra sa(pair.algebra, pair.a_basis, "S(a)");
    std::vector<SymElement> a_in_p;
    for (const auto &a : pair.a_basis) {
        a_in_p.push_back(sp.from_vector(a));
    }

    DecompositionRanks out;
    out.spa_dim = sp.monomials_of_degree(r).size();

    EchelonSpan sa_span;
    EchelonSpan total;
    EchelonSpan closure;
    std::deque<SymElement> frontier;
    for (const auto &m : sa.monomials_of_degree(r)) {
        SymElement y = sp.one();
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (unsigned e = 0; e < m[i]; ++e) {
                y = sp.multiply(y, a_in_p[i]);
            }
        }
        sa_span.insert(y);
        total.insert(y);
        if (closure.insert(y)) {
            frontier.push_back(y);
        }
    }

    EchelonSpan ad_span;
    for (const auto &x : pair.k_basis) {
        for (const auto &m : sp.monomials_of_degree(r)) {
            const SymElement y = ad_action(sp, x, SymElement(m, 1));
            ad_span.insert(y);
            total.insert(y);
        }
    }

    while (!frontier.empty()) {
        const SymElement w = std::move(frontier.front());
        frontier.pop_front();
        for (const auto &x : pair.k_basis) {
            SymElement y = ad_action(sp, x, w);
            if (closure.insert(y)) {
                frontier.push_back(std::move(y));
            }
        }
    }

    out.sa_rank = sa_span.rank();
    out.ad_rank = ad_span.rank();
    out.total_rank = total.rank();
    out.closure_rank = closure.rank();
    return out;
}

bool check_Spa_decomposition(const SymmetricPair &pair, unsigned r) { return spa_decomposition_ranks(pair, r).pass(); }

bool check_radial_spanning(const SymmetricPair &pair, const Enveloping &u, unsigned d)
{
    const SymmetricAlgebra sa(pair.algebra, pair.a_basis, "S(a)");
    EchelonSpan span = ideal_span(u, pair.k_basis, d);
    for (const auto &m : sa.monomials_up_to(d)) {
        span.insert(supersymmetrize(u, sa, SymElement(m, 1)));
    }
    return span.rank() == pbw_dimension(u, d);
}

CheckItem check_ad_power_lemma(const SymmetricPair &pair, const RootDecomposition &roots, unsigned k_max)
{
    CheckItem item{"ad_power_lemma", true, {}, {}};
    const LieSuperalgebra &g = *pair.algebra;
    const SymmetricAlgebra sp(pair.algebra, pair.p_basis, "S(p)");
    std::size_t cases = 0;
    for (const auto &[alpha, vectors] : roots.roots) {
        for (const auto &x : vectors) {
            const SuperVector tx = pair.theta.apply(x);
            const SuperVector plus = x + tx;
            const SymElement minus = sp.from_vector(x - tx);
            for (const auto &a : pair.a_basis) {
                const auto coords = coordinates_in(roots.h_basis, a, g.dim());
                if (!coords) {
                    throw std::invalid_argument("a is not contained in h");
                }
                Scalar alpha_a = 0;
                for (std::size_t i = 0; i < coords->size(); ++i) {
                    alpha_a += (*coords)[i] * alpha[i];
                }
                const SymElement sa = sp.from_vector(a);
                SymElement power = sp.one(); // a^{k-1}
                for (unsigned k = 1; k <= k_max; ++k) {
                    const SymElement next = sp.multiply(power, sa);
                    const SymElement lhs = ad_action(sp, plus, next);
                    SymElement rhs = sp.multiply(minus, power);
                    rhs *= -Scalar(k) * alpha_a;
                    ++cases;
                    if (lhs != rhs && item.pass) {
                        item.pass = false;
                        item.witness = "x = " + g.format(x) + ", a = " + g.format(a) + ", k = " + std::to_string(k);
                    }
                    power = next;
                }
            }
        }
    }
    item.data["cases"] = std::to_string(cases);
    return item;
}

} // namespace superspherical
