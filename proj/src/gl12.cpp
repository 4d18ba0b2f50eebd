#include "superspherical/gl12.hpp"

#include "superspherical/sequences.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace superspherical {

namespace {

const SuperShape shape12{1, 2};

SuperVector unit(std::size_t i, std::size_t j) { return SuperVector::basis(i * 3 + j); }

SuperVector basis_vector(Gl12::Gen g) { return SuperVector::basis(g); }

} // namespace

Matrix Gl12::supermatrix(const SuperVector &v) const
{
    return to_supermatrix(SuperVector::from_dense(to_matrix_units.apply(v.to_dense(dim))), shape12);
}

Gl12 build_pair(SupertransposeConvention convention)
{
    Gl12 g;
    auto units = std::make_shared<const LieSuperalgebra>(gl_superalgebra(1, 2));
    g.matrix_units = units;
    g.in_matrix_units = {
        unit(0, 0) + unit(1, 1) + unit(2, 2),         // z
        unit(1, 1) - unit(2, 2),                      // k
        unit(1, 2),                                   // k1
        unit(2, 1),                                   // k2
        unit(0, 1) + unit(2, 0),                      // e'
        unit(0, 2) - unit(1, 0),                      // f'
        Scalar(2) * unit(0, 0) + unit(1, 1) + unit(2, 2), // p
        unit(0, 1) - unit(2, 0),                      // e
        unit(0, 2) + unit(1, 0),                      // f
    };
    const std::vector<std::string> names{"z", "k", "k1", "k2", "e'", "f'", "p", "e", "f"};
    Rebased r = rebase(*units, g.in_matrix_units, names);
    g.to_matrix_units = r.to_old;
    g.algebra = std::make_shared<const LieSuperalgebra>(std::move(r.algebra));

    const Matrix conj = Matrix::from_rows({{1, 0, 0}, {0, 0, 1}, {0, -1, 0}});
    const Involution on_units = supertranspose_involution(shape12, conj, convention);
    Matrix theta = r.to_new * on_units.matrix() * r.to_old;
    for (std::size_t i = 0; i < Gl12::dim; ++i) {
        const bool in_k = i >= Gl12::k && i <= Gl12::fp;
        ScalarVector expected(Gl12::dim);
        expected[i] = in_k ? 1 : -1;
        if (theta.column(i) != expected) {
            throw PairError("basis vector " + names[i] + " is not in " + (in_k ? "k" : "p"));
        }
    }
    g.pair = split_pair(g.algebra, Involution(std::move(theta)), {basis_vector(Gl12::z), basis_vector(Gl12::p)});
    g.u = std::make_shared<const Enveloping>(g.algebra);
    return g;
}

const Gl12 &gl12()
{
    static const Gl12 instance = build_pair();
    return instance;
}

std::pair<SuperVector, SuperVector> v_vectors(const Scalar &a, const Scalar &b)
{
    SuperVector vk = a * basis_vector(Gl12::ep) + b * basis_vector(Gl12::fp);
    SuperVector vp = a * basis_vector(Gl12::e) + b * basis_vector(Gl12::f);
    return {vk, vp};
}

CheckReport verify_table(const Gl12 &g)
{
    CheckReport report;
    report.suite = "table";
    const LieSuperalgebra &alg = *g.algebra;
    auto expect = [&](const std::string &name, const SuperVector &x, const SuperVector &y, const SuperVector &want) {
        const SuperVector from_table = alg.bracket(x, y);
        const Matrix from_matrices = supercommutator(g.supermatrix(x), g.supermatrix(y), shape12);
        const bool ok = from_table == want && from_matrices == g.supermatrix(want);
        report.add(name, ok, ok ? "" : "table gives " + alg.format(from_table));
    };
    const SuperVector zero;
    const auto z = basis_vector(Gl12::z), k = basis_vector(Gl12::k), k1 = basis_vector(Gl12::k1),
               k2 = basis_vector(Gl12::k2), ep = basis_vector(Gl12::ep), fp = basis_vector(Gl12::fp),
               p = basis_vector(Gl12::p), e = basis_vector(Gl12::e), f = basis_vector(Gl12::f);
    expect("[e,e] = -2k2", e, e, Scalar(-2) * k2);
    expect("[f,f] = 2k1", f, f, Scalar(2) * k1);
    expect("[e,p] = -e'", e, p, -ep);
    expect("[e',p] = -e", ep, p, -e);
    expect("[e',e'] = 2k2", ep, ep, Scalar(2) * k2);
    expect("[f',f'] = -2k1", fp, fp, Scalar(-2) * k1);
    expect("[p,k1] = 0", p, k1, zero);
    expect("[p,k2] = 0", p, k2, zero);
    expect("[p,k] = 0", p, k, zero);
    expect("[e,k1] = f", e, k1, f);
    for (std::size_t i = 0; i < Gl12::dim; ++i) {
        expect("[z," + alg.generator(i).name + "] = 0", z, SuperVector::basis(i), zero);
    }
    const std::vector<std::pair<Scalar, Scalar>> vs{{1, 0}, {0, 1}, {2, -3}, {Scalar(1, 2), 5}};
    for (const auto &[a, b] : vs) {
        const auto [vk, vp] = v_vectors(a, b);
        const std::string tag = "(" + to_string(a) + "," + to_string(b) + ")";
        expect("[e,v_k] = -bp " + tag, e, vk, -b * p);
        expect("[f,v_k] = ap " + tag, f, vk, a * p);
        expect("[v_p,p] = -v_k " + tag, vp, p, -vk);
        expect("[v_k,p] = -v_p " + tag, vk, p, -vp);
        const Matrix shown_p = Matrix::from_rows({{0, a, b}, {b, 0, 0}, {-a, 0, 0}});
        const Matrix shown_k = Matrix::from_rows({{0, a, b}, {-b, 0, 0}, {a, 0, 0}});
        report.add("v_p matrix " + tag, g.supermatrix(vp) == shown_p);
        report.add("v_k matrix " + tag, g.supermatrix(vk) == shown_k);
    }
    return report;
}

std::pair<UniPoly, UniPoly> alpha_beta_recursive(unsigned n)
{
    // alpha[i] = alpha_i, beta[i] = beta_{i-1}
    std::vector<UniPoly> alpha{UniPoly::constant(1), UniPoly::x()};
    std::vector<UniPoly> beta{UniPoly(), UniPoly::constant(1)};
    for (unsigned m = 2; m <= n; ++m) {
        const UniPoly &prev = alpha[m - 1];
        UniPoly a = UniPoly::x() * prev;
        UniPoly b = UniPoly::x() * beta[m - 1];
        for (unsigned i = 0; i <= m - 1; ++i) {
            const Scalar ai = prev.coefficient(i);
            if (i >= 1) {
                a -= ai * beta[i];
            }
            b += ai * alpha[i];
        }
        alpha.push_back(std::move(a));
        beta.push_back(std::move(b));
    }
    return {alpha[n], beta[n]};
}

UniPoly alpha_closed(unsigned n)
{
    UniPoly out;
    for (unsigned k = 0; 2 * k <= n; ++k) {
        out += UniPoly::monomial(Scalar(euler_number(2 * k) * binomial(n, 2 * k)), n - 2 * k);
    }
    return out;
}

UniPoly beta_closed(unsigned n)
{
    UniPoly out;
    for (unsigned k = 0; 2 * k + 1 <= n; ++k) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, 2 * k + 2);
        const Scalar c = Scalar(p * (p - 1)) * bernoulli(2 * k + 2) / Scalar(Integer(2 * k + 2));
        out += UniPoly::monomial(c * Scalar(binomial(n, n - 1 - 2 * k)), n - 1 - 2 * k);
    }
    return out;
}

UniPoly beta_from_alpha(unsigned n)
{
    UniPoly out;
    for (unsigned i = 1; i <= n; i += 2) {
        out += Scalar(binomial(n, i)) * alpha_beta_recursive(n - i).first;
    }
    return out;
}

UElement poly_in(const Gl12 &g, const UniPoly &poly, Gl12::Gen x)
{
    UElement out;
    Monomial m(Gl12::dim);
    for (std::size_t j = 0; j < poly.coefficients().size(); ++j) {
        out.add(m, poly.coefficient(j));
        m.increment(x);
    }
    (void)g;
    return out;
}

std::pair<UniPoly, UniPoly> alpha_beta_from_pbw(const Gl12 &g, unsigned n)
{
    std::optional<std::pair<UniPoly, UniPoly>> found;
    for (const auto &[kgen, pgen] : {std::pair{Gl12::ep, Gl12::e}, std::pair{Gl12::fp, Gl12::f}}) {
        const UElement lhs = g.u->multiply(g.u->power(g.gen(Gl12::p), n), g.gen(kgen));
        std::vector<Scalar> a;
        std::vector<Scalar> b;
        for (const auto &[m, c] : lhs.terms()) {
            std::size_t others = m.degree() - m[Gl12::p];
            const std::size_t j = m[Gl12::p];
            if (others == 1 && m[kgen] == 1) {
                a.resize(std::max(a.size(), j + 1));
                a[j] = c;
            } else if (others == 1 && m[pgen] == 1) {
                b.resize(std::max(b.size(), j + 1));
                b[j] = c;
            } else {
                throw std::logic_error("p^n v_k has an unexpected term " + g.u->format(m));
            }
        }
        std::pair<UniPoly, UniPoly> ab{UniPoly(std::move(a)), UniPoly(std::move(b))};
        if (found && *found != ab) {
            throw std::logic_error("alpha/beta depend on the choice of v");
        }
        found = std::move(ab);
    }
    return *found;
}

namespace {

struct Handles {
    const Enveloping &u;
    UElement p_n, p_n1, vk, vp, alpha, beta;
    UElement z, k, k1, k2, ep, fp, p, e, f;

    Handles(const Gl12 &g, unsigned n, const Scalar &a, const Scalar &b) : u(*g.u)
    {
        const auto [svk, svp] = v_vectors(a, b);
        vk = u.from_vector(svk);
        vp = u.from_vector(svp);
        z = g.gen(Gl12::z);
        k = g.gen(Gl12::k);
        k1 = g.gen(Gl12::k1);
        k2 = g.gen(Gl12::k2);
        ep = g.gen(Gl12::ep);
        fp = g.gen(Gl12::fp);
        p = g.gen(Gl12::p);
        e = g.gen(Gl12::e);
        f = g.gen(Gl12::f);
        p_n = u.power(p, n);
        p_n1 = u.power(p, n + 1);
        const auto ab = alpha_beta_recursive(n);
        alpha = poly_in(g, ab.first);
        beta = poly_in(g, ab.second);
    }

    UElement mul(std::initializer_list<UElement> fs) const { return u.multiply(fs); }
};

} // namespace

std::vector<LemmaIdentity> first_relations(const Gl12 &g, unsigned n, const Scalar &alpha, const Scalar &beta,
                                           const Scalar &gamma)
{
    const Handles h(g, n, 1, 0);
    const UElement k0 = alpha * h.k + beta * h.k1 + gamma * h.k2;
    const UElement &P = h.p_n;
    std::vector<LemmaIdentity> out;
    out.push_back({"first (i)", h.mul({P, k0}), h.mul({k0, P})});
    out.push_back({"first (ii)", h.mul({P, h.e, k0}), h.mul({k0, P, h.e}) + h.mul({P, alpha * h.e + beta * h.f})});
    out.push_back({"first (iii)", h.mul({P, h.f, k0}), h.mul({k0, P, h.f}) + h.mul({P, gamma * h.e - alpha * h.f})});
    out.push_back({"first (iv)", h.mul({P, h.e, h.f, k0}),
                   h.mul({k0, P, h.e, h.f}) + beta * h.mul({h.k1, P}) - gamma * h.mul({h.k2, P})});
    return out;
}

std::vector<LemmaIdentity> second_relations(const Gl12 &g, unsigned n, const Scalar &a, const Scalar &b)
{
    const Handles h(g, n, a, b);
    const UElement &P = h.p_n;
    const UElement &A = h.alpha;
    const UElement &B = h.beta;
    std::vector<LemmaIdentity> out;
    out.push_back({"second (i)", h.mul({P, h.vk}), h.mul({h.vk, A}) + h.mul({B, h.vp})});
    out.push_back({"second (ii)", h.mul({P, h.e, h.vk}),
                   -h.mul({h.vk, A, h.e}) + a * h.mul({h.k2, B}) - b * h.mul({h.k, B}) + b * h.mul({B, h.e, h.f}) -
                       b * h.p_n1});
    out.push_back({"second (iii)", h.mul({P, h.f, h.vk}),
                   -h.mul({h.vk, A, h.f}) - a * h.mul({B, h.e, h.f}) - b * h.mul({h.k1, B}) + a * h.p_n1});
    out.push_back({"second (iv)", h.mul({P, h.e, h.f, h.vk}),
                   h.mul({h.vk, A, h.e, h.f}) - a * h.mul({h.k2, B, h.f}) + b * h.mul({h.k, B, h.f}) -
                       b * h.mul({h.k1, B, h.e}) - b * h.mul({B, h.f}) + h.mul({h.p_n1, h.vp}) -
                       a * h.mul({h.ep, A}) - a * h.mul({B, h.e})});
    return out;
}

LemmaIdentity second_relation_iv_variant(const Gl12 &g, unsigned n, const Scalar &a, const Scalar &b)
{
    const Handles h(g, n, a, b);
    const UElement &A = h.alpha;
    const UElement &B = h.beta;
    const UElement d = h.mul({h.vk, A, h.e, h.f}) - a * h.mul({h.k2, B}) + b * h.mul({h.k, B, h.f});
    return {"second (iv) variant", h.mul({h.p_n, h.e, h.f, h.vk}),
            d - b * h.mul({h.k1, B, h.e}) - b * h.mul({B, h.f}) + h.mul({h.p_n1, h.vp}) - a * h.mul({h.ep, A}) -
                h.mul({B, h.e})};
}

LemmaIdentity mirror_relation(const Gl12 &g, unsigned n, const Scalar &a, const Scalar &b)
{
    const Handles h(g, n, a, b);
    return {"mirror", h.mul({h.vp, h.p_n}), h.mul({h.alpha, h.vp}) - h.mul({h.vk, h.beta})};
}

bool verify_binomial_splitting(const Gl12 &g, unsigned n, const Scalar &a, const Scalar &b)
{
    const Handles h(g, n, a, b);
    UniPoly even;
    UniPoly odd;
    for (unsigned i = 0; i <= n; ++i) {
        (i % 2 == 0 ? even : odd) += UniPoly::monomial(Scalar(binomial(n, i)), n - i);
    }
    const UElement lhs = h.mul({h.p_n, h.vk});
    const UElement rhs = h.mul({h.vk, poly_in(g, even)}) + h.mul({h.vp, poly_in(g, odd)});
    return lhs == rhs;
}

CheckReport verify_lemma_suites(const Gl12 &g, unsigned n_max, unsigned draws, std::uint64_t seed)
{
    CheckReport report;
    report.suite = "lemmas";
    report.degree = n_max;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    auto draw = [&]() {
        Scalar s(num(rng), den(rng));
        s.canonicalize();
        return s;
    };
    std::map<std::string, CheckItem> items;
    auto record = [&](const LemmaIdentity &id, const std::string &params) {
        auto [it, inserted] = items.try_emplace(id.name, CheckItem{id.name, true, {}, {}});
        CheckItem &item = it->second;
        item.data["cases"] = std::to_string(std::stoul(item.data.count("cases") ? item.data["cases"] : "0") + 1);
        if (id.lhs != id.rhs && item.pass) {
            item.pass = false;
            item.witness = params;
        }
    };
    for (unsigned t = 0; t < draws; ++t) {
        const Scalar al = draw(), be = draw(), ga = draw(), a = draw(), b = draw();
        for (unsigned n = 0; n <= n_max; ++n) {
            const std::string k0 = "n=" + std::to_string(n) + " k0=(" + to_string(al) + "," + to_string(be) + "," +
                                   to_string(ga) + ")";
            for (const auto &id : first_relations(g, n, al, be, ga)) {
                record(id, k0);
            }
            const std::string v = "n=" + std::to_string(n) + " v=(" + to_string(a) + "," + to_string(b) + ")";
            for (const auto &id : second_relations(g, n, a, b)) {
                record(id, v);
            }
            record(mirror_relation(g, n, a, b), v);
        }
    }
    for (auto &[name, item] : items) {
        report.items.push_back(std::move(item));
    }
    return report;
}

std::vector<IdealVector> ideal_basis(const Gl12 &g, unsigned d)
{
    std::vector<IdealVector> out;
    auto mono = [](unsigned zm, unsigned pn, unsigned e, unsigned f) {
        Monomial m(Gl12::dim);
        m.set(Gl12::z, static_cast<Monomial::Exponent>(zm));
        m.set(Gl12::p, static_cast<Monomial::Exponent>(pn));
        m.set(Gl12::e, static_cast<Monomial::Exponent>(e));
        m.set(Gl12::f, static_cast<Monomial::Exponent>(f));
        return m;
    };
    for (unsigned total = 1; total <= d; ++total) {
        for (unsigned m = 0; m < total; ++m) {
            const unsigned n = total - 1 - m;
            out.push_back({"i", UElement(mono(m, n, 1, 0), 1)});
            out.push_back({"i", UElement(mono(m, n, 0, 1), 1)});
        }
    }
    for (unsigned total = 1; total <= d; ++total) {
        for (unsigned m = 0; m < total; ++m) {
            const unsigned n = total - 1 - m;
            const UniPoly beta = alpha_beta_recursive(n).second;
            UElement v(mono(m, n + 1, 0, 0), -1);
            for (std::size_t j = 0; j < beta.coefficients().size(); ++j) {
                v.add(mono(m, static_cast<unsigned>(j), 1, 1), beta.coefficient(j));
            }
            out.push_back({"ii", std::move(v)});
        }
    }
    for (const auto &m : g.u->monomials_up_to(d)) {
        if (m[Gl12::k] + m[Gl12::k1] + m[Gl12::k2] + m[Gl12::ep] + m[Gl12::fp] > 0) {
            out.push_back({"iii", UElement(m, 1)});
        }
    }
    return out;
}

std::vector<Monomial> quotient_representatives(const Gl12 &g, unsigned d)
{
    (void)g;
    std::vector<Monomial> out;
    for (unsigned m = 0; m <= d; ++m) {
        Monomial zm(Gl12::dim);
        zm.set(Gl12::z, static_cast<Monomial::Exponent>(m));
        out.push_back(zm);
        for (unsigned k = 0; m + k + 2 <= d; ++k) {
            Monomial r = zm;
            r.set(Gl12::p, static_cast<Monomial::Exponent>(k));
            r.set(Gl12::e, 1);
            r.set(Gl12::f, 1);
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CheckReport verify_ideal_basis(const Gl12 &g, unsigned d)
{
    CheckReport report;
    report.suite = "ideal";
    report.degree = d;
    const auto basis = ideal_basis(g, d);

    const EchelonSpan generated = ideal_span(*g.u, g.pair.k_basis, d);
    CheckItem membership{"membership", true, {}, {}};
    for (const auto &v : basis) {
        if (!generated.contains(v.vector)) {
            membership.pass = false;
            membership.witness = "(" + v.family + ") " + g.u->format(v.vector);
            break;
        }
    }
    membership.data["generated_rank"] = std::to_string(generated.rank());
    report.items.push_back(membership);

    EchelonSpan listed;
    for (const auto &v : basis) {
        listed.insert(v.vector);
    }
    CheckItem independence{"independence", listed.rank() == basis.size(), {}, {}};
    independence.data["rank"] = std::to_string(listed.rank());
    independence.data["count"] = std::to_string(basis.size());
    report.items.push_back(independence);

    const auto reps = quotient_representatives(g, d);
    for (const auto &m : reps) {
        listed.insert(UElement(m, 1));
    }
    const std::size_t dim = pbw_dimension(*g.u, d);
    CheckItem complement{"complement", listed.rank() == dim, {}, {}};
    complement.data["rank"] = std::to_string(listed.rank());
    complement.data["representatives"] = std::to_string(reps.size());
    complement.data["dim"] = std::to_string(dim);
    report.items.push_back(complement);
    return report;
}

UElement quotient_reduce(const Gl12 &g, const UElement &u)
{
    UElement out;
    for (const auto &[m, c] : u.terms()) {
        if (m[Gl12::k] + m[Gl12::k1] + m[Gl12::k2] + m[Gl12::ep] + m[Gl12::fp] > 0) {
            continue;
        }
        if (m[Gl12::e] != m[Gl12::f]) {
            continue;
        }
        if (m[Gl12::e] == 1 || m[Gl12::p] == 0) {
            out.add(m, c);
            continue;
        }
        // z^t p^{n+1} = z^t beta_{n-1}(p) e f mod I
        const unsigned n = m[Gl12::p] - 1u;
        const UniPoly beta = alpha_beta_recursive(n).second;
        for (std::size_t j = 0; j < beta.coefficients().size(); ++j) {
            Monomial r = m;
            r.set(Gl12::p, static_cast<Monomial::Exponent>(j));
            r.set(Gl12::e, 1);
            r.set(Gl12::f, 1);
            out.add(r, c * beta.coefficient(j));
        }
    }
    (void)g;
    return out;
}

CheckReport radial_restriction_check(const Gl12 &g, unsigned d)
{
    CheckReport report;
    report.suite = "radial";
    report.degree = d;
    std::vector<Monomial> sources;
    for (unsigned total = 0; total <= d; ++total) {
        for (unsigned a = 0; a <= total; ++a) {
            Monomial m(Gl12::dim);
            m.set(Gl12::z, static_cast<Monomial::Exponent>(a));
            m.set(Gl12::p, static_cast<Monomial::Exponent>(total - a));
            sources.push_back(m);
        }
    }
    const auto reps = quotient_representatives(g, d);
    std::map<Monomial, std::size_t> row_of;
    for (const auto &r : reps) {
        row_of.emplace(r, row_of.size());
    }
    Matrix images(reps.size(), sources.size());
    EchelonSpan span;
    for (std::size_t j = 0; j < sources.size(); ++j) {
        const UElement q = quotient_reduce(g, UElement(sources[j], 1));
        for (const auto &[m, c] : q.terms()) {
            images(row_of.at(m), j) = c;
        }
        span.insert(q);
    }
    bool all = true;
    std::string missing;
    for (const auto &r : reps) {
        if (!span.contains(UElement(r, 1))) {
            all = false;
            missing = g.u->format(r);
            break;
        }
    }
    CheckItem &surj = report.add("surjective", all, missing);
    surj.data["rank"] = std::to_string(span.rank());
    surj.data["representatives"] = std::to_string(reps.size());
    surj.data["a_coordinates"] = "z = h1 + h1b, p = 2 h1 + h1b";

    const std::size_t kernel_dim = nullspace(images).size();
    bool predicted = kernel_dim == d;
    std::string witness;
    for (unsigned a = 0; a + 1 <= d && predicted; ++a) {
        Monomial m(Gl12::dim);
        m.set(Gl12::z, static_cast<Monomial::Exponent>(a));
        m.set(Gl12::p, 1);
        if (!quotient_reduce(g, UElement(m, 1)).is_zero()) {
            predicted = false;
            witness = g.u->format(m);
        }
    }
    if (!predicted && witness.empty()) {
        witness = "kernel dimension " + std::to_string(kernel_dim);
    }
    CheckItem &kernel = report.add("kernel", predicted, witness);
    kernel.data["dim"] = std::to_string(kernel_dim);
    kernel.data["spanned_by"] = "z^a p, a <= " + std::to_string(d == 0 ? 0 : d - 1);
    return report;
}

DualFunctional random_spherical_functional(const Gl12 &g, unsigned degree_bound, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-6, 6);
    std::map<Monomial, Scalar> on_reps;
    for (const auto &r : quotient_representatives(g, degree_bound)) {
        on_reps[r] = num(rng);
    }
    DualFunctional out;
    out.degree_bound = degree_bound;
    for (const auto &m : g.u->monomials_up_to(degree_bound)) {
        Scalar v = 0;
        for (const auto owned = quotient_reduce(g, UElement(m, 1)); const auto &[r, c] : owned.terms()) {
            v += c * on_reps.at(r);
        }
        if (v != 0) {
            out.values.emplace(m, v);
        }
    }
    return out;
}

CheckItem check_spherical_products(const Gl12 &g, unsigned d, unsigned draws, std::uint64_t seed)
{
    CheckItem item{"spherical_product_closure", true, {}, {}};
    std::vector<UElement> ideal;
    for (auto &v : ideal_basis(g, d)) {
        ideal.push_back(std::move(v.vector));
    }
    for (unsigned t = 0; t < draws; ++t) {
        const DualFunctional lam = random_spherical_functional(g, d, seed + 2 * t);
        const DualFunctional mu = random_spherical_functional(g, d, seed + 2 * t + 1);
        if (!is_bi_invariant(lam, ideal) || !is_bi_invariant(mu, ideal)) {
            item.pass = false;
            item.witness = "factor not I-vanishing, draw " + std::to_string(t);
            break;
        }
        if (!is_bi_invariant(dual_product(*g.u, lam, mu), ideal)) {
            item.pass = false;
            item.witness = "product not I-vanishing, draw " + std::to_string(t);
            break;
        }
    }
    item.data["draws"] = std::to_string(draws);
    return item;
}

RootDecomposition gl12_roots(const Gl12 &g)
{
    return root_decomposition(*g.algebra, {basis_vector(Gl12::z), basis_vector(Gl12::p), basis_vector(Gl12::k)});
}

} // namespace superspherical
