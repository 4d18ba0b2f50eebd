#include "superspherical/symmetric_pair.hpp"
#include "superspherical/unipoly.hpp"

#include <algorithm>
#include <string>

namespace superspherical {

SuperVector Involution::apply(const SuperVector &x) const
{
    return SuperVector::from_dense(action_.apply(x.to_dense(action_.cols())));
}

void validate_involution(const LieSuperalgebra &g, const Involution &theta)
{
    const std::size_t n = g.dim();
    const Matrix &t = theta.matrix();
    if (t.rows() != n || t.cols() != n) {
        throw PairError("involution has the wrong dimension");
    }
    if (t * t != Matrix::identity(n)) {
        throw PairError("theta does not square to the identity");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (t(i, j) != 0 && g.parity(i) != g.parity(j)) {
                throw PairError("theta does not preserve parity");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const SuperVector ti = theta.apply(SuperVector::basis(i));
        for (std::size_t j = 0; j < n; ++j) {
            const SuperVector tj = theta.apply(SuperVector::basis(j));
            if (theta.apply(g.bracket_basis(i, j)) != g.bracket(ti, tj)) {
                throw PairError("theta is not an automorphism: fails on [" + g.generator(i).name + "," +
                                g.generator(j).name + "]");
            }
        }
    }
}

Involution involution_from_matrices(SuperShape shape, const std::function<Matrix(const Matrix &)> &action)
{
    const std::size_t s = shape.size();
    Matrix t(s * s, s * s);
    for (std::size_t j = 0; j < s * s; ++j) {
        const Matrix image = action(to_supermatrix(SuperVector::basis(j), shape));
        for (std::size_t r = 0; r < s; ++r) {
            for (std::size_t c = 0; c < s; ++c) {
                t(r * s + c, j) = image(r, c);
            }
        }
    }
    return Involution(std::move(t));
}

Involution supertranspose_involution(SuperShape shape, const Matrix &conjugator, SupertransposeConvention convention)
{
    const auto inv = inverse(conjugator);
    if (!inv) {
        throw PairError("conjugating matrix is singular");
    }
    return involution_from_matrices(shape, [&](const Matrix &x) {
        return Scalar(-1) * (conjugator * supertranspose(x, shape, convention) * *inv);
    });
}

Involution queer_involution(std::size_t n)
{
    const SuperShape shape{n, n};
    return involution_from_matrices(shape, [n](const Matrix &x) {
        Matrix out(2 * n, 2 * n);
        for (std::size_t i = 0; i < 2 * n; ++i) {
            for (std::size_t j = 0; j < 2 * n; ++j) {
                out(i, j) = x((i + n) % (2 * n), (j + n) % (2 * n));
            }
        }
        return out;
    });
}

std::optional<ScalarVector> coordinates_in(const std::vector<SuperVector> &family, const SuperVector &v,
                                           std::size_t dim)
{
    std::vector<ScalarVector> cols;
    cols.reserve(family.size());
    for (const auto &f : family) {
        cols.push_back(f.to_dense(dim));
    }
    return solve_membership(v.to_dense(dim), cols);
}

namespace {

// Eigenvectors of theta for `eigenvalue`, one parity at a time so that every
// basis vector is homogeneous.
std::vector<SuperVector> eigenspace(const LieSuperalgebra &g, const Matrix &theta, int eigenvalue)
{
    std::vector<SuperVector> out;
    for (Parity p : {Parity::even, Parity::odd}) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            if (g.parity(i) == p) {
                idx.push_back(i);
            }
        }
        Matrix sub(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r) {
            for (std::size_t c = 0; c < idx.size(); ++c) {
                sub(r, c) = theta(idx[r], idx[c]) - (r == c ? Scalar(eigenvalue) : Scalar(0));
            }
        }
        for (const auto &v : nullspace(sub)) {
            SuperVector x;
            for (std::size_t r = 0; r < idx.size(); ++r) {
                x.add(idx[r], v[r]);
            }
            out.push_back(std::move(x));
        }
    }
    return out;
}

bool in_span(const std::vector<SuperVector> &family, const SuperVector &v, std::size_t dim)
{
    return coordinates_in(family, v, dim).has_value();
}

} // namespace

SymmetricPair split_pair(std::shared_ptr<const LieSuperalgebra> g, Involution theta, std::vector<SuperVector> a_basis)
{
    validate_involution(*g, theta);
    const std::size_t n = g->dim();
    SymmetricPair pair;
    pair.k_basis = eigenspace(*g, theta.matrix(), 1);
    pair.p_basis = eigenspace(*g, theta.matrix(), -1);
    if (pair.k_basis.size() + pair.p_basis.size() != n) {
        throw PairError("eigenspaces of theta do not sum to g");
    }
    for (const auto &x : pair.k_basis) {
        for (const auto &y : pair.k_basis) {
            if (!in_span(pair.k_basis, g->bracket(x, y), n)) {
                throw PairError("[k,k] is not contained in k");
            }
        }
        for (const auto &y : pair.p_basis) {
            if (!in_span(pair.p_basis, g->bracket(x, y), n)) {
                throw PairError("[k,p] is not contained in p");
            }
        }
    }
    for (const auto &x : pair.p_basis) {
        for (const auto &y : pair.p_basis) {
            if (!in_span(pair.k_basis, g->bracket(x, y), n)) {
                throw PairError("[p,p] is not contained in k");
            }
        }
    }
    std::vector<ScalarVector> a_dense;
    for (const auto &a : a_basis) {
        if (a.is_zero() || g->parity_of(a) != Parity::even) {
            throw PairError("a_basis vector is zero or not even");
        }
        if (theta.apply(a) != -a) {
            throw PairError("a_basis vector is not in p");
        }
        for (const auto &b : a_basis) {
            if (!g->bracket(a, b).is_zero()) {
                throw PairError("a_basis is not abelian");
            }
        }
        a_dense.push_back(a.to_dense(n));
    }
    if (!a_dense.empty() && rank(Matrix::from_rows(a_dense)) != a_dense.size()) {
        throw PairError("a_basis is linearly dependent");
    }
    pair.algebra = std::move(g);
    pair.theta = std::move(theta);
    pair.a_basis = std::move(a_basis);
    return pair;
}

std::vector<SuperVector> centralizer_in_p(const SymmetricPair &pair)
{
    const auto &g = *pair.algebra;
    const std::size_t n = g.dim();
    const std::size_t m = pair.p_basis.size();
    // Column j: the concatenated brackets [p_j, a_1], ..., [p_j, a_r].
    Matrix system(n * pair.a_basis.size(), m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t r = 0; r < pair.a_basis.size(); ++r) {
            const auto image = g.bracket(pair.p_basis[j], pair.a_basis[r]).to_dense(n);
            for (std::size_t i = 0; i < n; ++i) {
                system(r * n + i, j) = image[i];
            }
        }
    }
    std::vector<SuperVector> out;
    for (const auto &coeffs : nullspace(system)) {
        SuperVector x;
        for (std::size_t j = 0; j < m; ++j) {
            x += coeffs[j] * pair.p_basis[j];
        }
        out.push_back(std::move(x));
    }
    return out;
}

bool check_centralizer(const SymmetricPair &pair)
{
    const auto centralizer = centralizer_in_p(pair);
    if (centralizer.size() != pair.a_basis.size()) {
        return false;
    }
    const std::size_t n = pair.algebra->dim();
    for (const auto &a : pair.a_basis) {
        if (!in_span(centralizer, a, n)) {
            return false;
        }
    }
    return true;
}

namespace {

// Faddeev-LeVerrier; exact over Q.
UniPoly characteristic_polynomial(const Matrix &a)
{
    const std::size_t n = a.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk + c[n - k + 1] * Matrix::identity(n);
        const Matrix amk = a * mk;
        Scalar trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            trace += amk(i, i);
        }
        c[n - k] = -trace / Scalar(static_cast<long>(k));
    }
    return UniPoly(std::move(c));
}

} // namespace

RootDecomposition root_decomposition(const LieSuperalgebra &g, const std::vector<SuperVector> &h_basis)
{
    const std::size_t n = g.dim();
    std::vector<Matrix> ads;
    for (const auto &h : h_basis) {
        ads.push_back(g.ad_matrix(h));
    }
    for (std::size_t i = 0; i < ads.size(); ++i) {
        for (std::size_t j = i + 1; j < ads.size(); ++j) {
            if (ads[i] * ads[j] != ads[j] * ads[i]) {
                throw NotDiagonalizable("ad of the h basis do not commute");
            }
        }
    }

    struct Space {
        ScalarVector weight;
        std::vector<ScalarVector> basis;
    };
    std::vector<Space> spaces(1);
    for (std::size_t i = 0; i < n; ++i) {
        ScalarVector e(n);
        e[i] = 1;
        spaces[0].basis.push_back(std::move(e));
    }

    for (const auto &ad : ads) {
        std::vector<Space> refined;
        for (const auto &space : spaces) {
            const std::size_t w = space.basis.size();
            // ad restricted to the (invariant) space, in its basis.
            Matrix restricted(w, w);
            for (std::size_t j = 0; j < w; ++j) {
                const auto coords = solve_membership(ad.apply(space.basis[j]), space.basis);
                if (!coords) {
                    throw NotDiagonalizable("joint eigenspace is not ad-invariant");
                }
                for (std::size_t i = 0; i < w; ++i) {
                    restricted(i, j) = (*coords)[i];
                }
            }
            std::size_t found = 0;
            for (const auto &lambda : characteristic_polynomial(restricted).rational_roots()) {
                Matrix shifted = restricted - lambda * Matrix::identity(w);
                Space child{space.weight, {}};
                child.weight.push_back(lambda);
                for (const auto &y : nullspace(shifted)) {
                    ScalarVector v(n);
                    for (std::size_t j = 0; j < w; ++j) {
                        for (std::size_t i = 0; i < n; ++i) {
                            if (y[j] != 0) {
                                v[i] += y[j] * space.basis[j][i];
                            }
                        }
                    }
                    child.basis.push_back(std::move(v));
                }
                found += child.basis.size();
                refined.push_back(std::move(child));
            }
            if (found != w) {
                throw NotDiagonalizable("ad h is not diagonalizable over Q");
            }
        }
        spaces = std::move(refined);
    }

    RootDecomposition out;
    out.h_basis = h_basis;
    for (const auto &space : spaces) {
        const bool zero = std::all_of(space.weight.begin(), space.weight.end(), [](const Scalar &s) { return s == 0; });
        std::vector<SuperVector> vecs;
        for (const auto &v : space.basis) {
            vecs.push_back(SuperVector::from_dense(v));
        }
        if (zero) {
            out.zero_weight = std::move(vecs);
        } else {
            out.roots[space.weight] = std::move(vecs);
        }
    }
    return out;
}

ScalarVector twist_root(const RootDecomposition &roots, const Involution &theta, const ScalarVector &alpha,
                        std::size_t dim)
{
    // (alpha o theta)(h_j) = sum_i T_ij alpha(h_i), theta(h_j) = sum_i T_ij h_i.
    const std::size_t r = roots.h_basis.size();
    ScalarVector out(r);
    for (std::size_t j = 0; j < r; ++j) {
        const auto coords = coordinates_in(roots.h_basis, theta.apply(roots.h_basis[j]), dim);
        if (!coords) {
            throw PairError("theta does not preserve h");
        }
        for (std::size_t i = 0; i < r; ++i) {
            out[j] += (*coords)[i] * alpha[i];
        }
    }
    return out;
}

} // namespace superspherical
