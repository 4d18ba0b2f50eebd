#include "superspherical/lie_superalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace superspherical {

SuperVector SuperVector::basis(std::size_t index, Scalar coeff)
{
    SuperVector v;
    v.add(index, coeff);
    return v;
}

SuperVector SuperVector::from_dense(const ScalarVector &coords)
{
    SuperVector v;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        v.add(i, coords[i]);
    }
    return v;
}

Scalar SuperVector::coefficient(std::size_t index) const
{
    const auto it = terms_.find(index);
    return it == terms_.end() ? Scalar(0) : it->second;
}

ScalarVector SuperVector::to_dense(std::size_t dim) const
{
    if (support_end() > dim) {
        throw std::invalid_argument("SuperVector::to_dense: index out of range");
    }
    ScalarVector out(dim);
    for (const auto &[i, c] : terms_) {
        out[i] = c;
    }
    return out;
}

void SuperVector::add(std::size_t index, const Scalar &coeff)
{
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SuperVector &SuperVector::operator+=(const SuperVector &other)
{
    for (const auto &[i, c] : other.terms_) {
        add(i, c);
    }
    return *this;
}

SuperVector &SuperVector::operator-=(const SuperVector &other)
{
    for (const auto &[i, c] : other.terms_) {
        add(i, -c);
    }
    return *this;
}

SuperVector &SuperVector::operator*=(const Scalar &s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[i, c] : terms_) {
        c *= s;
    }
    return *this;
}

LieSuperalgebra::LieSuperalgebra(std::vector<Generator> generators, const Table &table)
    : generators_(std::move(generators))
{
    const std::size_t n = generators_.size();
    for (std::size_t i = 0; i < n; ++i) {
        generators_[i].index = i;
    }
    table_.assign(n * n, SuperVector{});
    std::vector<bool> given(n * n, false);
    for (const auto &[key, value] : table) {
        const auto [i, j] = key;
        if (i >= n || j >= n || value.support_end() > n) {
            throw std::invalid_argument("LieSuperalgebra: structure constant index out of range");
        }
        table_[i * n + j] = value;
        given[i * n + j] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar sign = -sign_of_swap(parity(i), parity(j));
            if (given[i * n + j] && !given[j * n + i]) {
                table_[j * n + i] = sign * table_[i * n + j];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto &v = table_[i * n + j];
            const Parity expected = parity(i) + parity(j);
            for (const auto &[l, c] : v.terms()) {
                if (parity(l) != expected) {
                    throw std::invalid_argument("LieSuperalgebra: bracket [" + generators_[i].name + "," +
                                                generators_[j].name + "] is not homogeneous of the right parity");
                }
            }
            const Scalar sign = -sign_of_swap(parity(i), parity(j));
            if (table_[j * n + i] != sign * v) {
                throw std::invalid_argument("LieSuperalgebra: super skew-symmetry fails for [" + generators_[i].name +
                                            "," + generators_[j].name + "]");
            }
        }
    }
}

std::optional<std::size_t> LieSuperalgebra::index_of(const std::string &name) const
{
    for (const auto &g : generators_) {
        if (g.name == name) {
            return g.index;
        }
    }
    return std::nullopt;
}

void LieSuperalgebra::check_index(const SuperVector &v) const
{
    if (v.support_end() > dim()) {
        throw std::invalid_argument("SuperVector does not belong to this algebra (dimension mismatch)");
    }
}

SuperVector LieSuperalgebra::bracket(const SuperVector &x, const SuperVector &y) const
{
    check_index(x);
    check_index(y);
    SuperVector out;
    for (const auto &[i, a] : x.terms()) {
        for (const auto &[j, b] : y.terms()) {
            const Scalar ab = a * b;
            for (const auto &[l, c] : bracket_basis(i, j).terms()) {
                out.add(l, ab * c);
            }
        }
    }
    return out;
}

std::optional<Parity> LieSuperalgebra::parity_of(const SuperVector &v) const
{
    check_index(v);
    std::optional<Parity> p;
    for (const auto &[i, c] : v.terms()) {
        if (p && *p != parity(i)) {
            return std::nullopt;
        }
        p = parity(i);
    }
    return p.value_or(Parity::even);
}

Matrix LieSuperalgebra::ad_matrix(const SuperVector &x) const
{
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        for (const auto owned = bracket(x, SuperVector::basis(j)); const auto &[l, c] : owned.terms()) {
            m(l, j) = c;
        }
    }
    return m;
}

std::string LieSuperalgebra::format(const SuperVector &v) const
{
    if (v.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[i, c] : v.terms()) {
        Scalar mag = abs(c);
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) {
            os << to_string(mag) << "*";
        }
        os << generators_[i].name;
        first = false;
    }
    return os.str();
}

JacobiReport check_jacobi(const LieSuperalgebra &g)
{
    JacobiReport report;
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const SuperVector xi = SuperVector::basis(i);
        for (std::size_t j = 0; j < n; ++j) {
            const SuperVector xj = SuperVector::basis(j);
            const Scalar sign = sign_of_swap(g.parity(i), g.parity(j));
            for (std::size_t k = 0; k < n; ++k) {
                const SuperVector xk = SuperVector::basis(k);
                const SuperVector lhs = g.bracket(xi, g.bracket_basis(j, k));
                const SuperVector rhs =
                    g.bracket(g.bracket_basis(i, j), xk) + sign * g.bracket(xj, g.bracket_basis(i, k));
                if (lhs != rhs) {
                    report.pass = false;
                    report.failures.push_back({i, j, k});
                }
            }
        }
    }
    return report;
}

LieSuperalgebra gl_superalgebra(std::size_t m, std::size_t n)
{
    const std::size_t size = m + n;
    if (size == 0) {
        throw std::invalid_argument("gl_superalgebra: m + n must be positive");
    }
    auto odd_row = [m](std::size_t i) { return i >= m; };
    auto label = [m](std::size_t i) {
        return i < m ? std::to_string(i + 1) : std::to_string(i - m + 1) + "b";
    };
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            gens.push_back({i * size + j, "E" + label(i) + "," + label(j), parity_of(odd_row(i) != odd_row(j))});
        }
    }
    // [E_ij, E_kl] = d_jk E_il - (-1)^{(|i|+|j|)(|k|+|l|)} d_li E_kj
    LieSuperalgebra::Table table;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            for (std::size_t k = 0; k < size; ++k) {
                for (std::size_t l = 0; l < size; ++l) {
                    SuperVector v;
                    if (j == k) {
                        v.add(i * size + l, 1);
                    }
                    if (l == i) {
                        const int s = sign_of_swap(gens[i * size + j].parity, gens[k * size + l].parity);
                        v.add(k * size + j, -s);
                    }
                    if (!v.is_zero()) {
                        table[{i * size + j, k * size + l}] = v;
                    }
                }
            }
        }
    }
    return LieSuperalgebra(std::move(gens), table);
}

Rebased rebase(const LieSuperalgebra &g, const std::vector<SuperVector> &basis,
               const std::vector<std::string> &names)
{
    const std::size_t n = g.dim();
    if (basis.size() != n || names.size() != n) {
        throw std::invalid_argument("rebase: need exactly dim(g) basis vectors and names");
    }
    std::vector<ScalarVector> cols;
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = g.parity_of(basis[i]);
        if (!p || basis[i].is_zero()) {
            throw std::invalid_argument("rebase: basis vector '" + names[i] + "' is zero or not homogeneous");
        }
        cols.push_back(basis[i].to_dense(n));
        gens.push_back({i, names[i], *p});
    }
    Matrix to_old = Matrix::from_columns(cols, n);
    auto to_new = inverse(to_old);
    if (!to_new) {
        throw std::invalid_argument("rebase: vectors are not a basis");
    }
    LieSuperalgebra::Table table;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const SuperVector b = g.bracket(basis[i], basis[j]);
            if (!b.is_zero()) {
                table[{i, j}] = SuperVector::from_dense(to_new->apply(b.to_dense(n)));
            }
        }
    }
    return Rebased{LieSuperalgebra(std::move(gens), table), *to_new, std::move(to_old)};
}

} // namespace superspherical
