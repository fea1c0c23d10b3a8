#include "clusterkit/lie_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace clusterkit {

LieAlgebra::LieAlgebra(const FiniteField& field, std::vector<std::string> names,
                       std::vector<std::vector<Vec>> brackets, std::vector<Vec> pmap)
    : field_(&field), names_(std::move(names)), brackets_(std::move(brackets)), pmap_(std::move(pmap)) {
    const size_t n = names_.size();
    if (n == 0) throw std::invalid_argument("algebra dimension must be positive");
    if (brackets_.size() != n || pmap_.size() != n)
        throw std::invalid_argument("bracket/p-map tables must match the dimension");
    for (const auto& row : brackets_) {
        if (row.size() != n) throw std::invalid_argument("bracket table must be n x n");
        for (const auto& v : row)
            if (v.size() != n) throw std::invalid_argument("bracket coordinates must have length n");
    }
    for (const auto& v : pmap_)
        if (v.size() != n) throw std::invalid_argument("p-map coordinates must have length n");
}

Vec LieAlgebra::basis_vector(size_t i) const {
    Vec v = zero_vector();
    v[i] = field_->one();
    return v;
}

Vec LieAlgebra::bracket(const Vec& a, const Vec& b) const {
    const size_t n = dim();
    if (a.size() != n || b.size() != n) throw std::invalid_argument("bracket dimension mismatch");
    Vec out = zero_vector();
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const FieldElem c = a[i] * b[j];
            out = vec_add(out, vec_scale(c, brackets_[i][j]));
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const Vec& v) const {
    const size_t n = dim();
    Matrix A(*field_, n, n);
    for (size_t j = 0; j < n; ++j) A.set_col(j, bracket(v, basis_vector(j)));
    return A;
}

Vec LieAlgebra::p_power(const Vec& v) const {
    const size_t n = dim();
    if (v.size() != n) throw std::invalid_argument("p-power dimension mismatch");
    const uint32_t p = field_->characteristic();

    // locate the first nonzero coordinate; (λ e_i)^{[p]} = λ^p P_i
    size_t lead = n;
    for (size_t i = 0; i < n; ++i)
        if (!v[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == n) return zero_vector();

    Vec a = zero_vector();
    a[lead] = v[lead];
    Vec b = v;
    b[lead] = field_->zero();

    Vec result = vec_scale(v[lead].pow(p), pmap_[lead]);
    if (vec_is_zero(b)) return result;
    result = vec_add(result, p_power(b));

    // Jacobson correction: sum of s_i(a,b) where i*s_i(a,b) is the
    // coefficient of t^{i-1} in (ad(ta+b))^{p-1}(a). Work in L[t] with one
    // coordinate vector per t-degree.
    std::vector<Vec> w(1, a);  // degree 0
    for (uint32_t step = 0; step + 1 < p; ++step) {
        std::vector<Vec> next(w.size() + 1, zero_vector());
        for (size_t d = 0; d < w.size(); ++d) {
            next[d + 1] = vec_add(next[d + 1], bracket(a, w[d]));
            next[d] = vec_add(next[d], bracket(b, w[d]));
        }
        w = std::move(next);
    }
    for (uint32_t i = 1; i <= p - 1; ++i) {
        if (i - 1 >= w.size()) break;
        const FieldElem inv_i = field_->from_int(i).inverse();
        result = vec_add(result, vec_scale(inv_i, w[i - 1]));
    }
    return result;
}

ValidationReport LieAlgebra::validate() const {
    ValidationReport rep;
    const size_t n = dim();
    auto note = [&](const std::string& s) { rep.violations.push_back(s); };

    for (size_t i = 0; i < n; ++i) {
        if (!vec_is_zero(brackets_[i][i])) {
            std::ostringstream os;
            os << "[" << names_[i] << "," << names_[i] << "] != 0";
            note(os.str());
        }
        for (size_t j = i + 1; j < n; ++j) {
            if (!vec_is_zero(vec_add(brackets_[i][j], brackets_[j][i]))) {
                std::ostringstream os;
                os << "[" << names_[i] << "," << names_[j] << "] != -[" << names_[j] << ","
                   << names_[i] << "]";
                note(os.str());
            }
        }
    }

    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Vec s = bracket(basis_vector(i), brackets_[j][k]);
                s = vec_add(s, bracket(basis_vector(j), brackets_[k][i]));
                s = vec_add(s, bracket(basis_vector(k), brackets_[i][j]));
                if (!vec_is_zero(s)) {
                    std::ostringstream os;
                    os << "Jacobi identity fails on (" << names_[i] << "," << names_[j] << ","
                       << names_[k] << ")";
                    note(os.str());
                }
            }

    const uint32_t p = field_->characteristic();
    for (size_t i = 0; i < n; ++i) {
        if (ad(pmap_[i]) != ad_basis(i).pow(p)) {
            std::ostringstream os;
            os << "ad(" << names_[i] << "^[p]) != (ad " << names_[i] << ")^p";
            note(os.str());
        }
    }
    return rep;
}

Subalgebra::Subalgebra(AlgebraPtr parent_, std::vector<size_t> indices_)
    : parent(std::move(parent_)), indices(std::move(indices_)) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (size_t i : indices)
        if (i >= parent->dim()) throw std::invalid_argument("subalgebra index out of range");
    if (indices.empty()) throw std::invalid_argument("subalgebra must be nonzero");
}

bool Subalgebra::is_bracket_closed() const {
    std::vector<bool> inside(parent->dim(), false);
    for (size_t i : indices) inside[i] = true;
    for (size_t i : indices)
        for (size_t j : indices) {
            const Vec& v = parent->bracket_basis(i, j);
            for (size_t k = 0; k < v.size(); ++k)
                if (!inside[k] && !v[k].is_zero()) return false;
        }
    return true;
}

bool Subalgebra::is_p_closed() const {
    std::vector<bool> inside(parent->dim(), false);
    for (size_t i : indices) inside[i] = true;
    for (size_t i : indices) {
        const Vec& v = parent->pmap_basis(i);
        for (size_t k = 0; k < v.size(); ++k)
            if (!inside[k] && !v[k].is_zero()) return false;
    }
    return true;
}

Matrix Subalgebra::span() const {
    std::vector<Vec> cols;
    cols.reserve(indices.size());
    for (size_t i : indices) cols.push_back(parent->basis_vector(i));
    return Matrix::from_cols(parent->field(), cols);
}

AlgebraPtr Subalgebra::as_algebra() const {
    if (!is_bracket_closed() || !is_p_closed())
        throw std::invalid_argument("index set does not span a p-subalgebra");
    const size_t m = indices.size();
    std::vector<size_t> pos(parent->dim(), SIZE_MAX);
    for (size_t a = 0; a < m; ++a) pos[indices[a]] = a;

    auto restrict_vec = [&](const Vec& v) {
        Vec out = vec_zero(parent->field(), m);
        for (size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) out[pos[k]] = v[k];
        return out;
    };

    std::vector<std::string> names;
    std::vector<std::vector<Vec>> brackets(m);
    std::vector<Vec> pmap;
    for (size_t a = 0; a < m; ++a) {
        names.push_back(parent->names()[indices[a]]);
        pmap.push_back(restrict_vec(parent->pmap_basis(indices[a])));
        brackets[a].reserve(m);
        for (size_t b = 0; b < m; ++b)
            brackets[a].push_back(restrict_vec(parent->bracket_basis(indices[a], indices[b])));
    }
    return std::make_shared<LieAlgebra>(parent->field(), std::move(names), std::move(brackets),
                                        std::move(pmap));
}

std::vector<size_t> Subalgebra::cobasis() const {
    std::vector<bool> inside(parent->dim(), false);
    for (size_t i : indices) inside[i] = true;
    std::vector<size_t> out;
    for (size_t i = 0; i < parent->dim(); ++i)
        if (!inside[i]) out.push_back(i);
    return out;
}

Matrix idealizer_of_subspace(const LieAlgebra& L, const Matrix& U) {
    const size_t n = L.dim();
    const FiniteField& F = L.field();
    Matrix Ured = column_space(U);
    // x qualifies iff for each basis column u there is y with
    // ad(u) x = Ured y; read the x-part off the kernel of [ad(u) | -Ured]
    // and intersect over the columns.
    Matrix result = Matrix::identity(F, n);
    for (size_t j = 0; j < Ured.cols(); ++j) {
        Matrix adu = L.ad(Ured.col(j));
        // solutions (x, y): adu * x = Ured * y  <=>  [adu | -Ured] kernel
        Matrix neg = Ured * (-F.one());
        Matrix sys = adu.hcat(neg);
        Matrix K = kernel(sys);
        // x-part spans the admissible x for this u
        Matrix X(F, n, K.cols());
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < K.cols(); ++c) X.at(r, c) = K.at(r, c);
        result = intersect_column_spaces(result, column_space(X));
    }
    return result;
}

Matrix idealizer(const Subalgebra& S) {
    if (!S.is_bracket_closed()) throw std::invalid_argument("subalgebra is not bracket closed");
    return idealizer_of_subspace(*S.parent, S.span());
}

std::optional<std::vector<Matrix>> subnormal_chain(const Subalgebra& S) {
    const LieAlgebra& L = *S.parent;
    std::vector<Matrix> chain;
    Matrix cur = column_space(S.span());
    chain.push_back(cur);
    while (cur.cols() < L.dim()) {
        Matrix next = idealizer_of_subspace(L, cur);
        if (next.cols() == cur.cols()) return std::nullopt;  // stabilized early
        cur = std::move(next);
        chain.push_back(cur);
    }
    return chain;
}

}  // namespace clusterkit
