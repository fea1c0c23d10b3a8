#include "clusterkit/oracle.hpp"

#include <algorithm>

#include "clusterkit/cluster.hpp"
#include "clusterkit/embedding.hpp"
#include "clusterkit/errors.hpp"

namespace clusterkit {
namespace oracle {

namespace {

// |F|^dim if within bound, otherwise throws.
uint64_t enumeration_size(const LieModule& M, uint64_t bound) {
    const uint64_t q = M.algebra().field().size();
    if (q == 0) throw PreconditionError("oracle enumeration bound exceeded");
    uint64_t total = 1;
    for (size_t i = 0; i < M.dim(); ++i) {
        if (total > bound / q) throw PreconditionError("oracle enumeration bound exceeded");
        total *= q;
    }
    return total;
}

Vec vector_from_ordinal(const FiniteField& F, size_t dim, uint64_t ordinal) {
    Vec v;
    v.reserve(dim);
    const uint64_t q = F.size();
    for (size_t i = 0; i < dim; ++i) {
        v.push_back(F.element(ordinal % q));
        ordinal /= q;
    }
    return v;
}

}  // namespace

Matrix spin(const LieModule& M, const Vec& v) {
    if (v.size() != M.dim()) throw std::invalid_argument("spin vector dimension mismatch");
    const FiniteField& F = M.algebra().field();
    Matrix basis = column_space(Matrix::from_cols(F, {v}));
    if (vec_is_zero(v)) return Matrix(F, M.dim(), 0);
    while (true) {
        Matrix extended = basis;
        for (size_t i = 0; i < M.algebra().dim(); ++i)
            extended = extended.hcat(M.action(i) * basis);
        Matrix closed = column_space(extended);
        if (closed.cols() == basis.cols()) return closed;
        basis = std::move(closed);
    }
}

bool is_irreducible(const LieModule& M, uint64_t bound) {
    if (M.dim() == 0) return false;
    const uint64_t total = enumeration_size(M, bound);
    for (uint64_t n = 1; n < total; ++n) {
        Vec v = vector_from_ordinal(M.algebra().field(), M.dim(), n);
        if (spin(M, v).cols() != M.dim()) return false;
    }
    return true;
}

namespace {

// Minimal nonzero submodule: smallest spin dimension, smallest echelon
// basis on ties.
Matrix minimal_submodule(const LieModule& M, uint64_t bound) {
    const uint64_t total = enumeration_size(M, bound);
    Matrix best(M.algebra().field(), 0, 0);
    bool have = false;
    for (uint64_t n = 1; n < total; ++n) {
        Vec v = vector_from_ordinal(M.algebra().field(), M.dim(), n);
        Matrix s = spin(M, v);
        if (!have || s.cols() < best.cols() ||
            (s.cols() == best.cols() && s.lex_less(best))) {
            best = std::move(s);
            have = true;
        }
    }
    return best;
}

// Quotient module on the non-pivot coordinates of the submodule basis.
LieModule quotient_module(const LieModule& M, const Matrix& sub) {
    const FiniteField& F = M.algebra().field();
    Matrix R = sub.transposed();
    std::vector<size_t> pivots = rref_in_place(R);  // pivots = leading coordinates
    std::vector<bool> is_pivot(M.dim(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> rest;
    for (size_t i = 0; i < M.dim(); ++i)
        if (!is_pivot[i]) rest.push_back(i);

    // reduce a vector mod the submodule, then project on rest-coordinates
    auto project = [&](Vec v) {
        for (size_t r = 0; r < pivots.size(); ++r) {
            const FieldElem c = v[pivots[r]];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < M.dim(); ++j) v[j] -= c * R.at(r, j);
        }
        Vec out;
        out.reserve(rest.size());
        for (size_t i : rest) out.push_back(v[i]);
        return out;
    };

    std::vector<Matrix> action;
    for (size_t x = 0; x < M.algebra().dim(); ++x) {
        Matrix Q(F, rest.size(), rest.size());
        for (size_t j = 0; j < rest.size(); ++j) {
            Vec e = vec_zero(F, M.dim());
            e[rest[j]] = F.one();
            Q.set_col(j, project(M.action(x).apply(e)));
        }
        action.push_back(std::move(Q));
    }
    return LieModule(M.algebra_ptr(), std::move(action));
}

}  // namespace

CompositionSeries composition_factors(const LieModule& M, uint64_t bound) {
    CompositionSeries series;
    LieModule cur = M;
    while (cur.dim() > 0) {
        Matrix sub = minimal_submodule(cur, bound);
        series.factors.push_back(restrict_to_invariant(cur, sub));
        series.dims.push_back(sub.cols());
        if (sub.cols() == cur.dim()) break;
        cur = quotient_module(cur, sub);
    }
    return series;
}

AlgebraPtr extend_algebra(const LieAlgebra& L, const Embedding& emb) {
    const size_t n = L.dim();
    auto lift = [&](const Vec& v) {
        Vec out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(emb.map(x));
        return out;
    };
    std::vector<std::vector<Vec>> brackets(n);
    std::vector<Vec> pmap;
    for (size_t i = 0; i < n; ++i) {
        pmap.push_back(lift(L.pmap_basis(i)));
        brackets[i].reserve(n);
        for (size_t j = 0; j < n; ++j) brackets[i].push_back(lift(L.bracket_basis(i, j)));
    }
    return std::make_shared<LieAlgebra>(emb.to(), L.names(), std::move(brackets), std::move(pmap));
}

LieModule extend_module(const LieModule& M, AlgebraPtr extended, const Embedding& emb) {
    std::vector<Matrix> action;
    action.reserve(M.algebra().dim());
    for (size_t i = 0; i < M.algebra().dim(); ++i) action.push_back(emb.map_matrix(M.action(i)));
    return LieModule(std::move(extended), std::move(action));
}

Cluster cluster_by_factors(const LieModule& M, uint64_t bound) {
    if (M.dim() == 0) throw std::invalid_argument("zero-dimensional module");
    const FiniteField& F = M.algebra().field();

    // same splitting field the direct computation would use
    std::vector<Matrix> phis;
    for (size_t i = 0; i < M.algebra().dim(); ++i) phis.push_back(M.phi_basis(i));
    const uint32_t D = splitting_degree(phis);
    const FiniteField& K = make_field(F.characteristic(), F.degree() * D);
    Embedding emb(F, K);

    AlgebraPtr LK = extend_algebra(M.algebra(), emb);
    LieModule MK = extend_module(M, LK, emb);

    CompositionSeries series = composition_factors(MK, bound);
    std::vector<Character> chars;
    for (const auto& factor : series.factors) {
        auto c = has_character(factor);
        if (!c)
            throw InternalError("composition factor over the splitting field has no character");
        chars.emplace_back(c->values(), F.degree());
    }
    return Cluster(std::move(chars));
}

size_t hom_dim(const LieModule& V, const LieModule& W) {
    if (&V.algebra() != &W.algebra()) throw std::invalid_argument("hom dimension needs one algebra");
    const FiniteField& F = V.algebra().field();
    const size_t dv = V.dim(), dw = W.dim();
    const size_t unknowns = dv * dw;  // f as a dw x dv matrix, row-major
    const size_t n = V.algebra().dim();

    Matrix sys(F, n * unknowns, unknowns);
    for (size_t x = 0; x < n; ++x) {
        const Matrix& RV = V.action(x);
        const Matrix& RW = W.action(x);
        // condition RW f - f RV = 0, entry (r, c)
        for (size_t r = 0; r < dw; ++r)
            for (size_t c = 0; c < dv; ++c) {
                const size_t row = x * unknowns + r * dv + c;
                for (size_t k = 0; k < dw; ++k) sys.at(row, k * dv + c) += RW.at(r, k);
                for (size_t k = 0; k < dv; ++k) sys.at(row, r * dv + k) -= RV.at(k, c);
            }
    }
    return kernel(sys).cols();
}

}  // namespace oracle
}  // namespace clusterkit
