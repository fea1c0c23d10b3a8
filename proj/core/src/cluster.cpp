#include "clusterkit/cluster.hpp"

#include <algorithm>
#include <numeric>

#include "clusterkit/errors.hpp"

namespace clusterkit {

Cluster Refinement::cluster() const {
    std::vector<Character> chars;
    chars.reserve(pieces.size());
    for (const auto& p : pieces) chars.push_back(p.character);
    return Cluster(std::move(chars));
}

uint32_t splitting_degree(const std::vector<Matrix>& phis) {
    uint64_t d = 1;
    for (const auto& phi : phis) {
        Poly m = min_poly(phi);
        if (m.degree() < 1) continue;
        for (auto [deg, count] : irreducible_factor_degrees(m)) {
            (void)count;
            d = std::lcm<uint64_t>(d, deg);
            if (d > (uint64_t(1) << 20))
                throw PreconditionError("splitting degree is unreasonably large");
        }
    }
    return static_cast<uint32_t>(d);
}

Refinement refine_eigenspaces(const std::vector<Matrix>& phis, uint32_t base_degree,
                              std::optional<uint32_t> degree_override) {
    if (phis.empty()) throw std::invalid_argument("refinement needs at least one operator");
    const FiniteField& F = phis.front().field();
    const size_t d = phis.front().rows();
    if (d == 0) throw std::invalid_argument("zero-dimensional module");

    const uint32_t dmin = splitting_degree(phis);
    uint32_t D = dmin;
    if (degree_override) {
        if (*degree_override % dmin != 0)
            throw PreconditionError("splitting degree override must be a multiple of " +
                                    std::to_string(dmin));
        D = *degree_override;
    }
    const FiniteField& K = make_field(F.characteristic(), F.degree() * D);
    Embedding emb(F, K);

    struct WorkPiece {
        Matrix basis;
        std::vector<FieldElem> eigenvalues;
        size_t max_exponent = 1;
    };
    std::vector<WorkPiece> pieces{{Matrix::identity(K, d), {}, 1}};

    for (const auto& phiF : phis) {
        const Matrix phi = emb.map_matrix(phiF);
        std::vector<WorkPiece> next;
        for (auto& piece : pieces) {
            // phi stabilizes each joint generalized eigenspace of the
            // previously processed commuting operators
            auto Xopt = solve(piece.basis, phi * piece.basis);
            if (!Xopt) throw InternalError("phi does not stabilize a refinement piece");
            const Matrix X = *Xopt;
            Poly m = min_poly(X);
            std::vector<FieldElem> roots = roots_in_field(m);
            std::vector<FieldElem> distinct;
            for (const auto& r : roots)
                if (distinct.empty() || !(distinct.back() == r)) distinct.push_back(r);
            size_t collected = 0;
            for (const auto& lambda : distinct) {
                Matrix shifted = X - Matrix::identity(K, X.rows()) * lambda;
                auto [ker, r] = stable_kernel(shifted);
                if (ker.cols() == 0) throw InternalError("eigenvalue with empty eigenspace");
                WorkPiece sub;
                sub.basis = column_space(piece.basis * ker);
                sub.eigenvalues = piece.eigenvalues;
                sub.eigenvalues.push_back(lambda);
                sub.max_exponent = std::max(piece.max_exponent, r);
                collected += sub.basis.cols();
                next.push_back(std::move(sub));
            }
            if (collected != piece.basis.cols())
                throw InternalError("generalized eigenspaces do not fill the space; "
                                    "splitting field too small");
        }
        pieces = std::move(next);
    }

    Refinement out;
    out.splitting_field = &K;
    out.splitting_degree = D;
    for (auto& piece : pieces) {
        std::vector<FieldElem> values;
        values.reserve(piece.eigenvalues.size());
        for (const auto& mu : piece.eigenvalues) values.push_back(pth_root(mu));
        Character c(std::move(values), F.degree());
        out.pieces.push_back(EigenPiece{std::move(piece.basis), std::move(piece.eigenvalues),
                                        std::move(c), piece.max_exponent});
    }
    std::sort(out.pieces.begin(), out.pieces.end(),
              [](const EigenPiece& a, const EigenPiece& b) { return a.character < b.character; });
    return out;
}

namespace {

std::vector<Matrix> phi_family(const LieModule& M) {
    std::vector<Matrix> phis;
    phis.reserve(M.algebra().dim());
    for (size_t i = 0; i < M.algebra().dim(); ++i) phis.push_back(M.phi_basis(i));
    return phis;
}

// phi operators for the basis elements of S acting on M, with the ambient
// p-map.
std::vector<Matrix> phi_family_wrt(const LieModule& M, const std::vector<size_t>& indices) {
    const uint32_t p = M.algebra().field().characteristic();
    std::vector<Matrix> phis;
    phis.reserve(indices.size());
    for (size_t i : indices)
        phis.push_back(M.action(i).pow(p) - M.rho(M.algebra().pmap_basis(i)));
    return phis;
}

// Shared decomposition routine: given the phi family of the acting set and
// the full set of matrices the parts must be invariant under.
ClusterDecomposition decompose_by_phis(const LieModule& M, const std::vector<Matrix>& phis,
                                       const std::vector<Matrix>& invariance_checks,
                                       std::optional<uint32_t> degree_override) {
    const FiniteField& F = M.algebra().field();
    const uint32_t p = F.characteristic();
    Refinement ref = refine_eigenspaces(phis, F.degree(), degree_override);
    Embedding emb(F, *ref.splitting_field);
    Cluster full = ref.cluster();

    ClusterDecomposition out;
    out.splitting_degree = ref.splitting_degree;
    size_t dim_total = 0;

    for (const Cluster& orbit : full.simple_parts()) {
        // m_j(t) = prod over the orbit of (t - c(e_j)^p); Galois invariant,
        // so it descends to F[t]
        Matrix basis = Matrix::identity(F, M.dim());
        size_t exponent = 1;
        for (size_t j = 0; j < phis.size(); ++j) {
            Poly mK = Poly::one(*ref.splitting_field);
            for (const auto& c : orbit.chars())
                mK = mK * Poly::linear(c.value(j).pow(p));
            std::vector<FieldElem> coeffsF;
            for (const auto& coef : mK.coeffs()) {
                auto pre = emb.preimage(coef);
                if (!pre) throw InternalError("orbit polynomial is not rational over the base field");
                coeffsF.push_back(*pre);
            }
            Poly mF(F, std::move(coeffsF));
            auto [ker, r] = stable_kernel(eval_poly(mF, phis[j]));
            exponent = std::max(exponent, r);
            basis = intersect_column_spaces(basis, ker);
        }
        dim_total += basis.cols();
        out.parts.push_back(DecompositionPart{orbit, std::move(basis), exponent});
    }

    // direct sum and invariance verification
    if (dim_total != M.dim()) throw InternalError("component dimensions do not sum to dim V");
    Matrix stacked(F, M.dim(), 0);
    for (const auto& part : out.parts) stacked = stacked.hcat(part.basis);
    if (rank(stacked) != M.dim()) throw InternalError("components are not independent");
    for (const auto& part : out.parts)
        for (const auto& R : invariance_checks)
            if (!solve(part.basis, R * part.basis))
                throw InternalError("component is not invariant under the action");

    // per-part cluster check: the restricted phi family must reproduce the
    // orbit exactly
    for (const auto& part : out.parts) {
        std::vector<Matrix> restricted;
        restricted.reserve(phis.size());
        for (const auto& phi : phis) {
            auto X = solve(part.basis, phi * part.basis);
            if (!X) throw InternalError("phi does not stabilize a component");
            restricted.push_back(std::move(*X));
        }
        Refinement sub = refine_eigenspaces(restricted, F.degree(), ref.splitting_degree);
        if (sub.cluster() != part.cluster)
            throw InternalError("component cluster differs from its simple cluster");
    }
    return out;
}

}  // namespace

Cluster compute_cluster(const LieModule& M, std::optional<uint32_t> degree_override) {
    if (M.dim() == 0) throw std::invalid_argument("zero-dimensional module");
    return refine_eigenspaces(phi_family(M), M.algebra().field().degree(), degree_override)
        .cluster();
}

Character conjugate(const Character& c, uint32_t e) { return c.conjugate(e); }

ClusterDecomposition cluster_decompose(const LieModule& M,
                                       std::optional<uint32_t> degree_override) {
    if (M.dim() == 0) throw std::invalid_argument("zero-dimensional module");
    return decompose_by_phis(M, phi_family(M), M.actions(), degree_override);
}

ClusterDecomposition decompose_wrt(const LieModule& M, const Subalgebra& S,
                                   std::optional<uint32_t> degree_override) {
    if (M.dim() == 0) throw std::invalid_argument("zero-dimensional module");
    if (S.parent.get() != &M.algebra())
        throw PreconditionError("subalgebra does not belong to the module's algebra");
    if (!S.is_bracket_closed()) throw PreconditionError("S is not a subalgebra");
    if (!subnormal_chain(S)) throw PreconditionError("S is not subnormal");
    return decompose_by_phis(M, phi_family_wrt(M, S.indices), M.actions(), degree_override);
}

AmenabilityReport amenability_report(const LieModule& M) {
    AmenabilityReport rep;
    rep.amenable = true;
    for (size_t i = 0; i < M.algebra().dim(); ++i) {
        Poly m = min_poly(M.phi_basis(i));
        Poly der = derivative(m);
        const bool sf = !der.is_zero() && poly_gcd(m, der).degree() == 0;
        rep.entries.push_back(AmenabilityEntry{i, m, sf});
        rep.amenable = rep.amenable && sf;
    }
    return rep;
}

bool is_amenable(const LieModule& M) { return amenability_report(M).amenable; }

}  // namespace clusterkit
