#pragma once

#include <optional>

#include "clusterkit/character.hpp"
#include "clusterkit/lie_algebra.hpp"
#include "clusterkit/matrix.hpp"

namespace clusterkit {

// Finite dimensional module over a restricted Lie algebra, as the matrices
// of the basis actions.
class LieModule {
public:
    LieModule(AlgebraPtr algebra, std::vector<Matrix> action);

    const LieAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    size_t dim() const { return dim_; }
    const Matrix& action(size_t i) const { return action_[i]; }
    const std::vector<Matrix>& actions() const { return action_; }

    // rho(x) for a coordinate vector x
    Matrix rho(const Vec& x) const;
    // phi_x = rho(x)^p - rho(x^{[p]})
    Matrix phi(const Vec& x) const;
    Matrix phi_basis(size_t i) const;

    // checks [rho(e_i), rho(e_j)] = rho([e_i, e_j])
    ValidationReport validate() const;

private:
    AlgebraPtr algebra_;
    size_t dim_;
    std::vector<Matrix> action_;
};

// If every phi_{e_i} is scalar over the base field, the character c with
// c(e_i) = pth_root of that scalar; nullopt otherwise. Scalarity over a
// proper extension is detected by compute_cluster, not here.
std::optional<Character> has_character(const LieModule& M);

// Module on Hom(V, W), basis the matrix units in row-major order, action
// (x f) = rho_W(x) f - f rho_V(x).
LieModule hom_module(const LieModule& V, const LieModule& W);

// direct sum, block diagonal actions
LieModule direct_sum(const LieModule& A, const LieModule& B);

// conjugate every action matrix by U (basis change)
LieModule conjugated(const LieModule& M, const Matrix& U);

// restriction of the action to an invariant subspace given by basis columns
LieModule restrict_to_invariant(const LieModule& M, const Matrix& basis);

}  // namespace clusterkit
