#include "clusterkit/lie_module.hpp"

#include <sstream>
#include <stdexcept>

namespace clusterkit {

LieModule::LieModule(AlgebraPtr algebra, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
    if (action_.size() != algebra_->dim())
        throw std::invalid_argument("one action matrix per basis element required");
    dim_ = action_.empty() ? 0 : action_.front().rows();
    for (const auto& A : action_) {
        if (A.rows() != dim_ || A.cols() != dim_)
            throw std::invalid_argument("action matrices must be square of equal size");
        if (&A.field() != &algebra_->field())
            throw std::invalid_argument("action matrices must live over the algebra's field");
    }
}

Matrix LieModule::rho(const Vec& x) const {
    if (x.size() != algebra_->dim()) throw std::invalid_argument("rho dimension mismatch");
    Matrix out(algebra_->field(), dim_, dim_);
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out = out + action_[i] * x[i];
    return out;
}

Matrix LieModule::phi(const Vec& x) const {
    const uint32_t p = algebra_->field().characteristic();
    return rho(x).pow(p) - rho(algebra_->p_power(x));
}

Matrix LieModule::phi_basis(size_t i) const {
    const uint32_t p = algebra_->field().characteristic();
    return action_[i].pow(p) - rho(algebra_->pmap_basis(i));
}

ValidationReport LieModule::validate() const {
    ValidationReport rep;
    const size_t n = algebra_->dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Matrix lhs = action_[i] * action_[j] - action_[j] * action_[i];
            if (lhs != rho(algebra_->bracket_basis(i, j))) {
                std::ostringstream os;
                os << "[rho(" << algebra_->names()[i] << "), rho(" << algebra_->names()[j]
                   << ")] != rho([" << algebra_->names()[i] << "," << algebra_->names()[j] << "])";
                rep.violations.push_back(os.str());
            }
        }
    return rep;
}

std::optional<Character> has_character(const LieModule& M) {
    if (M.dim() == 0) throw std::invalid_argument("zero-dimensional module has no character");
    std::vector<FieldElem> values;
    values.reserve(M.algebra().dim());
    for (size_t i = 0; i < M.algebra().dim(); ++i) {
        FieldElem mu = M.algebra().field().zero();
        if (!M.phi_basis(i).is_scalar(&mu)) return std::nullopt;
        values.push_back(pth_root(mu));
    }
    return Character(std::move(values), M.algebra().field().degree());
}

LieModule hom_module(const LieModule& V, const LieModule& W) {
    if (&V.algebra() != &W.algebra()) throw std::invalid_argument("hom module needs one algebra");
    const FiniteField& F = V.algebra().field();
    const size_t dv = V.dim(), dw = W.dim();
    const size_t d = dv * dw;

    std::vector<Matrix> action;
    action.reserve(V.algebra().dim());
    for (size_t x = 0; x < V.algebra().dim(); ++x) {
        const Matrix& RV = V.action(x);
        const Matrix& RW = W.action(x);
        Matrix H(F, d, d);
        // basis unit E_{ab} at index a*dv + b (f: V -> W as a dw x dv matrix)
        for (size_t a = 0; a < dw; ++a)
            for (size_t b = 0; b < dv; ++b) {
                const size_t src = a * dv + b;
                // RW * E_ab: column b gets RW column a
                for (size_t r = 0; r < dw; ++r)
                    if (!RW.at(r, a).is_zero()) H.at(r * dv + b, src) += RW.at(r, a);
                // E_ab * RV: row a gets RV row b
                for (size_t c = 0; c < dv; ++c)
                    if (!RV.at(b, c).is_zero()) H.at(a * dv + c, src) -= RV.at(b, c);
            }
        action.push_back(std::move(H));
    }
    return LieModule(V.algebra_ptr(), std::move(action));
}

LieModule direct_sum(const LieModule& A, const LieModule& B) {
    if (&A.algebra() != &B.algebra()) throw std::invalid_argument("direct sum needs one algebra");
    const FiniteField& F = A.algebra().field();
    std::vector<Matrix> action;
    for (size_t x = 0; x < A.algebra().dim(); ++x) {
        Matrix M(F, A.dim() + B.dim(), A.dim() + B.dim());
        for (size_t i = 0; i < A.dim(); ++i)
            for (size_t j = 0; j < A.dim(); ++j) M.at(i, j) = A.action(x).at(i, j);
        for (size_t i = 0; i < B.dim(); ++i)
            for (size_t j = 0; j < B.dim(); ++j) M.at(A.dim() + i, A.dim() + j) = B.action(x).at(i, j);
        action.push_back(std::move(M));
    }
    return LieModule(A.algebra_ptr(), std::move(action));
}

LieModule conjugated(const LieModule& M, const Matrix& U) {
    Matrix Uinv = inverse(U);
    std::vector<Matrix> action;
    action.reserve(M.algebra().dim());
    for (size_t x = 0; x < M.algebra().dim(); ++x) action.push_back(Uinv * M.action(x) * U);
    return LieModule(M.algebra_ptr(), std::move(action));
}

LieModule restrict_to_invariant(const LieModule& M, const Matrix& basis) {
    std::vector<Matrix> action;
    action.reserve(M.algebra().dim());
    for (size_t x = 0; x < M.algebra().dim(); ++x) {
        auto X = solve(basis, M.action(x) * basis);
        if (!X) throw std::invalid_argument("subspace is not invariant under the action");
        action.push_back(std::move(*X));
    }
    return LieModule(M.algebra_ptr(), std::move(action));
}

}  // namespace clusterkit
