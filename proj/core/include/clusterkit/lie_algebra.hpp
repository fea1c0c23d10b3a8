#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/field.hpp"
#include "clusterkit/matrix.hpp"

namespace clusterkit {

// Outcome of a structural validation; empty means valid.
struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Restricted Lie algebra over a finite field, given by structure constants
// on a fixed basis plus the p-map images of the basis elements. The p-map
// on arbitrary elements is recovered on demand via Jacobson's formula.
class LieAlgebra {
public:
    LieAlgebra(const FiniteField& field, std::vector<std::string> names,
               std::vector<std::vector<Vec>> brackets, std::vector<Vec> pmap);

    const FiniteField& field() const { return *field_; }
    size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    // [e_i, e_j] as a coordinate vector
    const Vec& bracket_basis(size_t i, size_t j) const { return brackets_[i][j]; }
    Vec bracket(const Vec& a, const Vec& b) const;
    // e_i^{[p]}
    const Vec& pmap_basis(size_t i) const { return pmap_[i]; }

    // matrix of w -> [v, w]
    Matrix ad(const Vec& v) const;
    Matrix ad_basis(size_t i) const { return ad(basis_vector(i)); }

    // v^{[p]} for an arbitrary coordinate vector, by Jacobson's formula
    Vec p_power(const Vec& v) const;

    Vec basis_vector(size_t i) const;
    Vec zero_vector() const { return vec_zero(*field_, dim()); }

    // Checks antisymmetry, the Jacobi identity on basis triples, and
    // ad(e_i^{[p]}) = (ad e_i)^p.
    ValidationReport validate() const;

private:
    const FiniteField* field_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> brackets_;  // brackets_[i][j] = [e_i, e_j]
    std::vector<Vec> pmap_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

// Subalgebra spanned by a subset of the ambient basis.
struct Subalgebra {
    AlgebraPtr parent;
    std::vector<size_t> indices;  // ascending, unique

    Subalgebra(AlgebraPtr parent_, std::vector<size_t> indices_);

    size_t dim() const { return indices.size(); }
    bool is_bracket_closed() const;
    // closed under the ambient p-map as well
    bool is_p_closed() const;
    // basis vectors of the span, as columns in the ambient coordinates
    Matrix span() const;
    // re-indexed standalone restricted algebra; requires p-closure
    AlgebraPtr as_algebra() const;
    // complement of the index set, ascending
    std::vector<size_t> cobasis() const;
};

// {x in L : [x, U] ⊆ U} for a subspace given by basis columns.
Matrix idealizer_of_subspace(const LieAlgebra& L, const Matrix& U);

// Idealizer of a subalgebra, as a subspace basis in ambient coordinates.
Matrix idealizer(const Subalgebra& S);

// Ascending chain S = U_0 < U_1 < ... obtained by iterating idealizers;
// present iff it reaches L (i.e. S is subnormal).
std::optional<std::vector<Matrix>> subnormal_chain(const Subalgebra& S);

}  // namespace clusterkit
