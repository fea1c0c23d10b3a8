#pragma once

#include <cstdint>
#include <vector>

#include "clusterkit/character.hpp"
#include "clusterkit/cluster.hpp"
#include "clusterkit/lie_algebra.hpp"
#include "clusterkit/lie_module.hpp"

namespace clusterkit {

// True iff distinct members of C have distinct restrictions to S.
bool restricts_simply(const Cluster& C, const Subalgebra& S);

// Extend a character of S to the ambient algebra by assigning the supplied
// values on the cobasis (ascending index order) and close under Frobenius.
// Every supplied value must lie in the subfield generated by c_S's values;
// the resulting cluster then restricts simply to S.
Cluster extend_character(const Subalgebra& S, const Character& c_S,
                         const std::vector<FieldElem>& cobasis_values);

// Induced module on the labelled basis e(r) ⊗ b^j: r runs over cobasis
// exponent tuples (entries < p, ascending lexicographic), j over the basis
// of W; index = rank(r) * dim(W) + j.
struct InducedModule {
    LieModule module;                                            // over F, on the ambient algebra
    std::vector<std::pair<std::vector<uint32_t>, size_t>> basis_labels;
    Cluster cluster;                                             // the inducing cluster C
    std::vector<size_t> subalgebra;                              // indices of S

    std::string label_str(size_t idx) const;
};

// C-induced module of W (a module over S.as_algebra(), using S's index
// order) along the cluster C on the ambient algebra. Preconditions: S is a
// p-subalgebra, W valid and amenable, C Frobenius closed, restricts simply
// to S, and C|S = cl(W). All action entries of the result are verified to
// lie in F and cl(result) is verified to equal C.
InducedModule induce(const Subalgebra& S, const LieModule& W, const Cluster& C);

// Decomposition-free construction, valid when every cobasis value of C lies
// in the base field: straightening happens directly over F with
// e^p = e^{[p]} + c(e)^p. Used to cross-check induce.
InducedModule induce_rational(const Subalgebra& S, const LieModule& W, const Cluster& C);

}  // namespace clusterkit
