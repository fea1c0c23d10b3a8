#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/character.hpp"
#include "clusterkit/embedding.hpp"
#include "clusterkit/lie_algebra.hpp"
#include "clusterkit/lie_module.hpp"

namespace clusterkit {

// One joint generalized eigenspace of a commuting phi family over the
// splitting field K: basis columns over K, the eigenvalue tuple, and the
// character (p-th roots of the eigenvalues).
struct EigenPiece {
    Matrix basis;                  // over K
    std::vector<FieldElem> eigenvalues;
    Character character;
    size_t max_exponent;           // largest stabilizing power seen while refining
};

// Joint refinement of the commuting family of phi operators over F into
// generalized eigenspaces over K = GF(q^D).
struct Refinement {
    const FiniteField* splitting_field;
    uint32_t splitting_degree;     // D
    std::vector<EigenPiece> pieces;

    Cluster cluster() const;
};

// Smallest D such that GF(q^D) splits the minimal polynomial of every
// operator: the lcm of the irreducible factor degrees.
uint32_t splitting_degree(const std::vector<Matrix>& phis);

// Refine the full space under the commuting operators phis (all over F).
// degree_override, when given, must be a multiple of the minimal D.
Refinement refine_eigenspaces(const std::vector<Matrix>& phis, uint32_t base_degree,
                              std::optional<uint32_t> degree_override = std::nullopt);

// Cluster of a module: characters of the joint generalized eigenspaces of
// {phi_{e_i}} over the splitting field, sorted.
Cluster compute_cluster(const LieModule& M,
                        std::optional<uint32_t> degree_override = std::nullopt);

// c^alpha, componentwise q-power Frobenius iterated e times.
Character conjugate(const Character& c, uint32_t e);

// One summand of a cluster decomposition: a simple cluster, the component
// basis over F, and the stabilizing exponent of the defining kernels.
struct DecompositionPart {
    Cluster cluster;
    Matrix basis;      // columns over F
    size_t exponent;   // max over basis operators of the minimal stable power
};

struct ClusterDecomposition {
    std::vector<DecompositionPart> parts;
    uint32_t splitting_degree;
};

// V = V_1 ⊕ ... ⊕ V_k with cl(V_i) the i-th simple cluster. Verifies
// independence, completeness, invariance and per-part clusters; throws
// InternalError on any failure.
ClusterDecomposition cluster_decompose(const LieModule& M,
                                       std::optional<uint32_t> degree_override = std::nullopt);

// Decomposition of M with respect to a subnormal subalgebra S, using the
// ambient p-map; components are checked to be invariant under the whole
// algebra. Characters are indexed by the S-basis.
ClusterDecomposition decompose_wrt(const LieModule& M, const Subalgebra& S,
                                   std::optional<uint32_t> degree_override = std::nullopt);

struct AmenabilityEntry {
    size_t basis_index;
    Poly min_poly;
    bool squarefree;
};

struct AmenabilityReport {
    bool amenable;
    std::vector<AmenabilityEntry> entries;
};

// Squarefreeness of the minimal polynomial of every phi_{e_i}.
AmenabilityReport amenability_report(const LieModule& M);
bool is_amenable(const LieModule& M);

}  // namespace clusterkit
