#pragma once

#include <cstdint>
#include <vector>

#include "clusterkit/character.hpp"
#include "clusterkit/lie_module.hpp"

namespace clusterkit {

// Brute-force ground truth, independent of the eigenspace machinery.
// Everything here enumerates vectors, so |F|^dim must stay within the bound.
namespace oracle {

inline constexpr uint64_t kDefaultBound = uint64_t(1) << 14;

// Echelonized basis of the smallest submodule containing v.
Matrix spin(const LieModule& M, const Vec& v);

// True iff every nonzero vector spins to the whole space.
bool is_irreducible(const LieModule& M, uint64_t bound = kDefaultBound);

struct CompositionSeries {
    std::vector<LieModule> factors;  // quotient actions, bottom-up
    std::vector<size_t> dims;
};

// Jordan-Hölder factors by repeatedly splitting off a minimal submodule
// (minimal dimension, lexicographically smallest echelon basis on ties).
CompositionSeries composition_factors(const LieModule& M, uint64_t bound = kDefaultBound);

// Cluster computed the defining way: extend scalars to the splitting field,
// take composition factors there, read off each factor's character.
Cluster cluster_by_factors(const LieModule& M, uint64_t bound = kDefaultBound);

// dim of the space of module homomorphisms V -> W.
size_t hom_dim(const LieModule& V, const LieModule& W);

// Scalar extension of the algebra and a module along an embedding.
AlgebraPtr extend_algebra(const LieAlgebra& L, const Embedding& emb);
LieModule extend_module(const LieModule& M, AlgebraPtr extended, const Embedding& emb);

}  // namespace oracle

}  // namespace clusterkit
