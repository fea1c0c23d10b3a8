#pragma once

#include <optional>

#include "clusterkit/field.hpp"
#include "clusterkit/matrix.hpp"
#include "clusterkit/poly.hpp"

namespace clusterkit {

// Canonical field homomorphism GF(p^m) -> GF(p^{m*d}): sends the generator
// of the small field to the lexicographically smallest root of its modulus
// in the big field. Identity when both fields coincide.
class Embedding {
public:
    Embedding(const FiniteField& from, const FiniteField& to);

    const FiniteField& from() const { return *from_; }
    const FiniteField& to() const { return *to_; }

    FieldElem map(const FieldElem& a) const;
    Matrix map_matrix(const Matrix& A) const;
    Poly map_poly(const Poly& f) const;

    // Inverse image when a lies in the embedded subfield.
    std::optional<FieldElem> preimage(const FieldElem& a) const;
    std::optional<Matrix> preimage_matrix(const Matrix& A) const;

private:
    const FiniteField* from_;
    const FiniteField* to_;
    std::vector<FieldElem> gen_powers_;  // image of t_from^i, i < deg(from)
    Matrix coord_map_;                   // GF(p)-linear map on coefficient vectors
};

// Roots in K of a polynomial defined over a subfield of K.
std::vector<FieldElem> roots_in_field(const Poly& f, const FiniteField& K);

}  // namespace clusterkit
