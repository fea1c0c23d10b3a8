#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clusterkit/field.hpp"

namespace clusterkit {

// Dense polynomial over one FiniteField, coefficients lowest degree first,
// normalized (no trailing zero coefficients; the zero polynomial is empty).
class Poly {
public:
    Poly() : field_(nullptr) {}
    explicit Poly(const FiniteField& field) : field_(&field) {}
    Poly(const FiniteField& field, std::vector<FieldElem> coeffs);

    static Poly zero(const FiniteField& field) { return Poly(field); }
    static Poly one(const FiniteField& field);
    static Poly t(const FiniteField& field);
    static Poly constant(FieldElem c);
    // t - a
    static Poly linear(const FieldElem& a);
    // from residues mod p when the field is a prime field or entries are
    // prime-field coefficients, lowest degree first
    static Poly from_ints(const FiniteField& field, const std::vector<int64_t>& coeffs);

    const FiniteField& field() const { return *field_; }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    FieldElem coeff(size_t i) const;
    FieldElem lead() const;
    bool is_monic() const;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const FieldElem& c) const;
    bool operator==(const Poly& rhs) const { return field_ == rhs.field_ && coeffs_ == rhs.coeffs_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    Poly monic() const;
    FieldElem eval(const FieldElem& x) const;
    std::string str() const;  // "t^2+2*t+1"

private:
    const FiniteField* field_;
    std::vector<FieldElem> coeffs_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd; gcd(f, 0) = monic f. Throws if both are zero.
Poly poly_gcd(const Poly& f, const Poly& g);

// Formal derivative with characteristic-p wrap.
Poly derivative(const Poly& f);

Poly poly_powmod(const Poly& base, uint64_t e, const Poly& m);

// base^{p^e} mod m via iterated p-powering (no big exponents).
Poly poly_frobenius_powmod(const Poly& base, uint32_t e, const Poly& m);

// Degrees d of the irreducible factors of f together with the number of
// distinct factors of each degree (distinct-degree factorization; repeated
// factors counted once). f nonzero and non-constant.
std::vector<std::pair<uint32_t, uint32_t>> irreducible_factor_degrees(const Poly& f);

bool poly_is_irreducible(const Poly& f);

// All roots of f lying in K (the polynomial's own field) with multiplicity,
// sorted. Scans exhaustively when |K| <= scan_limit, otherwise extracts the
// linear part of f and splits it Cantor-Zassenhaus style.
std::vector<FieldElem> roots_in_field(const Poly& f, uint64_t scan_limit = uint64_t(1) << 16);

}  // namespace clusterkit
