#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace clusterkit {

class FiniteField;

// Element of GF(p^k), stored as the coefficient vector of its residue
// polynomial, lowest degree first, length == field degree.
class FieldElem {
public:
    FieldElem() : field_(nullptr) {}
    FieldElem(const FiniteField* field, std::vector<uint32_t> coeffs);

    const FiniteField& field() const { return *field_; }
    const std::vector<uint32_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& rhs) const;
    FieldElem operator-(const FieldElem& rhs) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& rhs) const;
    FieldElem operator/(const FieldElem& rhs) const;
    FieldElem& operator+=(const FieldElem& rhs) { return *this = *this + rhs; }
    FieldElem& operator-=(const FieldElem& rhs) { return *this = *this - rhs; }
    FieldElem& operator*=(const FieldElem& rhs) { return *this = *this * rhs; }

    FieldElem inverse() const;
    FieldElem pow(uint64_t e) const;

    bool operator==(const FieldElem& rhs) const;
    bool operator!=(const FieldElem& rhs) const { return !(*this == rhs); }
    // Lexicographic on coefficient vectors; total order inside one field.
    bool operator<(const FieldElem& rhs) const;

    std::string str() const;

private:
    const FiniteField* field_;
    std::vector<uint32_t> coeffs_;
};

// GF(p^k) with the canonical modulus: the lexicographically first monic
// irreducible of degree k over GF(p), scanning coefficients highest degree
// first. Instances are interned (see make_field) and immutable, so raw
// pointers stay valid for the life of the process and pointer equality
// coincides with field equality.
class FiniteField {
public:
    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return k_; }
    // Monic modulus, k+1 coefficients, lowest degree first.
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    // p^k if it fits in 64 bits, 0 otherwise.
    uint64_t size() const { return size_; }

    FieldElem zero() const;
    FieldElem one() const;
    // Residue class of t (the image of the polynomial variable).
    FieldElem gen() const;
    FieldElem from_int(uint64_t n) const;
    FieldElem from_coeffs(std::vector<uint32_t> coeffs) const;
    // Element with ordinal n in the mixed-radix (base p) enumeration of
    // coefficient vectors; n < p^k. Used by exhaustive scans.
    FieldElem element(uint64_t ordinal) const;

    std::string name() const;         // "GF(3^2)"
    std::string modulus_str() const;  // "t^2+1"

private:
    friend const FiniteField& make_field(uint32_t p, uint32_t k);
    friend class FieldElem;

    FiniteField(uint32_t p, uint32_t k);

    void add(const uint32_t* a, const uint32_t* b, uint32_t* out) const;
    void sub(const uint32_t* a, const uint32_t* b, uint32_t* out) const;
    void neg(const uint32_t* a, uint32_t* out) const;
    void mul(const uint32_t* a, const uint32_t* b, uint32_t* out) const;

    uint32_t p_;
    uint32_t k_;
    uint64_t size_;
    std::vector<uint32_t> modulus_;
    // reduction_[i] = t^{k+i} mod modulus, i = 0..k-2; lets mul reduce a
    // degree-(2k-2) product with table lookups instead of long division.
    std::vector<std::vector<uint32_t>> reduction_;
};

// Returns the interned GF(p^k). Throws std::invalid_argument for non-prime p
// or k == 0. Repeated calls return the same object.
const FiniteField& make_field(uint32_t p, uint32_t k);

// a^{p^e}; an automorphism fixing the prime field.
FieldElem frobenius(const FieldElem& a, uint32_t e);

// The unique b with b^p = a.
FieldElem pth_root(const FieldElem& a);

// Closure of v under componentwise q-power Frobenius, q the size of a
// subfield. Sorted lexicographically for determinism.
std::vector<std::vector<FieldElem>> galois_orbit(const std::vector<FieldElem>& v,
                                                 uint64_t q);

// Smallest d >= 1 with componentwise a^{q^d} = a; the degree over GF(q) of
// the field the entries generate.
uint32_t field_degree_of(const std::vector<FieldElem>& v, uint64_t q);

// log_p(q) when q is the size of a subfield of K, throws otherwise.
uint32_t subfield_log(const FiniteField& K, uint64_t q);

bool is_prime(uint64_t n);

}  // namespace clusterkit
