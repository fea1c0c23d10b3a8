#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clusterkit/field.hpp"

namespace clusterkit {

// Linear character of a restricted Lie algebra, given by its value vector on
// the chosen basis. Values live in a splitting field K = GF(p^{m*D}); the
// base field GF(p^m) is remembered through m so conjugation knows which
// Frobenius power acts.
class Character {
public:
    Character(std::vector<FieldElem> values, uint32_t base_degree);

    const std::vector<FieldElem>& values() const { return values_; }
    const FieldElem& value(size_t i) const { return values_[i]; }
    size_t size() const { return values_.size(); }
    const FiniteField& splitting_field() const { return values_.front().field(); }
    uint32_t base_degree() const { return base_degree_; }  // m with F = GF(p^m)

    // c^alpha with alpha the e-th power of the q-Frobenius, q = |F|
    Character conjugate(uint32_t e = 1) const;
    // [F[c] : F], the Frobenius orbit size
    uint32_t field_degree() const;
    bool is_zero() const;

    Character restrict_to(const std::vector<size_t>& indices) const;
    Character operator-(const Character& rhs) const;

    bool operator==(const Character& rhs) const;
    bool operator!=(const Character& rhs) const { return !(*this == rhs); }
    // lexicographic on concatenated value coefficient vectors
    bool operator<(const Character& rhs) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    std::vector<FieldElem> values_;
    uint32_t base_degree_;
};

// Finite set of characters over one splitting field, kept sorted and
// deduplicated.
class Cluster {
public:
    Cluster() = default;
    explicit Cluster(std::vector<Character> chars);

    const std::vector<Character>& chars() const { return chars_; }
    size_t size() const { return chars_.size(); }
    bool empty() const { return chars_.empty(); }
    const Character& operator[](size_t i) const { return chars_[i]; }

    bool contains(const Character& c) const;
    bool is_frobenius_closed() const;
    // partition into Frobenius orbits, each a Cluster, ordered by smallest member
    std::vector<Cluster> simple_parts() const;
    // restriction to a subset of basis indices (deduplicated)
    Cluster restrict_to(const std::vector<size_t>& indices) const;

    bool operator==(const Cluster& rhs) const { return chars_ == rhs.chars_; }
    bool operator!=(const Cluster& rhs) const { return !(*this == rhs); }

private:
    std::vector<Character> chars_;
};

// True iff the cluster is one Frobenius conjugacy class. Throws on empty.
bool is_simple(const Cluster& C);

// [F[c] : F] as a free function, matching field_degree_of on the value vector.
uint32_t character_field(const Character& c);

}  // namespace clusterkit
