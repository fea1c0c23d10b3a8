#include "clusterkit/character.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace clusterkit {

Character::Character(std::vector<FieldElem> values, uint32_t base_degree)
    : values_(std::move(values)), base_degree_(base_degree) {
    if (values_.empty()) throw std::invalid_argument("character needs at least one value");
    const FiniteField& K = values_.front().field();
    for (const auto& v : values_)
        if (&v.field() != &K) throw std::invalid_argument("character values must share one field");
    if (K.degree() % base_degree_ != 0)
        throw std::invalid_argument("splitting field does not extend the base field");
}

Character Character::conjugate(uint32_t e) const {
    std::vector<FieldElem> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(frobenius(v, e * base_degree_));
    return Character(std::move(out), base_degree_);
}

uint32_t Character::field_degree() const {
    uint32_t d = 1;
    Character cur = conjugate();
    while (!(cur == *this)) {
        cur = cur.conjugate();
        ++d;
    }
    return d;
}

bool Character::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const FieldElem& v) { return v.is_zero(); });
}

Character Character::restrict_to(const std::vector<size_t>& indices) const {
    std::vector<FieldElem> out;
    out.reserve(indices.size());
    for (size_t i : indices) {
        if (i >= values_.size()) throw std::out_of_range("restriction index out of range");
        out.push_back(values_[i]);
    }
    return Character(std::move(out), base_degree_);
}

Character Character::operator-(const Character& rhs) const {
    if (values_.size() != rhs.values_.size() || base_degree_ != rhs.base_degree_)
        throw std::invalid_argument("character difference shape mismatch");
    std::vector<FieldElem> out;
    out.reserve(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] - rhs.values_[i]);
    return Character(std::move(out), base_degree_);
}

bool Character::operator==(const Character& rhs) const {
    return base_degree_ == rhs.base_degree_ && values_ == rhs.values_;
}

bool Character::operator<(const Character& rhs) const {
    if (values_.size() != rhs.values_.size())
        return values_.size() < rhs.values_.size();
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < rhs.values_[i]) return true;
        if (rhs.values_[i] < values_[i]) return false;
    }
    return false;
}

std::string Character::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ", ";
        if (i < names.size()) os << names[i] << "=";
        os << values_[i].str();
    }
    os << ")";
    return os.str();
}

Cluster::Cluster(std::vector<Character> chars) : chars_(std::move(chars)) {
    std::sort(chars_.begin(), chars_.end());
    chars_.erase(std::unique(chars_.begin(), chars_.end()), chars_.end());
}

bool Cluster::contains(const Character& c) const {
    return std::binary_search(chars_.begin(), chars_.end(), c);
}

bool Cluster::is_frobenius_closed() const {
    for (const auto& c : chars_)
        if (!contains(c.conjugate())) return false;
    return true;
}

std::vector<Cluster> Cluster::simple_parts() const {
    std::vector<Cluster> parts;
    std::vector<bool> used(chars_.size(), false);
    for (size_t i = 0; i < chars_.size(); ++i) {
        if (used[i]) continue;
        std::vector<Character> orbit;
        Character cur = chars_[i];
        do {
            auto it = std::lower_bound(chars_.begin(), chars_.end(), cur);
            if (it == chars_.end() || !(*it == cur))
                throw std::logic_error("cluster is not Frobenius closed");
            used[static_cast<size_t>(it - chars_.begin())] = true;
            orbit.push_back(cur);
            cur = cur.conjugate();
        } while (!(cur == chars_[i]));
        parts.emplace_back(std::move(orbit));
    }
    return parts;
}

Cluster Cluster::restrict_to(const std::vector<size_t>& indices) const {
    std::vector<Character> out;
    out.reserve(chars_.size());
    for (const auto& c : chars_) out.push_back(c.restrict_to(indices));
    return Cluster(std::move(out));
}

bool is_simple(const Cluster& C) {
    if (C.empty()) throw std::invalid_argument("empty cluster");
    if (!C.is_frobenius_closed()) return false;
    return C.simple_parts().size() == 1;
}

uint32_t character_field(const Character& c) { return c.field_degree(); }

}  // namespace clusterkit
