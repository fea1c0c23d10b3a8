#include "clusterkit/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace clusterkit {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Plain polynomial ops over GF(p), coefficients lowest degree first. Only
// used to bootstrap the modulus scan; everything else goes through Poly.
using PPoly = std::vector<uint32_t>;

uint64_t inv_mod_p(uint64_t a, uint32_t p) {
    uint64_t inv = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return inv;
}

PPoly ppoly_trim(PPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

PPoly ppoly_make_monic(PPoly f, uint32_t p) {
    f = ppoly_trim(std::move(f));
    if (f.empty() || f.back() == 1) return f;
    uint64_t inv = inv_mod_p(f.back(), p);
    for (auto& c : f) c = static_cast<uint32_t>(c * inv % p);
    return f;
}

// Remainder of a by the monic polynomial m.
PPoly ppoly_mod(PPoly a, const PPoly& m, uint32_t p) {
    a = ppoly_trim(std::move(a));
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const uint32_t lead = a.back();
        const size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (size_t i = 0; i <= dm; ++i)
                a[shift + i] = static_cast<uint32_t>(
                    (a[shift + i] + static_cast<uint64_t>(lead) * (p - m[i])) % p);
        a = ppoly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

PPoly ppoly_mulmod(const PPoly& a, const PPoly& b, const PPoly& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<uint32_t>(
                (prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    return ppoly_mod(std::move(prod), m, p);
}

PPoly ppoly_powmod(PPoly base, uint64_t e, const PPoly& m, uint32_t p) {
    PPoly result{1};
    base = ppoly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = ppoly_mulmod(result, base, m, p);
        base = ppoly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

PPoly ppoly_gcd(PPoly a, PPoly b, uint32_t p) {
    a = ppoly_make_monic(std::move(a), p);
    b = ppoly_make_monic(std::move(b), p);
    while (!b.empty()) {
        PPoly r = ppoly_mod(a, b, p);
        a = std::move(b);
        b = ppoly_make_monic(std::move(r), p);
    }
    return a;
}

// Rabin test: monic f of degree k is irreducible over GF(p) iff
// t^{p^k} == t (mod f) and gcd(t^{p^{k/l}} - t, f) = 1 for each prime l | k.
bool ppoly_irreducible(const PPoly& f, uint32_t p) {
    const size_t k = f.size() - 1;
    if (k == 0) return false;

    auto frob_power = [&](size_t times) {
        PPoly x = ppoly_mod({0, 1}, f, p);
        for (size_t i = 0; i < times; ++i) x = ppoly_powmod(std::move(x), p, f, p);
        return x;
    };
    auto minus_t = [&](PPoly x) {
        if (x.size() < 2) x.resize(2, 0);
        x[1] = (x[1] + p - 1) % p;
        return ppoly_trim(std::move(x));
    };

    std::vector<size_t> prime_divisors;
    for (size_t d = 2, n = k; d <= n; ++d)
        if (n % d == 0) {
            prime_divisors.push_back(d);
            while (n % d == 0) n /= d;
        }

    for (size_t l : prime_divisors) {
        PPoly g = ppoly_gcd(f, minus_t(frob_power(k / l)), p);
        if (g.size() != 1) return false;
    }
    return ppoly_mod(minus_t(frob_power(k)), f, p).empty();
}

// First monic irreducible of degree k, coefficient tuples scanned in
// ascending lexicographic order with the highest-degree coefficient most
// significant.
PPoly canonical_modulus(uint32_t p, uint32_t k) {
    PPoly f(k + 1, 0);
    f[k] = 1;
    std::vector<uint32_t> digits(k, 0);
    while (true) {
        for (uint32_t i = 0; i < k; ++i) f[k - 1 - i] = digits[i];
        if (ppoly_irreducible(f, p)) return f;
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
        if (pos < 0) throw std::logic_error("no irreducible polynomial of requested degree");
        ++digits[pos];
    }
}

}  // namespace

FiniteField::FiniteField(uint32_t p, uint32_t k) : p_(p), k_(k) {
    modulus_ = canonical_modulus(p, k);

    size_ = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (size_ > UINT64_MAX / p) {
            size_ = 0;
            break;
        }
        size_ *= p;
    }

    // reduction_[i] = t^{k+i} mod modulus, for i in [0, k-1)
    if (k > 1) {
        std::vector<uint32_t> cur(modulus_.begin(), modulus_.begin() + k);
        for (auto& c : cur) c = (p - c) % p;  // t^k == -(low part)
        reduction_.push_back(cur);
        for (uint32_t i = 1; i + 1 < k; ++i) {
            std::vector<uint32_t> next(k, 0);
            const uint32_t top = cur[k - 1];
            for (uint32_t j = k - 1; j > 0; --j) next[j] = cur[j - 1];
            if (top != 0)
                for (uint32_t j = 0; j < k; ++j)
                    next[j] = static_cast<uint32_t>(
                        (next[j] + static_cast<uint64_t>(top) * reduction_[0][j]) % p);
            reduction_.push_back(next);
            cur = std::move(next);
        }
    }
}

const FiniteField& make_field(uint32_t p, uint32_t k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k == 0) throw std::invalid_argument("field degree must be positive");
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<FiniteField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, k}];
    if (!slot) slot.reset(new FiniteField(p, k));
    return *slot;
}

void FiniteField::add(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
    for (uint32_t i = 0; i < k_; ++i) out[i] = (a[i] + b[i]) % p_;
}

void FiniteField::sub(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
    for (uint32_t i = 0; i < k_; ++i) out[i] = (a[i] + p_ - b[i]) % p_;
}

void FiniteField::neg(const uint32_t* a, uint32_t* out) const {
    for (uint32_t i = 0; i < k_; ++i) out[i] = (p_ - a[i]) % p_;
}

void FiniteField::mul(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
    if (k_ == 1) {
        out[0] = static_cast<uint32_t>(static_cast<uint64_t>(a[0]) * b[0] % p_);
        return;
    }
    std::vector<uint64_t> prod(2 * k_ - 1, 0);
    for (uint32_t i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (uint32_t j = 0; j < k_; ++j) prod[i + j] += static_cast<uint64_t>(a[i]) * b[j];
    }
    for (auto& v : prod) v %= p_;
    for (uint32_t i = 2 * k_ - 2; i >= k_; --i) {
        const uint64_t c = prod[i];
        if (c != 0) {
            const auto& row = reduction_[i - k_];
            for (uint32_t j = 0; j < k_; ++j) prod[j] = (prod[j] + c * row[j]) % p_;
        }
    }
    for (uint32_t j = 0; j < k_; ++j) out[j] = static_cast<uint32_t>(prod[j]);
}

FieldElem FiniteField::zero() const { return FieldElem(this, std::vector<uint32_t>(k_, 0)); }

FieldElem FiniteField::one() const {
    std::vector<uint32_t> c(k_, 0);
    c[0] = 1 % p_;
    return FieldElem(this, std::move(c));
}

FieldElem FiniteField::gen() const {
    std::vector<uint32_t> c(k_, 0);
    if (k_ > 1) c[1] = 1;  // in GF(p) the class of t is 0
    return FieldElem(this, std::move(c));
}

FieldElem FiniteField::from_int(uint64_t n) const {
    std::vector<uint32_t> c(k_, 0);
    c[0] = static_cast<uint32_t>(n % p_);
    return FieldElem(this, std::move(c));
}

FieldElem FiniteField::from_coeffs(std::vector<uint32_t> coeffs) const {
    if (coeffs.size() > k_) throw std::invalid_argument("coefficient vector longer than field degree");
    coeffs.resize(k_, 0);
    for (auto& c : coeffs) c %= p_;
    return FieldElem(this, std::move(coeffs));
}

FieldElem FiniteField::element(uint64_t ordinal) const {
    std::vector<uint32_t> c(k_, 0);
    for (uint32_t i = 0; i < k_; ++i) {
        c[i] = static_cast<uint32_t>(ordinal % p_);
        ordinal /= p_;
    }
    if (ordinal != 0) throw std::out_of_range("element ordinal exceeds field size");
    return FieldElem(this, std::move(c));
}

std::string FiniteField::name() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (k_ > 1) os << "^" << k_;
    os << ")";
    return os.str();
}

std::string FiniteField::modulus_str() const {
    std::ostringstream os;
    bool first = true;
    for (uint32_t i = k_ + 1; i-- > 0;) {
        const uint32_t c = modulus_[i];
        if (c == 0) continue;
        if (!first) os << "+";
        if (i == 0)
            os << c;
        else {
            if (c != 1) os << c << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FieldElem::FieldElem(const FiniteField* field, std::vector<uint32_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field->degree())
        throw std::invalid_argument("coefficient count must equal field degree");
}

bool FieldElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint32_t c) { return c == 0; });
}

bool FieldElem::is_one() const { return *this == field_->one(); }

namespace {
void check_same_field(const FieldElem& a, const FieldElem& b) {
    if (&a.field() != &b.field()) throw std::invalid_argument("field mismatch");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
    check_same_field(*this, rhs);
    std::vector<uint32_t> out(coeffs_.size());
    field_->add(coeffs_.data(), rhs.coeffs_.data(), out.data());
    return FieldElem(field_, std::move(out));
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const {
    check_same_field(*this, rhs);
    std::vector<uint32_t> out(coeffs_.size());
    field_->sub(coeffs_.data(), rhs.coeffs_.data(), out.data());
    return FieldElem(field_, std::move(out));
}

FieldElem FieldElem::operator-() const {
    std::vector<uint32_t> out(coeffs_.size());
    field_->neg(coeffs_.data(), out.data());
    return FieldElem(field_, std::move(out));
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
    check_same_field(*this, rhs);
    std::vector<uint32_t> out(coeffs_.size());
    field_->mul(coeffs_.data(), rhs.coeffs_.data(), out.data());
    return FieldElem(field_, std::move(out));
}

FieldElem FieldElem::operator/(const FieldElem& rhs) const { return *this * rhs.inverse(); }

FieldElem FieldElem::pow(uint64_t e) const {
    FieldElem result = field_->one();
    FieldElem base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero field element");
    const uint32_t p = field_->characteristic();
    const uint32_t k = field_->degree();
    if (k == 1) return field_->from_int(inv_mod_p(coeffs_[0], p));
    // Norm chain: z_i = a^{1+p+...+p^i}, so z_{k-1} = Norm(a) lies in GF(p)
    // and a^{-1} = Norm(a)^{-1} * (z_{k-2})^p.
    FieldElem z = *this;
    FieldElem prev = *this;
    for (uint32_t i = 1; i < k; ++i) {
        prev = z.pow(p);
        z = prev * (*this);
    }
    for (uint32_t i = 1; i < k; ++i)
        if (z.coeffs()[i] != 0) throw std::logic_error("field norm left the prime field");
    return prev * field_->from_int(inv_mod_p(z.coeffs()[0], p));
}

bool FieldElem::operator==(const FieldElem& rhs) const {
    return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

bool FieldElem::operator<(const FieldElem& rhs) const {
    check_same_field(*this, rhs);
    return coeffs_ < rhs.coeffs_;
}

std::string FieldElem::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << " ";
        os << coeffs_[i];
    }
    os << "]";
    return os.str();
}

FieldElem frobenius(const FieldElem& a, uint32_t e) {
    const uint32_t k = a.field().degree();
    const uint32_t p = a.field().characteristic();
    FieldElem r = a;
    for (uint32_t i = 0; i < e % k; ++i) r = r.pow(p);
    return r;
}

FieldElem pth_root(const FieldElem& a) {
    // Frobenius is bijective on a finite field; its inverse is a -> a^{p^{k-1}}.
    const uint32_t p = a.field().characteristic();
    FieldElem r = a;
    for (uint32_t i = 0; i + 1 < a.field().degree(); ++i) r = r.pow(p);
    return r;
}

uint32_t subfield_log(const FiniteField& K, uint64_t q) {
    const uint32_t p = K.characteristic();
    uint64_t v = q;
    uint32_t m = 0;
    while (v > 1 && v % p == 0) {
        v /= p;
        ++m;
    }
    if (v != 1 || m == 0 || K.degree() % m != 0)
        throw std::invalid_argument("q is not the size of a subfield");
    return m;
}

std::vector<std::vector<FieldElem>> galois_orbit(const std::vector<FieldElem>& v, uint64_t q) {
    if (v.empty()) return {v};
    const uint32_t m = subfield_log(v.front().field(), q);
    std::vector<std::vector<FieldElem>> orbit;
    std::vector<FieldElem> cur = v;
    do {
        orbit.push_back(cur);
        for (auto& x : cur) x = frobenius(x, m);
    } while (!(cur == v));
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

uint32_t field_degree_of(const std::vector<FieldElem>& v, uint64_t q) {
    if (v.empty()) return 1;
    const uint32_t m = subfield_log(v.front().field(), q);
    std::vector<FieldElem> cur = v;
    uint32_t d = 0;
    do {
        for (auto& x : cur) x = frobenius(x, m);
        ++d;
    } while (!(cur == v));
    return d;
}

}  // namespace clusterkit
