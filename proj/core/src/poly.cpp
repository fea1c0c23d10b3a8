#include "clusterkit/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace clusterkit {

Poly::Poly(const FiniteField& field, std::vector<FieldElem> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (&c.field() != field_) throw std::invalid_argument("polynomial coefficient field mismatch");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::one(const FiniteField& field) { return Poly(field, {field.one()}); }

Poly Poly::t(const FiniteField& field) { return Poly(field, {field.zero(), field.one()}); }

Poly Poly::constant(FieldElem c) {
    const FiniteField& f = c.field();
    return Poly(f, {std::move(c)});
}

Poly Poly::linear(const FieldElem& a) {
    const FiniteField& f = a.field();
    return Poly(f, {-a, f.one()});
}

Poly Poly::from_ints(const FiniteField& field, const std::vector<int64_t>& coeffs) {
    std::vector<FieldElem> cs;
    cs.reserve(coeffs.size());
    const int64_t p = field.characteristic();
    for (int64_t v : coeffs) {
        int64_t r = ((v % p) + p) % p;
        cs.push_back(field.from_int(static_cast<uint64_t>(r)));
    }
    return Poly(field, std::move(cs));
}

FieldElem Poly::coeff(size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_->zero();
}

FieldElem Poly::lead() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

Poly Poly::operator+(const Poly& rhs) const {
    std::vector<FieldElem> out;
    const size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(coeff(i) + rhs.coeff(i));
    return Poly(*field_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
    std::vector<FieldElem> out;
    const size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(coeff(i) - rhs.coeff(i));
    return Poly(*field_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return Poly(*field_);
    std::vector<FieldElem> out(coeffs_.size() + rhs.coeffs_.size() - 1, field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(*field_, std::move(out));
}

Poly Poly::operator*(const FieldElem& c) const {
    std::vector<FieldElem> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return Poly(*field_, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * coeffs_.back().inverse();
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem acc = x.field().zero();
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const FieldElem& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        const bool unit = c.is_one();
        if (i == 0 || !unit) {
            if (field_->degree() == 1)
                s += std::to_string(c.coeffs()[0]);
            else
                s += c.str();
            if (i > 0) s += "*";
        }
        if (i >= 1) {
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const FiniteField& F = a.field();
    std::vector<FieldElem> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {Poly(F), a};
    std::vector<FieldElem> quo(a.degree() - db + 1, F.zero());
    const FieldElem lead_inv = b.lead().inverse();
    for (int i = a.degree(); i >= db; --i) {
        FieldElem c = rem[i] * lead_inv;
        if (c.is_zero()) continue;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeff(j);
    }
    return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly derivative(const Poly& f) {
    const FiniteField& F = f.field();
    if (f.degree() < 1) return Poly(F);
    std::vector<FieldElem> out;
    out.reserve(f.degree());
    for (int i = 1; i <= f.degree(); ++i)
        out.push_back(f.coeff(i) * F.from_int(static_cast<uint64_t>(i)));
    return Poly(F, std::move(out));
}

Poly poly_powmod(const Poly& base, uint64_t e, const Poly& m) {
    Poly result = Poly::one(base.field());
    Poly b = poly_divmod(base, m).second;
    while (e > 0) {
        if (e & 1) result = poly_divmod(result * b, m).second;
        b = poly_divmod(b * b, m).second;
        e >>= 1;
    }
    return result;
}

Poly poly_frobenius_powmod(const Poly& base, uint32_t e, const Poly& m) {
    const uint32_t p = base.field().characteristic();
    Poly x = poly_divmod(base, m).second;
    for (uint32_t i = 0; i < e; ++i) x = poly_powmod(x, p, m);
    return x;
}

std::vector<std::pair<uint32_t, uint32_t>> irreducible_factor_degrees(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("factor degrees need a non-constant polynomial");
    const FiniteField& F = f.field();
    const Poly fm = f.monic();
    const Poly t = Poly::t(F);

    // h_d = gcd(f, t^{q^d} - t) picks up each distinct irreducible factor of
    // degree dividing d exactly once, so squarefreeness is not required.
    std::vector<std::pair<uint32_t, uint32_t>> out;
    Poly frob = poly_divmod(t, fm).second;  // t^{q^d} mod f, running
    std::vector<Poly> found_by_degree;      // product of factors of degree exactly d, index d-1
    Poly remaining = fm;
    for (uint32_t d = 1; d <= static_cast<uint32_t>(fm.degree()); ++d) {
        if (remaining.degree() < 1) break;
        frob = poly_frobenius_powmod(frob, F.degree(), fm);
        Poly h = poly_gcd(remaining, frob - t);
        if (h.degree() >= 1) {
            if (h.degree() % d != 0) throw std::logic_error("distinct-degree split inconsistent");
            out.push_back({d, static_cast<uint32_t>(h.degree()) / d});
            // strip these factors (and any repetitions) from the remainder
            Poly g = h;
            while (g.degree() >= 1) {
                remaining = poly_divmod(remaining, g).first;
                g = poly_gcd(remaining, h);
            }
        }
        if (remaining.degree() >= 1 &&
            static_cast<uint32_t>(remaining.degree()) < 2 * (d + 1)) {
            // what is left is a single irreducible of degree > d
            out.push_back({static_cast<uint32_t>(remaining.degree()), 1});
            remaining = Poly::one(F);
            break;
        }
    }
    return out;
}

bool poly_is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    auto degs = irreducible_factor_degrees(f);
    // A repeated factor shows up as total degree mismatch, so one distinct
    // factor of full degree is exactly irreducibility.
    return degs.size() == 1 && degs[0].second == 1 &&
           degs[0].first == static_cast<uint32_t>(f.degree());
}

namespace {

// Splits a monic product of distinct linear factors into roots.
void split_linear_product(const Poly& g, std::vector<FieldElem>& roots, std::mt19937_64& rng) {
    const FiniteField& K = g.field();
    if (g.degree() == 0) return;
    if (g.degree() == 1) {
        roots.push_back(-g.coeff(0));
        return;
    }
    const uint32_t p = K.characteristic();
    const uint32_t n = K.degree();
    Poly splitter(K);
    while (true) {
        std::vector<uint32_t> cs(n);
        for (auto& c : cs) c = static_cast<uint32_t>(rng() % p);
        const FieldElem delta = K.from_coeffs(cs);
        if (p == 2) {
            // trace map: sum of (delta*t)^{2^i} mod g
            Poly x = poly_divmod(Poly::t(K) * delta, g).second;
            Poly tr = x;
            for (uint32_t i = 1; i < n; ++i) {
                x = poly_powmod(x, 2, g);
                tr = tr + x;
            }
            splitter = tr;
        } else {
            // (t+delta)^{(|K|-1)/2} - 1 via the norm chain
            // (|K|-1)/2 = ((p-1)/2) * (1 + p + ... + p^{n-1})
            Poly base = poly_divmod(Poly::t(K) + Poly::constant(delta), g).second;
            Poly z = base;
            for (uint32_t i = 1; i < n; ++i)
                z = poly_divmod(poly_powmod(z, p, g) * base, g).second;
            splitter = poly_powmod(z, (p - 1) / 2, g) - Poly::one(K);
        }
        Poly h = poly_gcd(g, splitter);
        if (h.degree() >= 1 && h.degree() < g.degree()) {
            split_linear_product(h, roots, rng);
            split_linear_product(poly_divmod(g, h).first, roots, rng);
            return;
        }
    }
}

}  // namespace

std::vector<FieldElem> roots_in_field(const Poly& f, uint64_t scan_limit) {
    if (f.is_zero()) throw std::invalid_argument("root finding on the zero polynomial");
    const FiniteField& K = f.field();
    std::vector<FieldElem> distinct;

    if (K.size() != 0 && K.size() <= scan_limit) {
        for (uint64_t i = 0; i < K.size(); ++i) {
            FieldElem x = K.element(i);
            if (f.eval(x).is_zero()) distinct.push_back(x);
        }
    } else if (f.degree() >= 1) {
        // g = gcd(f, t^{|K|} - t) collects the distinct roots in K
        const Poly fm = f.monic();
        const Poly t = Poly::t(K);
        Poly frob = poly_frobenius_powmod(t, K.degree(), fm);
        Poly g = poly_gcd(fm, frob - t);
        std::mt19937_64 rng(0x636c75737465ULL);
        split_linear_product(g, distinct, rng);
    }

    std::sort(distinct.begin(), distinct.end());
    std::vector<FieldElem> out;
    for (const auto& r : distinct) {
        Poly rest = f;
        const Poly lin = Poly::linear(r);
        while (true) {
            auto [q, rem] = poly_divmod(rest, lin);
            if (!rem.is_zero()) break;
            out.push_back(r);
            rest = q;
        }
    }
    return out;
}

}  // namespace clusterkit
