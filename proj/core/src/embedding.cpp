#include "clusterkit/embedding.hpp"

#include <stdexcept>

namespace clusterkit {

Embedding::Embedding(const FiniteField& from, const FiniteField& to) : from_(&from), to_(&to) {
    if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
        throw std::invalid_argument("no embedding between these fields");

    const uint32_t m = from.degree();
    if (&from == &to) {
        for (uint32_t i = 0; i < m; ++i) gen_powers_.push_back(to.gen().pow(i));
    } else {
        // image of the small generator: smallest root of the small modulus in K
        Poly mod_in_to = Poly::from_ints(to, std::vector<int64_t>(from.modulus().begin(), from.modulus().end()));
        std::vector<FieldElem> roots = clusterkit::roots_in_field(mod_in_to);
        if (roots.empty()) throw std::logic_error("modulus has no root in the extension");
        const FieldElem alpha = roots.front();
        FieldElem power = to.one();
        for (uint32_t i = 0; i < m; ++i) {
            gen_powers_.push_back(power);
            power = power * alpha;
        }
    }

    // GF(p)-linear coordinate matrix: column i = coefficients of gen_powers_[i]
    const auto& GFp = make_field(to.characteristic(), 1);
    coord_map_ = Matrix(GFp, to.degree(), m);
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = 0; j < to.degree(); ++j)
            coord_map_.at(j, i) = GFp.from_int(gen_powers_[i].coeffs()[j]);
}

FieldElem Embedding::map(const FieldElem& a) const {
    if (&a.field() != from_) throw std::invalid_argument("element not in the source field");
    FieldElem out = to_->zero();
    for (size_t i = 0; i < gen_powers_.size(); ++i) {
        const uint32_t c = a.coeffs()[i];
        if (c != 0) out += gen_powers_[i] * to_->from_int(c);
    }
    return out;
}

Matrix Embedding::map_matrix(const Matrix& A) const {
    Matrix out(*to_, A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) out.at(i, j) = map(A.at(i, j));
    return out;
}

Poly Embedding::map_poly(const Poly& f) const {
    std::vector<FieldElem> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(map(c));
    return Poly(*to_, std::move(cs));
}

std::optional<FieldElem> Embedding::preimage(const FieldElem& a) const {
    if (&a.field() != to_) throw std::invalid_argument("element not in the target field");
    if (from_ == to_) return a;
    const auto& GFp = make_field(to_->characteristic(), 1);
    Matrix rhs(GFp, to_->degree(), 1);
    for (uint32_t j = 0; j < to_->degree(); ++j) rhs.at(j, 0) = GFp.from_int(a.coeffs()[j]);
    auto x = solve(coord_map_, rhs);
    if (!x) return std::nullopt;
    std::vector<uint32_t> cs(from_->degree());
    for (uint32_t i = 0; i < from_->degree(); ++i) cs[i] = x->at(i, 0).coeffs()[0];
    return from_->from_coeffs(std::move(cs));
}

std::optional<Matrix> Embedding::preimage_matrix(const Matrix& A) const {
    Matrix out(*from_, A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) {
            auto v = preimage(A.at(i, j));
            if (!v) return std::nullopt;
            out.at(i, j) = *v;
        }
    return out;
}

std::vector<FieldElem> roots_in_field(const Poly& f, const FiniteField& K) {
    if (&f.field() == &K) return roots_in_field(f);
    Embedding emb(f.field(), K);
    return roots_in_field(emb.map_poly(f));
}

}  // namespace clusterkit
