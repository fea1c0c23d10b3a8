#include "clusterkit/induction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "clusterkit/embedding.hpp"
#include "clusterkit/errors.hpp"

namespace clusterkit {

bool restricts_simply(const Cluster& C, const Subalgebra& S) {
    if (!C.is_frobenius_closed())
        throw PreconditionError("cluster is not Frobenius closed");
    std::vector<Character> restrictions;
    restrictions.reserve(C.size());
    for (const auto& c : C.chars()) restrictions.push_back(c.restrict_to(S.indices));
    std::sort(restrictions.begin(), restrictions.end());
    return std::adjacent_find(restrictions.begin(), restrictions.end()) == restrictions.end();
}

Cluster extend_character(const Subalgebra& S, const Character& c_S,
                         const std::vector<FieldElem>& cobasis_values) {
    const LieAlgebra& L = *S.parent;
    const std::vector<size_t> cob = S.cobasis();
    if (c_S.size() != S.indices.size())
        throw std::invalid_argument("character length must match the subalgebra dimension");
    if (cobasis_values.size() != cob.size())
        throw std::invalid_argument("one cobasis value per cobasis element required");

    const FiniteField& K = c_S.splitting_field();
    const uint32_t d = c_S.field_degree();
    for (const auto& v : cobasis_values) {
        if (&v.field() != &K)
            throw std::invalid_argument("cobasis values must live in the character's field");
        if (!(frobenius(v, c_S.base_degree() * d) == v))
            throw PreconditionError("cobasis value lies outside the field generated by the character");
    }

    std::vector<FieldElem> values(L.dim(), K.zero());
    for (size_t a = 0; a < S.indices.size(); ++a) values[S.indices[a]] = c_S.value(a);
    for (size_t b = 0; b < cob.size(); ++b) values[cob[b]] = cobasis_values[b];

    Character c(std::move(values), c_S.base_degree());
    std::vector<Character> orbit;
    Character cur = c;
    do {
        orbit.push_back(cur);
        cur = cur.conjugate();
    } while (!(cur == c));
    return Cluster(std::move(orbit));
}

std::string InducedModule::label_str(size_t idx) const {
    const auto& [exps, j] = basis_labels[idx];
    const std::vector<size_t> cob = [&] {
        std::vector<size_t> out;
        for (size_t i = 0; i < module.algebra().dim(); ++i)
            if (std::find(subalgebra.begin(), subalgebra.end(), i) == subalgebra.end())
                out.push_back(i);
        return out;
    }();
    std::ostringstream os;
    bool any = false;
    for (size_t t = 0; t < exps.size(); ++t) {
        if (exps[t] == 0) continue;
        if (any) os << "*";
        os << module.algebra().names()[cob[t]];
        if (exps[t] > 1) os << "^" << exps[t];
        any = true;
    }
    if (!any) os << "1";
    os << "(x)b" << (j + 1);
    return os.str();
}

namespace {

// Exponent tuples with entries < p, ascending lexicographic (leftmost digit
// most significant), as the PBW basis ordering.
std::vector<std::vector<uint32_t>> exponent_tuples(size_t m, uint32_t p) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(m, 0);
    while (true) {
        out.push_back(cur);
        size_t pos = m;
        while (pos > 0 && cur[pos - 1] == p - 1) cur[--pos] = 0;
        if (pos == 0) break;
        ++cur[pos - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Straightens products in the reduced enveloping algebra over a working
// field K': terms are (cobasis exponent tuple, vector in K'^{dW}) and a
// generator is an F-rational element of L. The same engine serves both the
// per-character construction over the splitting field and the rational
// shortcut over F itself.
class Straightener {
public:
    using State = std::map<std::vector<uint32_t>, Vec>;

    Straightener(const LieAlgebra& L, const Subalgebra& S, std::vector<Matrix> sub_action,
                 std::vector<FieldElem> cobasis_pth_values, const Embedding& emb)
        : L_(L),
          sub_(S.indices),
          cob_(S.cobasis()),
          action_(std::move(sub_action)),
          cob_pth_(std::move(cobasis_pth_values)),
          emb_(emb),
          p_(L.field().characteristic()) {}

    // action of the ambient basis element with index li on a single term
    State act_basis(size_t li, const std::vector<uint32_t>& exps, const Vec& w) const {
        auto spos = std::find(sub_.begin(), sub_.end(), li);
        if (spos != sub_.end()) return act_sub(static_cast<size_t>(spos - sub_.begin()), exps, w);
        auto cpos = std::find(cob_.begin(), cob_.end(), li);
        return act_cob(static_cast<size_t>(cpos - cob_.begin()), exps, w);
    }

    // linear extension to an F-rational vector of L and a whole state
    State act_vector(const Vec& x, const State& s) const {
        State out;
        for (size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            const FieldElem c = emb_.map(x[i]);
            for (const auto& [exps, w] : s) {
                State part = act_basis(i, exps, w);
                for (auto& [e2, w2] : part) add_term(out, e2, vec_scale(c, w2));
            }
        }
        return out;
    }

private:
    static void add_term(State& s, const std::vector<uint32_t>& exps, const Vec& w) {
        auto it = s.find(exps);
        if (it == s.end())
            s.emplace(exps, w);
        else
            it->second = vec_add(it->second, w);
    }

    static State merge(State a, const State& b) {
        for (const auto& [e, w] : b) add_term(a, e, w);
        return a;
    }

    State single(std::vector<uint32_t> exps, Vec w) const {
        State s;
        s.emplace(std::move(exps), std::move(w));
        return s;
    }

    // multiply by the cobasis element at position j
    State act_cob(size_t j, const std::vector<uint32_t>& exps, const Vec& w) const {
        size_t j0 = exps.size();
        for (size_t t = 0; t < j; ++t)
            if (exps[t] > 0) {
                j0 = t;
                break;
            }
        if (j0 == exps.size()) {
            // slides directly onto its own power
            if (exps[j] + 1 < p_) {
                auto e2 = exps;
                ++e2[j];
                return single(std::move(e2), w);
            }
            // p-th power: e^p = e^{[p]} + c(e)^p in the reduced algebra
            auto e2 = exps;
            e2[j] = 0;
            State out = single(e2, vec_scale(cob_pth_[j], w));
            return merge(std::move(out), act_vector(L_.pmap_basis(cob_[j]), single(e2, w)));
        }
        // pass the earlier factor: f_j f_{j0} = f_{j0} f_j + [f_j, f_{j0}]
        auto reduced = exps;
        --reduced[j0];
        State inner = act_cob(j, reduced, w);
        State out;
        for (const auto& [e2, w2] : inner) out = merge(std::move(out), act_cob(j0, e2, w2));
        return merge(std::move(out),
                     act_vector(L_.bracket_basis(cob_[j], cob_[j0]), single(reduced, w)));
    }

    // multiply by the subalgebra basis element at position spos
    State act_sub(size_t spos, const std::vector<uint32_t>& exps, const Vec& w) const {
        size_t j0 = exps.size();
        for (size_t t = 0; t < exps.size(); ++t)
            if (exps[t] > 0) {
                j0 = t;
                break;
            }
        if (j0 == exps.size()) return single(exps, action_[spos].apply(w));
        auto reduced = exps;
        --reduced[j0];
        State inner = act_sub(spos, reduced, w);
        State out;
        for (const auto& [e2, w2] : inner) out = merge(std::move(out), act_cob(j0, e2, w2));
        return merge(std::move(out),
                     act_vector(L_.bracket_basis(sub_[spos], cob_[j0]), single(reduced, w)));
    }

    const LieAlgebra& L_;
    std::vector<size_t> sub_;
    std::vector<size_t> cob_;
    std::vector<Matrix> action_;      // W's action matrices over K'
    std::vector<FieldElem> cob_pth_;  // c(e_j)^p over K'
    const Embedding& emb_;
    uint32_t p_;
};

void check_induce_preconditions(const Subalgebra& S, const LieModule& W, const Cluster& C) {
    if (!S.is_bracket_closed() || !S.is_p_closed())
        throw PreconditionError("S is not a p-subalgebra");
    if (W.dim() == 0) throw std::invalid_argument("zero-dimensional module");
    if (!W.validate().ok()) throw PreconditionError("W is not a module over S");
    if (!is_amenable(W)) throw PreconditionError("W is not amenable");
    if (C.empty()) throw PreconditionError("empty inducing cluster");
    if (!C.is_frobenius_closed()) throw PreconditionError("cluster is not Frobenius closed");
    if (!restricts_simply(C, S)) throw PreconditionError("cluster does not restrict simply to S");
}

// cl(W) computed inside C's splitting field; throws when C's field cannot
// hold it.
Cluster cluster_of_w_in(const LieModule& W, const Cluster& C) {
    const uint32_t D_C = C[0].splitting_field().degree() / C[0].base_degree();
    try {
        return compute_cluster(W, D_C);
    } catch (const PreconditionError&) {
        throw PreconditionError("cluster restriction cannot match cl(W): wrong splitting field");
    }
}

// positions of S's indices inside the full index list define the
// restriction map used to compare C|S with cl(W)
std::vector<size_t> sub_positions(const Subalgebra& S) {
    std::vector<size_t> out(S.indices.size());
    for (size_t a = 0; a < S.indices.size(); ++a) out[a] = S.indices[a];
    return out;
}

InducedModule assemble(const Subalgebra& S, const LieModule& W, const Cluster& C,
                       std::vector<Matrix> action_over_F) {
    const LieAlgebra& L = *S.parent;
    const uint32_t p = L.field().characteristic();
    std::vector<std::pair<std::vector<uint32_t>, size_t>> labels;
    for (const auto& exps : exponent_tuples(S.cobasis().size(), p))
        for (size_t j = 0; j < W.dim(); ++j) labels.emplace_back(exps, j);

    LieModule module(S.parent, std::move(action_over_F));
    if (!module.validate().ok())
        throw InternalError("induced action does not satisfy the bracket relations");
    const uint32_t D_C = C[0].splitting_field().degree() / C[0].base_degree();
    if (compute_cluster(module, D_C) != C)
        throw InternalError("induced module cluster differs from the inducing cluster");
    return InducedModule{std::move(module), std::move(labels), C, S.indices};
}

}  // namespace

InducedModule induce(const Subalgebra& S, const LieModule& W, const Cluster& C) {
    check_induce_preconditions(S, W, C);
    const LieAlgebra& L = *S.parent;
    const FiniteField& F = L.field();
    const uint32_t p = F.characteristic();
    const FiniteField& K = C[0].splitting_field();
    Embedding emb(F, K);

    if (cluster_of_w_in(W, C) != C.restrict_to(sub_positions(S)))
        throw PreconditionError("C|S differs from cl(W)");

    // component of each c in C: the joint eigenspace of the phi family of W
    // over K (plain kernels; amenability makes them exact eigenspaces)
    const size_t dW = W.dim();
    std::vector<Matrix> components;
    for (const auto& c : C.chars()) {
        Matrix basis = Matrix::identity(K, dW);
        for (size_t a = 0; a < S.indices.size(); ++a) {
            Matrix phiK = emb.map_matrix(W.phi_basis(a));
            Matrix shifted = phiK - Matrix::identity(K, dW) * c.value(S.indices[a]).pow(p);
            basis = intersect_column_spaces(basis, kernel(shifted));
        }
        if (basis.cols() == 0)
            throw InternalError("character component of W is empty");
        components.push_back(std::move(basis));
    }

    // per-character straightening over K
    const std::vector<size_t> cob = S.cobasis();
    const auto tuples = exponent_tuples(cob.size(), p);
    std::map<std::vector<uint32_t>, size_t> tuple_rank;
    for (size_t t = 0; t < tuples.size(); ++t) tuple_rank[tuples[t]] = t;

    std::vector<Matrix> actionK_sub;
    for (size_t a = 0; a < S.indices.size(); ++a) actionK_sub.push_back(emb.map_matrix(W.action(a)));

    const size_t total = dW * tuples.size();
    std::vector<Matrix> big(L.dim(), Matrix(K, total, total));

    // global basis: per character block, per tuple, per component column
    std::vector<size_t> block_offset;
    size_t off = 0;
    for (const auto& comp : components) {
        block_offset.push_back(off);
        off += comp.cols() * tuples.size();
    }
    if (off != total) throw InternalError("component dimensions do not sum to dim W");

    for (size_t ci = 0; ci < C.size(); ++ci) {
        const Character& c = C[ci];
        const Matrix& comp = components[ci];
        std::vector<FieldElem> cob_pth;
        for (size_t b : cob) cob_pth.push_back(c.value(b).pow(p));
        Straightener engine(L, S, actionK_sub, cob_pth, emb);

        auto global_index = [&](size_t tuple_idx, size_t col) {
            return block_offset[ci] + tuple_idx * comp.cols() + col;
        };

        for (size_t x = 0; x < L.dim(); ++x) {
            for (size_t t = 0; t < tuples.size(); ++t)
                for (size_t col = 0; col < comp.cols(); ++col) {
                    Straightener::State s =
                        engine.act_basis(x, tuples[t], comp.col(col));
                    for (const auto& [exps, w] : s) {
                        auto coords = solve(comp, Matrix::from_cols(K, {w}));
                        if (!coords)
                            throw InternalError("straightened vector left its character component");
                        const size_t tr = tuple_rank.at(exps);
                        for (size_t row = 0; row < comp.cols(); ++row)
                            big[x].at(global_index(tr, row), global_index(t, col)) +=
                                coords->at(row, 0);
                    }
                }
        }
    }

    // change of basis to the labelled F-form e(r) ⊗ b^j: the union of the
    // component bases expresses b^j = sum of its character components
    Matrix T(K, dW, 0);
    for (const auto& comp : components) T = T.hcat(comp);
    Matrix U = inverse(T);  // coordinates of b^j in the union basis

    Matrix P(K, total, total);
    for (size_t t = 0; t < tuples.size(); ++t)
        for (size_t j = 0; j < dW; ++j) {
            const size_t target = t * dW + j;
            size_t seen = 0;
            for (size_t ci = 0; ci < components.size(); ++ci) {
                for (size_t col = 0; col < components[ci].cols(); ++col) {
                    P.at(block_offset[ci] + t * components[ci].cols() + col, target) =
                        U.at(seen + col, j);
                }
                seen += components[ci].cols();
            }
        }
    Matrix Pinv = inverse(P);

    std::vector<Matrix> actionF;
    for (size_t x = 0; x < L.dim(); ++x) {
        Matrix inF = Pinv * big[x] * P;
        auto descended = emb.preimage_matrix(inF);
        if (!descended)
            throw InternalError("induced action entry lies outside the base field");
        actionF.push_back(std::move(*descended));
    }
    return assemble(S, W, C, std::move(actionF));
}

InducedModule induce_rational(const Subalgebra& S, const LieModule& W, const Cluster& C) {
    check_induce_preconditions(S, W, C);
    const LieAlgebra& L = *S.parent;
    const FiniteField& F = L.field();
    const uint32_t p = F.characteristic();
    const FiniteField& K = C[0].splitting_field();
    Embedding emb(F, K);

    if (cluster_of_w_in(W, C) != C.restrict_to(sub_positions(S)))
        throw PreconditionError("C|S differs from cl(W)");

    // all cobasis values must be rational, and conjugate characters then
    // share them
    const std::vector<size_t> cob = S.cobasis();
    std::vector<FieldElem> cob_pth;
    for (size_t b : cob) {
        auto v = emb.preimage(C[0].value(b));
        if (!v) throw PreconditionError("rational shortcut needs cobasis values in the base field");
        for (const auto& c : C.chars())
            if (!(c.value(b) == C[0].value(b)))
                throw PreconditionError("conjugates disagree on a cobasis value");
        cob_pth.push_back(v->pow(p));
    }

    Embedding id(F, F);
    Straightener engine(L, S, W.actions(), cob_pth, id);

    const auto tuples = exponent_tuples(cob.size(), p);
    std::map<std::vector<uint32_t>, size_t> tuple_rank;
    for (size_t t = 0; t < tuples.size(); ++t) tuple_rank[tuples[t]] = t;
    const size_t dW = W.dim();
    const size_t total = dW * tuples.size();

    std::vector<Matrix> actionF(L.dim(), Matrix(F, total, total));
    for (size_t x = 0; x < L.dim(); ++x)
        for (size_t t = 0; t < tuples.size(); ++t)
            for (size_t j = 0; j < dW; ++j) {
                Vec unit = vec_zero(F, dW);
                unit[j] = F.one();
                Straightener::State s = engine.act_basis(x, tuples[t], unit);
                for (const auto& [exps, w] : s) {
                    const size_t tr = tuple_rank.at(exps);
                    for (size_t row = 0; row < dW; ++row)
                        actionF[x].at(tr * dW + row, t * dW + j) += w[row];
                }
            }
    return assemble(S, W, C, std::move(actionF));
}

}  // namespace clusterkit
