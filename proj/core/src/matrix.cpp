#include "clusterkit/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace clusterkit {

Vec vec_zero(const FiniteField& F, size_t n) { return Vec(n, F.zero()); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

Vec vec_scale(const FieldElem& c, const Vec& a) {
    Vec out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(c * x);
    return out;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const FieldElem& x) { return x.is_zero(); });
}

Matrix::Matrix(const FiniteField& field, size_t rows, size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const FiniteField& field, size_t n) {
    Matrix I(field, n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = field.one();
    return I;
}

Matrix Matrix::from_rows(const FiniteField& field, const std::vector<std::vector<FieldElem>>& rows) {
    const size_t r = rows.size();
    const size_t c = r == 0 ? 0 : rows.front().size();
    Matrix A(field, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < c; ++j) A.at(i, j) = rows[i][j];
    }
    return A;
}

Matrix Matrix::from_cols(const FiniteField& field, const std::vector<Vec>& cols) {
    const size_t c = cols.size();
    const size_t r = c == 0 ? 0 : cols.front().size();
    Matrix A(field, r, c);
    for (size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw std::invalid_argument("ragged matrix columns");
        for (size_t i = 0; i < r; ++i) A.at(i, j) = cols[j][i];
    }
    return A;
}

Matrix Matrix::from_ints(const FiniteField& field, const std::vector<std::vector<int64_t>>& rows) {
    const int64_t p = field.characteristic();
    std::vector<std::vector<FieldElem>> conv;
    conv.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<FieldElem> r;
        r.reserve(row.size());
        for (int64_t v : row) r.push_back(field.from_int(static_cast<uint64_t>(((v % p) + p) % p)));
        conv.push_back(std::move(r));
    }
    return from_rows(field, conv);
}

namespace {
void check_same(const Matrix& a, const Matrix& b) {
    if (&a.field() != &b.field()) throw std::invalid_argument("matrix field mismatch");
}
}  // namespace

Matrix Matrix::operator+(const Matrix& rhs) const {
    check_same(*this, rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(*field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    check_same(*this, rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(*field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    check_same(*this, rhs);
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(*field_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const FieldElem& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

Matrix Matrix::operator*(const FieldElem& c) const {
    Matrix out(*field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec out = vec_zero(*field_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Matrix Matrix::pow(uint64_t e) const {
    if (!is_square()) throw std::invalid_argument("matrix power needs a square matrix");
    Matrix result = identity(*field_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Matrix Matrix::transposed() const {
    Matrix out(*field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const FieldElem& x) { return x.is_zero(); });
}

bool Matrix::is_scalar(FieldElem* value) const {
    if (!is_square()) return false;
    if (rows_ == 0) return true;
    const FieldElem& d = at(0, 0);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j && !(at(i, j) == d)) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    if (value) *value = d;
    return true;
}

Vec Matrix::col(size_t c) const {
    Vec out;
    out.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) out.push_back(at(i, c));
    return out;
}

void Matrix::set_col(size_t c, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("column size mismatch");
    for (size_t i = 0; i < rows_; ++i) at(i, c) = v[i];
}

Matrix Matrix::cols_slice(const std::vector<size_t>& idx) const {
    Matrix out(*field_, rows_, idx.size());
    for (size_t j = 0; j < idx.size(); ++j)
        for (size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
    return out;
}

Matrix Matrix::hcat(const Matrix& B) const {
    check_same(*this, B);
    if (rows_ != B.rows_) throw std::invalid_argument("hcat row mismatch");
    Matrix out(*field_, rows_, cols_ + B.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (size_t j = 0; j < B.cols_; ++j) out.at(i, cols_ + j) = B.at(i, j);
    }
    return out;
}

bool Matrix::lex_less(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
        return cols_ < rhs.cols_;
    }
    for (size_t i = 0; i < data_.size(); ++i) {
        if (data_[i] < rhs.data_[i]) return true;
        if (rhs.data_[i] < data_[i]) return false;
    }
    return false;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).str();
        }
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) os << "[]";
    return os.str();
}

std::vector<size_t> rref_in_place(Matrix& A) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        size_t sel = row;
        while (sel < A.rows() && A.at(sel, col).is_zero()) ++sel;
        if (sel == A.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < A.cols(); ++j) std::swap(A.at(sel, j), A.at(row, j));
        const FieldElem inv = A.at(row, col).inverse();
        for (size_t j = col; j < A.cols(); ++j) A.at(row, j) = A.at(row, j) * inv;
        for (size_t i = 0; i < A.rows(); ++i) {
            if (i == row || A.at(i, col).is_zero()) continue;
            const FieldElem f = A.at(i, col);
            for (size_t j = col; j < A.cols(); ++j) A.at(i, j) -= f * A.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(const Matrix& A) {
    Matrix B = A;
    return rref_in_place(B).size();
}

Matrix kernel(const Matrix& A) {
    Matrix R = A;
    const std::vector<size_t> pivots = rref_in_place(R);
    std::vector<bool> is_pivot(A.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    const FiniteField& F = A.field();
    for (size_t free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = vec_zero(F, A.cols());
        v[free] = F.one();
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R.at(i, free);
        basis.push_back(std::move(v));
    }
    return Matrix::from_cols(F, basis);
}

Matrix column_space(const Matrix& A) {
    Matrix T = A.transposed();
    std::vector<size_t> pivots = rref_in_place(T);
    Matrix out(A.field(), A.rows(), pivots.size());
    for (size_t j = 0; j < pivots.size(); ++j)
        for (size_t i = 0; i < A.rows(); ++i) out.at(i, j) = T.at(j, i);
    return out;
}

std::optional<Matrix> solve(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("solve shape mismatch");
    Matrix aug = A.hcat(B);
    const std::vector<size_t> pivots = rref_in_place(aug);
    for (size_t c : pivots)
        if (c >= A.cols()) return std::nullopt;  // inconsistent system
    // Free variables are set to zero.
    Matrix X(A.field(), A.cols(), B.cols());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < B.cols(); ++j) X.at(pivots[i], j) = aug.at(i, A.cols() + j);
    return X;
}

Matrix inverse(const Matrix& A) {
    if (!A.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    auto X = solve(A, Matrix::identity(A.field(), A.rows()));
    if (!X || rank(A) != A.rows()) throw std::domain_error("matrix is singular");
    return *X;
}

Matrix intersect_column_spaces(const Matrix& A, const Matrix& B) {
    if (A.cols() == 0 || B.cols() == 0) return Matrix(A.field(), A.rows(), 0);
    Matrix K = kernel(A.hcat(B));
    std::vector<size_t> first(A.cols());
    for (size_t i = 0; i < A.cols(); ++i) first[i] = i;
    Matrix X(A.field(), A.cols(), K.cols());
    for (size_t i = 0; i < A.cols(); ++i)
        for (size_t j = 0; j < K.cols(); ++j) X.at(i, j) = K.at(i, j);
    return column_space(A * X);
}

bool in_column_space(const Matrix& basis, const Vec& v) {
    Matrix rhs = Matrix::from_cols(basis.field(), {v});
    return solve(basis, rhs).has_value();
}

Poly min_poly(const Matrix& A) {
    if (!A.is_square()) throw std::invalid_argument("minimal polynomial of non-square matrix");
    const FiniteField& F = A.field();
    const size_t d = A.rows();
    if (d == 0) return Poly::one(F);

    // Stack vec(A^j) as columns and look for the first linear dependence.
    std::vector<Vec> powers;
    Matrix P = Matrix::identity(F, d);
    for (size_t j = 0;; ++j) {
        Vec flat;
        flat.reserve(d * d);
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c) flat.push_back(P.at(r, c));
        Matrix lhs = Matrix::from_cols(F, powers);
        Matrix rhs = Matrix::from_cols(F, {flat});
        if (j > 0) {
            if (auto x = solve(lhs, rhs)) {
                std::vector<FieldElem> coeffs;
                coeffs.reserve(j + 1);
                for (size_t i = 0; i < j; ++i) coeffs.push_back(-x->at(i, 0));
                coeffs.push_back(F.one());
                return Poly(F, std::move(coeffs));
            }
        }
        powers.push_back(std::move(flat));
        P = P * A;
        if (j > d) throw std::logic_error("minimal polynomial scan exceeded dimension bound");
    }
}

Matrix eval_poly(const Poly& p, const Matrix& A) {
    if (!A.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
    const FiniteField& F = A.field();
    Matrix acc(F, A.rows(), A.rows());
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * A;
        if (!p.coeffs()[i].is_zero()) {
            for (size_t r = 0; r < A.rows(); ++r) acc.at(r, r) += p.coeffs()[i];
        }
    }
    return acc;
}

std::pair<Matrix, size_t> stable_kernel(const Matrix& A) {
    if (!A.is_square()) throw std::invalid_argument("stable kernel of non-square matrix");
    Matrix power = A;
    Matrix ker = kernel(power);
    size_t r = 1;
    while (true) {
        Matrix next_power = power * A;
        Matrix next_ker = kernel(next_power);
        if (next_ker.cols() == ker.cols()) return {ker, r};
        power = std::move(next_power);
        ker = std::move(next_ker);
        ++r;
        if (r > A.rows() + 1) throw std::logic_error("stable kernel failed to stabilize");
    }
}

}  // namespace clusterkit
