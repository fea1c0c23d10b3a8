#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/field.hpp"
#include "clusterkit/poly.hpp"

namespace clusterkit {

// Coordinate vector over a FiniteField.
using Vec = std::vector<FieldElem>;

Vec vec_zero(const FiniteField& F, size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const FieldElem& c, const Vec& a);
bool vec_is_zero(const Vec& a);

// Dense rectangular matrix over one FiniteField, row-major storage.
class Matrix {
public:
    Matrix() : field_(nullptr), rows_(0), cols_(0) {}
    Matrix(const FiniteField& field, size_t rows, size_t cols);

    static Matrix identity(const FiniteField& field, size_t n);
    static Matrix from_rows(const FiniteField& field, const std::vector<std::vector<FieldElem>>& rows);
    static Matrix from_cols(const FiniteField& field, const std::vector<Vec>& cols);
    static Matrix from_ints(const FiniteField& field, const std::vector<std::vector<int64_t>>& rows);

    const FiniteField& field() const { return *field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    FieldElem& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const FieldElem& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator*(const FieldElem& c) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix pow(uint64_t e) const;
    Matrix transposed() const;
    bool is_zero() const;
    bool is_scalar(FieldElem* value = nullptr) const;  // c * identity
    Vec col(size_t c) const;
    void set_col(size_t c, const Vec& v);
    Matrix cols_slice(const std::vector<size_t>& idx) const;
    // append columns of B on the right
    Matrix hcat(const Matrix& B) const;

    // Lexicographic comparison of the flattened entry list; a deterministic
    // total order used for tie-breaking.
    bool lex_less(const Matrix& rhs) const;

    std::string str() const;

private:
    const FiniteField* field_;
    size_t rows_, cols_;
    std::vector<FieldElem> data_;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<size_t> rref_in_place(Matrix& A);

size_t rank(const Matrix& A);

// Canonical basis of the null space {v : Av = 0} as matrix columns: one
// column per free column of rref(A), ascending, unit at the free index.
Matrix kernel(const Matrix& A);

// Canonical basis of the column space: reduced column echelon form with
// pivot rows ascending. Unique for a given span.
Matrix column_space(const Matrix& A);

// Solve A X = B exactly; nullopt when inconsistent. When A has full column
// rank the solution is unique.
std::optional<Matrix> solve(const Matrix& A, const Matrix& B);

Matrix inverse(const Matrix& A);

// basis of colspace(A) ∩ colspace(B)
Matrix intersect_column_spaces(const Matrix& A, const Matrix& B);

bool in_column_space(const Matrix& basis, const Vec& v);

// Monic minimal polynomial, by scanning I, A, A^2, ... for the first linear
// dependence.
Poly min_poly(const Matrix& A);

// Evaluate p at the matrix A.
Matrix eval_poly(const Poly& p, const Matrix& A);

// (basis of ker A^r, r) where r is minimal with ker A^r = ker A^{r+1}.
std::pair<Matrix, size_t> stable_kernel(const Matrix& A);

}  // namespace clusterkit
