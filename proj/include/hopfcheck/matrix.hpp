#ifndef HOPFCHECK_MATRIX_HPP
#define HOPFCHECK_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfcheck/cyclotomic.hpp"

namespace hopfcheck {

using Scalar = Cyclotomic;
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& a, const Vector& x);
Vector conj(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
// Largest field order occurring in v (1 if all rational).
int field_order(const Vector& v);
// Lexicographic total order on vectors, for deterministic sorting.
int compare(const Vector& a, const Vector& b);

// Dense row-major matrix. Linear maps act on column vectors: column j of
// the matrix of f is f(e_j).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    void set_row(std::size_t i, const Vector& v);
    void set_col(std::size_t j, const Vector& v);

    Matrix transpose() const;
    Matrix conj() const;
    Vector apply(const Vector& x) const;
    bool is_zero() const;
    bool is_identity() const;
    int field_order() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                   // reduced row-echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row, strictly increasing
};

// Exact Gauss-Jordan elimination.
Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
// Basis (as rows, in reduced echelon form) of {x : a x = 0}.
Matrix kernel_basis(const Matrix& a);
// Some X with a X = b, free variables set to zero; nullopt if inconsistent.
// Throws FieldMismatch when a and b live in incompatible fields.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace hopfcheck

#endif
