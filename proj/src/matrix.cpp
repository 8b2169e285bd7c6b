#include "hopfcheck/matrix.hpp"

#include "hopfcheck/errors.hpp"

namespace hopfcheck {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

void axpy(Vector& y, const Scalar& a, const Vector& x)
{
    if (y.size() != x.size()) throw ShapeError("axpy: length mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i].add_product(a, x[i]);
}

Vector operator+(const Vector& a, const Vector& b)
{
    Vector r = a;
    axpy(r, Scalar(1), b);
    return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
    Vector r = a;
    axpy(r, Scalar(-1), b);
    return r;
}

Vector operator*(const Scalar& a, const Vector& x)
{
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) r[i] = a * x[i];
    return r;
}

Vector conj(const Vector& v)
{
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].conj();
    return r;
}

Scalar dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
    return s;
}

int field_order(const Vector& v)
{
    int n = 1;
    for (const auto& x : v)
        if (!x.is_rational()) n = common_order(n, x.order());
    return n;
}

int compare(const Vector& a, const Vector& b)
{
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = a[i].compare(b[i]);
        if (c) return c;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::col(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const Vector& v)
{
    if (v.size() != cols_) throw ShapeError("set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vector& v)
{
    if (v.size() != rows_) throw ShapeError("set_col: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::conj() const
{
    Matrix c = *this;
    for (auto& x : c.data_) x = x.conj();
    return c;
}

Vector Matrix::apply(const Vector& x) const
{
    if (x.size() != cols_) throw ShapeError("apply: dimension mismatch");
    Vector y(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = (*this)(i, j);
            if (!a.is_zero()) y[i].add_product(a, x[j]);
        }
    }
    return y;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

int Matrix::field_order() const { return hopfcheck::field_order(data_); }

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) c(i, j).add_product(x, y);
            }
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& a)
{
    Matrix c = a;
    for (auto& x : c.data_)
        if (!x.is_zero()) x = s * x;
    return c;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i]) return false;
    return true;
}

Echelon rref(const Matrix& a)
{
    Matrix m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = -m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j).add_product(f, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix kernel_basis(const Matrix& a)
{
    Echelon e = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    // The free-variable basis is not echelon in general; normalize it.
    return rref(Matrix::from_rows(basis, n)).reduced;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows()) throw ShapeError("solve_linear: row count mismatch");
    common_order(a.field_order(), b.field_order());
    const std::size_t n = a.cols(), k = b.cols();
    Matrix aug(a.rows(), n + k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
    }
    Echelon e = rref(aug);
    Matrix x(n, k);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) return std::nullopt;
        for (std::size_t j = 0; j < k; ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& a)
{
    if (a.rows() != a.cols()) throw ShapeError("inverse: matrix is not square");
    if (rank(a) != a.rows()) return std::nullopt;
    return solve_linear(a, Matrix::identity(a.rows()));
}

}  // namespace hopfcheck
