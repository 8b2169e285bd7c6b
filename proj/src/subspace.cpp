#include "hopfcheck/subspace.hpp"

#include "hopfcheck/errors.hpp"

namespace hopfcheck {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim)
{
    for (const auto& v : vectors)
        if (v.size() != ambient_dim) throw ShapeError("Subspace::span: vector length mismatch");
    return span(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::span(const Matrix& rows)
{
    Echelon e = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

Subspace Subspace::kernel(const Matrix& a)
{
    Subspace s;
    s.ambient_ = a.cols();
    s.basis_ = kernel_basis(a);
    Echelon e = rref(s.basis_);
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::image(const Matrix& a) { return span(a.transpose()); }

std::vector<Vector> Subspace::basis_vectors() const
{
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
}

Vector Subspace::reduce(const Vector& v) const
{
    if (v.size() != ambient_) throw ShapeError("Subspace: vector length mismatch");
    Vector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Scalar c = r[pivots_[i]];
        if (c.is_zero()) continue;
        c = -c;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (!basis_(i, j).is_zero()) r[j].add_product(c, basis_(i, j));
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_) throw ShapeError("Subspace: ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const
{
    Vector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v.at(pivots_[i]);
    return c;
}

Vector Subspace::from_coordinates(const Vector& c) const
{
    if (c.size() != dim()) throw ShapeError("Subspace: coordinate length mismatch");
    Vector v(ambient_);
    for (std::size_t i = 0; i < dim(); ++i) axpy(v, c[i], basis_.row(i));
    return v;
}

std::vector<std::size_t> Subspace::complement_indices() const
{
    std::vector<bool> piv(ambient_, false);
    for (auto p : pivots_) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!piv[j]) out.push_back(j);
    return out;
}

Subspace Subspace::operator+(const Subspace& other) const
{
    if (other.ambient_ != ambient_) throw ShapeError("Subspace sum: ambient dimension mismatch");
    std::vector<Vector> rows = basis_vectors();
    for (std::size_t i = 0; i < other.dim(); ++i) rows.push_back(other.basis_.row(i));
    return span(rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const
{
    if (other.ambient_ != ambient_) throw ShapeError("Subspace intersection: ambient dimension mismatch");
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    // x = a U = b V  <=>  [U^T | -V^T] (a; b) = 0
    const std::size_t k = dim(), l = other.dim();
    Matrix stacked(ambient_, k + l);
    for (std::size_t j = 0; j < ambient_; ++j) {
        for (std::size_t i = 0; i < k; ++i) stacked(j, i) = basis_(i, j);
        for (std::size_t i = 0; i < l; ++i) stacked(j, k + i) = -other.basis_(i, j);
    }
    Matrix ker = kernel_basis(stacked);
    std::vector<Vector> vecs;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        Vector x(ambient_);
        for (std::size_t i = 0; i < k; ++i) axpy(x, ker(r, i), basis_.row(i));
        vecs.push_back(std::move(x));
    }
    return span(vecs, ambient_);
}

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

int compare(const Subspace& a, const Subspace& b)
{
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        int c = compare(a.basis_.row(i), b.basis_.row(i));
        if (c) return c;
    }
    return 0;
}

}  // namespace hopfcheck
