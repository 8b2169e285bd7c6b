#ifndef HOPFCHECK_SUBSPACE_HPP
#define HOPFCHECK_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "hopfcheck/matrix.hpp"

namespace hopfcheck {

/*
  A linear subspace of K^n held as its reduced row-echelon basis. The echelon
  basis is canonical, so equality of subspaces is entrywise equality of the
  bases. Coordinates of a member vector in this basis are its entries at the
  pivot columns.
*/
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim);  // the zero subspace

    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
    static Subspace span(const Matrix& rows);
    static Subspace full(std::size_t ambient_dim);
    // {x : a x = 0}
    static Subspace kernel(const Matrix& a);
    // column space of a
    static Subspace image(const Matrix& a);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vector> basis_vectors() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    // v minus its component along the basis at pivot positions; zero iff v is
    // a member. Entries at pivot columns of the result are zero.
    Vector reduce(const Vector& v) const;
    // Coordinates of a member vector (undefined for non-members).
    Vector coordinates(const Vector& v) const;
    Vector from_coordinates(const Vector& c) const;
    // Columns that are not pivots: the echelon-canonical complement.
    std::vector<std::size_t> complement_indices() const;

    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    // Deterministic total order (dimension first, then echelon entries).
    friend int compare(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace hopfcheck

#endif
