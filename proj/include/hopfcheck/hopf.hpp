#ifndef HOPFCHECK_HOPF_HPP
#define HOPFCHECK_HOPF_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfcheck/matrix.hpp"
#include "hopfcheck/subspace.hpp"

namespace hopfcheck {

// One structure constant: for mult, e_i e_j contains value * e_k; for
// comult, Delta(e_i) contains value * e_j (x) e_k.
struct Triple {
    std::size_t i = 0, j = 0, k = 0;
    Scalar value;
};

// Raw structure constants of a finite-dimensional Hopf *-algebra.
// Linear maps are stored with column i = image of e_i, so for the star
// x* = sum_j star(j, i) e_j extended conjugate-linearly.
struct StructureConstants {
    std::size_t dim = 0;
    int field_order = 1;
    std::vector<std::string> labels;
    std::vector<Triple> mult;
    Vector unit;
    std::vector<Triple> comult;
    Vector counit;
    Matrix antipode;
    Matrix star;
};

// Element of A (x) A as a dim x dim coefficient matrix: X(j, k) is the
// coefficient of e_j (x) e_k.
using Tensor2 = Matrix;

/*
  Finite-dimensional Hopf *-algebra given by structure constants.

  Holds the tensors sparsely indexed for contraction. Construction only
  validates shapes; check_axioms() decides whether the data is a Hopf
  *-algebra of Kac type, and downstream code assumes it passed. The Haar
  functional is computed on first use and cached; copies share the cache.
*/
class HopfStarAlgebra {
public:
    HopfStarAlgebra() = default;
    explicit HopfStarAlgebra(StructureConstants sc);

    std::size_t dim() const { return sc_.dim; }
    int field_order() const { return sc_.field_order; }
    const std::vector<std::string>& labels() const { return sc_.labels; }
    const StructureConstants& structure() const { return sc_; }

    const Vector& unit() const { return sc_.unit; }
    const Vector& counit_vector() const { return sc_.counit; }
    const Matrix& antipode_matrix() const { return sc_.antipode; }
    const Matrix& star_matrix() const { return sc_.star; }

    Vector basis(std::size_t i) const { return unit_vector(dim(), i); }

    // e_i e_j
    Vector product(std::size_t i, std::size_t j) const;
    Vector multiply(const Vector& a, const Vector& b) const;
    Tensor2 comultiply(const Vector& a) const;
    // (Delta (x) id) Delta(a) as a flat array indexed (j*d + k)*d + l.
    std::vector<Scalar> comultiply_twice(const Vector& a) const;
    Scalar counit(const Vector& a) const;
    Vector antipode(const Vector& a) const;
    Vector star(const Vector& a) const;  // conjugate-linear

    // Multiplication in A (x) A, factorwise.
    Tensor2 multiply(const Tensor2& x, const Tensor2& y) const;

    // sparse views
    const std::vector<std::pair<std::size_t, Scalar>>& product_terms(std::size_t i, std::size_t j) const
    {
        return mult_[i * dim() + j];
    }
    const std::vector<Triple>& coproduct_terms(std::size_t i) const { return comult_[i]; }

    // Haar functional h with h(1) = 1; throws NotCosemisimple.
    const Vector& haar() const;
    Scalar haar(const Vector& a) const { return dot(haar(), a); }

    // Relabel the algebra (used by constructors and the dual).
    HopfStarAlgebra with_labels(std::vector<std::string> labels) const;

private:
    StructureConstants sc_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> mult_;  // index i*d+j
    std::vector<std::vector<Triple>> comult_;                        // index i

    struct HaarCache;
    std::shared_ptr<HaarCache> haar_cache_;
};

// Entrywise equality of all structure tensors (labels ignored).
bool same_structure(const HopfStarAlgebra& a, const HopfStarAlgebra& b);

struct AxiomResult {
    std::string name;
    bool passed = true;
    std::string witness;  // basis indices / element on failure
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_passed() const;
    const AxiomResult* first_failure() const;
};

AxiomReport check_axioms(const HopfStarAlgebra& h);

// Throws NotCosemisimple when no normalized two-sided invariant functional
// exists, and when the invariant functionals do not form a line.
Vector compute_haar(const HopfStarAlgebra& h);

// A linear map A -> A, column i = image of e_i.
class LinearEndo {
public:
    LinearEndo() = default;
    explicit LinearEndo(Matrix m);
    static LinearEndo identity(std::size_t d) { return LinearEndo(Matrix::identity(d)); }
    // a -> eps(a) 1, the unit of the convolution algebra
    static LinearEndo counit_unit(const HopfStarAlgebra& h);
    static LinearEndo antipode(const HopfStarAlgebra& h) { return LinearEndo(h.antipode_matrix()); }

    std::size_t dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    Vector operator()(const Vector& a) const { return m_.apply(a); }
    Vector image_of_basis(std::size_t i) const { return m_.col(i); }

    // (f o g)(a) = f(g(a))
    LinearEndo after(const LinearEndo& g) const;
    friend LinearEndo operator+(const LinearEndo& f, const LinearEndo& g) { return LinearEndo(f.m_ + g.m_); }
    friend LinearEndo operator-(const LinearEndo& f, const LinearEndo& g) { return LinearEndo(f.m_ - g.m_); }
    friend bool operator==(const LinearEndo& f, const LinearEndo& g) { return f.m_ == g.m_; }
    friend bool operator!=(const LinearEndo& f, const LinearEndo& g) { return !(f == g); }

private:
    Matrix m_;
};

// f * g = m (f (x) g) Delta
LinearEndo convolve(const HopfStarAlgebra& h, const LinearEndo& f, const LinearEndo& g);

// Dual Hopf *-algebra on the dual basis; labels become "d(label)".
HopfStarAlgebra dual(const HopfStarAlgebra& h);

// Gram matrix G(i, j) = h(e_i^* e_j).
Matrix haar_gram(const HopfStarAlgebra& h);

// Exact certificate that h(x^* x) > 0 for all x != 0: the Gram matrix is
// Hermitian and its LDL* pivots are real and positive.
bool haar_positive_definite(const HopfStarAlgebra& h, std::string* witness = nullptr);

}  // namespace hopfcheck

#endif
