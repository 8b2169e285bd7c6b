#ifndef HOPFCHECK_SPLITTING_HPP
#define HOPFCHECK_SPLITTING_HPP

#include <cstdint>
#include <vector>

#include "hopfcheck/hopf.hpp"

// Wedderburn splitting of the algebra part of a HopfStarAlgebra over its
// cyclotomic field. Eigenvalues are located numerically in the complex
// embeddings and rebuilt as exact field elements; every result is then
// checked by exact substitution, so the numerics only guide the search.
namespace hopfcheck::splitting {

struct Options {
    std::uint64_t seed = 0;
    int max_attempts = 40;
};

// Eigenvalues of m lying in Q(zeta_order), each verified exactly (m - t I
// singular). Eigenvalues outside the field are silently absent.
std::vector<Scalar> field_eigenvalues(const Matrix& m, int order);

// Nearest rational with denominator <= max_den, if within tolerance.
std::optional<Rational> rationalize(long double x, long max_den = 1000000, long double tol = 1e-9L);

// {z : z a = a z for all a}
Subspace center(const HopfStarAlgebra& a);

// The unit element of a two-sided ideal (or any subalgebra with a unit
// lying in the span): the unique e in the span with e b = b e = b.
std::optional<Vector> ideal_unit(const HopfStarAlgebra& a, const Subspace& ideal);

// Primitive central idempotents, sorted by the echelon order of their
// blocks. Throws SplittingFailed when the center is not split over the
// field.
std::vector<Vector> primitive_central_idempotents(const HopfStarAlgebra& a, const Options& opt = {});

// Algebra maps a -> K, i.e. the 1-dimensional blocks, as coefficient
// vectors (value on each basis element).
std::vector<Vector> characters(const HopfStarAlgebra& a, const Options& opt = {});

// A minimal left ideal of the simple block e A. Candidates are tried in
// order, then seeded random combinations of them. Throws SplittingFailed.
Subspace minimal_left_ideal(const HopfStarAlgebra& a, const Vector& central_idempotent,
                            const std::vector<Vector>& candidates, const Options& opt = {});

// Matrix of left multiplication by f on the left ideal v, in the echelon
// basis of v.
Matrix left_action(const HopfStarAlgebra& a, const Subspace& v, const Vector& f);

}  // namespace hopfcheck::splitting

#endif
