#ifndef HOPFCHECK_SUBGROUP_HPP
#define HOPFCHECK_SUBGROUP_HPP

#include <string>
#include <vector>

#include "hopfcheck/corep.hpp"
#include "hopfcheck/hopf.hpp"

namespace hopfcheck {

// A quantum subgroup given by its Hopf *-ideal. proj is the surjection onto
// the quotient (quotient.dim() x parent.dim()); section maps quotient basis
// vector t to the parent basis vector it was taken from.
struct QuantumSubgroup {
    HopfStarAlgebra parent;
    Subspace ideal;
    HopfStarAlgebra quotient;
    Matrix proj;
    Matrix section;

    Vector project(const Vector& a) const { return proj.apply(a); }
    // h_N o pi as a functional on the parent
    Vector haar_pullback() const;
};

struct IdealCheck {
    bool ok = true;
    std::string condition;  // first violated condition
    Vector witness;
};

IdealCheck check_hopf_ideal(const HopfStarAlgebra& g, const Subspace& ideal);

// Quotient on the echelon complement of the ideal. Throws NotHopfIdeal.
QuantumSubgroup make_subgroup(const HopfStarAlgebra& g, const Subspace& ideal);

// Subgroup from an explicit surjective morphism of Hopf *-algebras onto y.
// Throws NotASubgroup when pi is not one.
QuantumSubgroup from_surjection(const HopfStarAlgebra& g, const HopfStarAlgebra& y, const Matrix& pi);

// Morphism identities, surjectivity and ker pi == ideal. Empty when valid.
std::vector<std::string> verify_subgroup(const QuantumSubgroup& q);

enum class Side { Left, Right };

struct CosetAlgebras {
    Subspace g_mod_n;  // A_{G/N}, right coinvariants
    Subspace n_mod_g;  // A_{N\G}, left coinvariants
};

// Kernel description, cross-checked against the images of the conditional
// expectations. Throws TheoremViolation if the two disagree.
CosetAlgebras coset_algebras(const QuantumSubgroup& q);

// Side::Left gives E_{G/N} = (id (x) h_N pi) Delta, Side::Right gives
// E_{N\G} = (h_N pi (x) id) Delta.
LinearEndo conditional_expectation(const QuantumSubgroup& q, Side side);

// ad_l(a) = a(2) (x) a(1) S(a(3)), ad_r(a) = a(2) (x) S(a(1)) a(3).
Tensor2 adjoint_coaction(const HopfStarAlgebra& g, const Vector& a, Side side);

bool is_left_a_normal(const QuantumSubgroup& q);
bool is_right_a_normal(const QuantumSubgroup& q);
bool is_normal_coset(const QuantumSubgroup& q);

struct RepCriterion {
    bool normal = true;
    std::vector<Matrix> matrices;      // h_N pi(u^lambda)
    std::vector<std::size_t> trivial;  // lambda with matrix = I
};

RepCriterion is_normal_rep(const QuantumSubgroup& q, const PeterWeylData& p);

struct NormalityReport {
    RepCriterion rep;
    bool left_a_normal = false;
    bool right_a_normal = false;
    bool coset_equality = false;
    bool agree = false;
    // when normal: A_{G/N} is the sum of the blocks in the trivial set
    bool block_sum = true;

    bool normal() const { return agree && rep.normal; }
    std::string describe() const;
};

// Runs the four criteria independently. Throws TheoremViolation (with the
// full report in the message) when they disagree, unless allow_disagreement.
NormalityReport normality_report(const QuantumSubgroup& q, const PeterWeylData& p, bool allow_disagreement = false);

struct Reconstruction {
    Subspace augmented_cosets;  // A_{G/N} cap ker eps
    Subspace left;              // A^+ A
    Subspace right;             // A A^+
    Subspace two_sided;         // A A^+ A
    bool holds = false;
};

Reconstruction reconstruction_check(const QuantumSubgroup& q);

// s : A_N -> A_G with pi s = id and (id (x) pi) Delta s = (s (x) id) Delta_N,
// as a parent.dim() x quotient.dim() matrix. Throws TheoremViolation if the
// system has no solution.
Matrix comodule_splitting(const QuantumSubgroup& q);

struct PhiIdentities {
    LinearEndo phi;
    bool image_in_cosets = false;  // (i)
    bool counit = false;           // (ii)
    bool splitting = false;        // (iii) id - s pi = [(eps 1 - id) phi] * id
    bool all() const { return image_in_cosets && counit && splitting; }
};

PhiIdentities phi_map(const QuantumSubgroup& q, const Matrix& s);

struct ExactSequence {
    bool coset_is_hopf_subalgebra = false;
    bool reconstruction = false;
    bool dimensions = false;
    bool holds() const { return coset_is_hopf_subalgebra && reconstruction && dimensions; }
};

ExactSequence exact_sequence_check(const QuantumSubgroup& q);

// Closure of b under unit, product, coproduct, antipode and star.
bool is_hopf_subalgebra(const HopfStarAlgebra& g, const Subspace& b, std::string* why = nullptr);

struct HopfSubalgebra {
    HopfStarAlgebra algebra;
    Matrix inclusion;  // parent.dim() x b.dim(), columns = echelon basis of b
};

// The subspace as a Hopf *-algebra in its echelon basis. Throws
// TheoremViolation if b is not a Hopf *-subalgebra.
HopfSubalgebra subalgebra_as_hopf(const HopfStarAlgebra& g, const Subspace& b);

// span{x y : x in a, y in b}
Subspace product_span(const HopfStarAlgebra& g, const Subspace& a, const Subspace& b);

}  // namespace hopfcheck

#endif
