#ifndef HOPFCHECK_STRUCTURE_HPP
#define HOPFCHECK_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfcheck/corep.hpp"
#include "hopfcheck/subgroup.hpp"

namespace hopfcheck {

struct EnumerationCaps {
    std::size_t max_irreps = 20;
    std::size_t max_subsets = std::size_t(1) << 16;
};

struct StructureOptions {
    PeterWeylOptions peter_weyl;
    EnumerationCaps caps;
};

// Irrep index sets containing the trivial irrep and closed under
// conjugation and fusion, sorted. Throws CapExceeded.
std::vector<std::vector<std::size_t>> closed_irrep_sets(const PeterWeylData& p, const EnumerationCaps& caps = {});

struct HopfSubalgebraEntry {
    Subspace space;
    std::vector<std::size_t> irreps;
};

// Every Hopf *-subalgebra, as the sum of the blocks of a closed irrep set.
// Sorted by dimension, then echelon basis.
std::vector<HopfSubalgebraEntry> enumerate_hopf_subalgebras(const HopfStarAlgebra& h, const PeterWeylData& p,
                                                            const EnumerationCaps& caps = {});

// Every quantum subgroup, via annihilators of the Hopf subalgebras of the
// dual. Sorted by ideal.
std::vector<QuantumSubgroup> enumerate_quantum_subgroups(const HopfStarAlgebra& h, const StructureOptions& opt = {});

struct SubgroupLattice {
    HopfStarAlgebra algebra;
    std::vector<HopfSubalgebraEntry> hopf_subalgebras;
    std::vector<QuantumSubgroup> quantum_subgroups;
    std::vector<bool> normal_flags;
};

SubgroupLattice subgroup_lattice(const HopfStarAlgebra& h, const StructureOptions& opt = {});

struct PropertyResult {
    bool holds = true;
    std::optional<Subspace> witness;  // unmatched subalgebra (F) or ideal of a non-normal subgroup (FD)
};

PropertyResult property_F_check(const HopfStarAlgebra& h, const StructureOptions& opt = {});
PropertyResult property_FD_check(const HopfStarAlgebra& h, const StructureOptions& opt = {});

enum class PullbackMode { PlainIdeal, HopfIdeal };

struct PullbackResult {
    bool holds = false;
    Subspace generated;     // A I0 A
    Subspace intersection;  // A I0 A cap A0
};

// Throws NotHopfIdeal when i0 is not an ideal of a0 of the requested kind,
// and ShapeError when a0 is not a unital subalgebra.
PullbackResult pullback_check(const HopfStarAlgebra& a, const Subspace& a0, const Subspace& i0, PullbackMode mode);

struct ThirdIsomorphism {
    bool n_normal_in_h = false;
    bool image_identity = false;  // theta(A_{G/N}) = A_{H/N}
    bool coset_identity = false;  // A_{(G/N)/(H/N)} = A_{G/H}
    bool h_normal = false;
    bool quotient_normal = true;  // H/N normal in G/N, checked when H is normal
    Subspace lhs, rhs;
    bool holds() const { return n_normal_in_h && image_identity && coset_identity && (!h_normal || quotient_normal); }
};

// n must be normal in the parent and ker(theta) must lie in ker(pi).
// Throws ContainmentViolated, NotNormalInner.
ThirdIsomorphism third_isomorphism_check(const QuantumSubgroup& n, const QuantumSubgroup& h);

struct InheritanceReport {
    bool has_f = false;
    bool has_fd = false;
    bool pullback = false;
    std::vector<std::string> checks;    // one line per verified implication
    std::vector<std::string> failures;  // violated implications
    bool ok() const { return failures.empty(); }
};

InheritanceReport property_inheritance_suite(const HopfStarAlgebra& g, const StructureOptions& opt = {});

}  // namespace hopfcheck

#endif
