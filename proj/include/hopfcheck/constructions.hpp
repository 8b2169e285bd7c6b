#ifndef HOPFCHECK_CONSTRUCTIONS_HPP
#define HOPFCHECK_CONSTRUCTIONS_HPP

#include <set>
#include <string>
#include <vector>

#include "hopfcheck/corep.hpp"
#include "hopfcheck/subgroup.hpp"

namespace hopfcheck {

using Subset = std::set<std::size_t>;

// Finite group by multiplication table; table[a][b] = index of ab.
// The constructor checks the group axioms and throws SchemaError.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels);

    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup symmetric(std::size_t n);
    static FiniteGroup dihedral(std::size_t n);  // order 2n
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    std::size_t order() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(const std::string& label) const;  // throws SchemaError

    std::size_t element_order(std::size_t g) const;
    std::size_t exponent() const;
    bool is_subgroup(const Subset& h) const;
    bool is_normal(const Subset& h) const;
    Subset generated(const Subset& gens) const;

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::string> labels_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

// G/K for a normal subgroup K; coset_of[g] is the index of gK. Cosets are
// numbered by their least element.
struct QuotientGroup {
    FiniteGroup group;
    std::vector<std::size_t> coset_of;
};
QuotientGroup quotient_group(const FiniteGroup& g, const Subset& k);

// Field order used by the group constructors when none is given: the
// exponent, unless HOPFCHECK_FIELD_ORDER is set.
int default_field_order(const FiniteGroup& g);
// HOPFCHECK_FIELD_ORDER if set, else fallback.
int field_order_override(int fallback);

HopfStarAlgebra group_algebra(const FiniteGroup& g, int order = 0);
HopfStarAlgebra function_algebra(const FiniteGroup& g, int order = 0);

// Functions on G vanishing on h. Throws NotASubgroup.
Subspace subgroup_ideal(const FiniteGroup& g, const Subset& h);
// Kernel of CG -> C(G/K), spanned by g - gk. Throws NotASubgroup unless K
// is a normal subgroup.
Subspace group_algebra_quotient_ideal(const FiniteGroup& g, const Subset& k);

// Same structure with every scalar moved into Q(zeta_order).
HopfStarAlgebra lift_to_order(const HopfStarAlgebra& h, int order);

HopfStarAlgebra tensor_product(const HopfStarAlgebra& a, const HopfStarAlgebra& b);
Matrix kronecker(const Matrix& a, const Matrix& b);

struct TensorSubgroup {
    QuantumSubgroup subgroup;
    Subspace expected_cosets;  // A_{G1/N1} (x) A_{G2/N2}
    bool quotient_identity = false;
};
TensorSubgroup tensor_subgroup(const QuantumSubgroup& q1, const QuantumSubgroup& q2);

// Action of a finite group on a Hopf *-algebra; maps[g] is alpha_g.
struct GroupAction {
    FiniteGroup group;
    std::vector<Matrix> maps;
};

// Throws ActionInvalid naming the first failed condition.
void validate_action(const HopfStarAlgebra& a, const GroupAction& act);

// alpha_g(delta_x) = delta_{theta_g(x)} on the function algebra of target,
// for a homomorphism g -> Aut(target) given as permutations.
GroupAction function_algebra_action(const FiniteGroup& target, const FiniteGroup& acting,
                                    const std::vector<std::vector<std::size_t>>& theta);
GroupAction trivial_action(const HopfStarAlgebra& a, const FiniteGroup& acting);

// Basis e_i g indexed i * |G| + g. order = 0 picks lcm(order of a, exponent).
HopfStarAlgebra crossed_product(const HopfStarAlgebra& a, const GroupAction& act, int order = 0);
// h(a g) = h_A(a) delta_{g,e}
Vector crossed_haar(const HopfStarAlgebra& a, const GroupAction& act);

struct CrossedSubgroup {
    QuantumSubgroup subgroup;
    Subspace expected_cosets;
    bool coset_identity = false;
    // general case only: the coset algebra is spanned by u^lambda_ij k for
    // lambda in S(N) and k in K
    bool trivial_set_identity = true;
};

// pi(a g) = eps(a) g onto the group algebra; cosets = A e.
CrossedSubgroup crossed_canonical_subgroup(const HopfStarAlgebra& a, const GroupAction& act,
                                           const HopfStarAlgebra& x);
// Quotient (A/I) x| (G/K). Throws InvarianceViolated, NotNormalInner,
// KNotInKernel, NotASubgroup.
CrossedSubgroup crossed_general_subgroup(const HopfStarAlgebra& a, const GroupAction& act, const HopfStarAlgebra& x,
                                         const Subspace& ideal, const Subset& k, const PeterWeylOptions& opt = {});

struct CatalogEntry {
    std::string name;
    HopfStarAlgebra algebra;
};

// F(Z2), F(Z3), F(Z6), F(S3), F(D4), CZ3, CS3, F(Z2)(x)F(Z3), F(Z3)x|Z2.
std::vector<CatalogEntry> catalog();
// Builds one catalog entry by name; throws SchemaError for unknown names.
HopfStarAlgebra catalog_algebra(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace hopfcheck

#endif
