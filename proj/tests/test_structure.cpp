#include <algorithm>

#include "doctest.h"
#include "hopfcheck/constructions.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/structure.hpp"
#include "oracles.hpp"

using namespace hopfcheck;

namespace {

bool same_sets(std::vector<Subspace> a, std::vector<Subspace> b)
{
    auto less = [](const Subspace& x, const Subspace& y) { return compare(x, y) < 0; };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

std::vector<FiniteGroup> groups()
{
    return {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(6), FiniteGroup::symmetric(3),
            FiniteGroup::dihedral(4)};
}

oracle::Set elements(const FiniteGroup& g, std::initializer_list<const char*> labels)
{
    oracle::Set s;
    for (auto l : labels) s.insert(g.index_of(l));
    return s;
}

}  // namespace

TEST_CASE("function algebras: lattice matches the subgroup lattice")
{
    for (const auto& g : groups()) {
        const auto& t = g.table();
        HopfStarAlgebra f = function_algebra(g);
        SubgroupLattice l = subgroup_lattice(f);
        auto subs = oracle::all_subgroups(t);
        auto normals = oracle::normal_subgroups(t);
        CHECK(l.quantum_subgroups.size() == subs.size());
        CHECK(l.hopf_subalgebras.size() == normals.size());

        std::vector<Subspace> ideals, expected_ideals, algebras, expected_algebras;
        for (const auto& q : l.quantum_subgroups) ideals.push_back(q.ideal);
        for (const auto& h : subs) expected_ideals.push_back(oracle::vanishing_ideal(g.order(), h));
        for (const auto& b : l.hopf_subalgebras) algebras.push_back(b.space);
        for (const auto& n : normals) expected_algebras.push_back(oracle::coset_functions(t, n, true));
        CHECK(same_sets(ideals, expected_ideals));
        CHECK(same_sets(algebras, expected_algebras));

        // normal flags follow the classical normality of the subgroup
        for (std::size_t i = 0; i < l.quantum_subgroups.size(); ++i) {
            for (const auto& h : subs)
                if (oracle::vanishing_ideal(g.order(), h) == l.quantum_subgroups[i].ideal)
                    CHECK(l.normal_flags[i] == oracle::normal(t, h));
        }
    }
}

TEST_CASE("group algebras: the counts swap")
{
    for (const auto& g : groups()) {
        const auto& t = g.table();
        HopfStarAlgebra c = group_algebra(g);
        PeterWeylData p = peter_weyl(c);
        auto subalgebras = enumerate_hopf_subalgebras(c, p);
        auto qs = enumerate_quantum_subgroups(c);
        CHECK(subalgebras.size() == oracle::all_subgroups(t).size());
        CHECK(qs.size() == oracle::normal_subgroups(t).size());
        std::vector<Subspace> got, expect;
        for (const auto& b : subalgebras) got.push_back(b.space);
        for (const auto& h : oracle::all_subgroups(t)) expect.push_back(oracle::group_span(g.order(), h));
        CHECK(same_sets(got, expect));
    }
    HopfStarAlgebra cs3 = group_algebra(FiniteGroup::symmetric(3));
    std::vector<std::size_t> dims;
    for (const auto& b : enumerate_hopf_subalgebras(cs3, peter_weyl(cs3))) dims.push_back(b.space.dim());
    CHECK(dims == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
}

TEST_CASE("small cases")
{
    HopfStarAlgebra one = function_algebra(FiniteGroup::cyclic(1));
    CHECK(enumerate_quantum_subgroups(one).size() == 1);
    CHECK(property_F_check(one).holds);
    CHECK(property_FD_check(one).holds);
    InheritanceReport r = property_inheritance_suite(one);
    CHECK(r.ok());
    HopfStarAlgebra c2 = group_algebra(FiniteGroup::cyclic(2));
    CHECK(enumerate_hopf_subalgebras(c2, peter_weyl(c2)).size() == 2);
}

TEST_CASE("caps are hard errors")
{
    HopfStarAlgebra cs3 = group_algebra(FiniteGroup::symmetric(3));
    PeterWeylData p = peter_weyl(cs3);
    CHECK_THROWS_AS(closed_irrep_sets(p, {5, 1 << 16}), CapExceeded);
    CHECK_THROWS_AS(closed_irrep_sets(p, {20, 3}), CapExceeded);
    CHECK(closed_irrep_sets(p).size() == 6);
}

TEST_CASE("properties F and FD")
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfStarAlgebra fs3 = function_algebra(s3), cs3 = group_algebra(s3);
    CHECK(property_F_check(fs3).holds);
    CHECK(property_FD_check(cs3).holds);
    CHECK(property_FD_check(function_algebra(FiniteGroup::cyclic(6))).holds);

    PropertyResult fd = property_FD_check(fs3);
    CHECK_FALSE(fd.holds);
    REQUIRE(fd.witness);
    bool order_two = false;
    for (const auto& h : oracle::all_subgroups(s3.table()))
        if (h.size() == 2 && oracle::vanishing_ideal(6, h) == *fd.witness) order_two = true;
    CHECK(order_two);

    PropertyResult f = property_F_check(cs3);
    CHECK_FALSE(f.holds);
    REQUIRE(f.witness);
    bool transposition = false;
    for (const auto& h : oracle::all_subgroups(s3.table()))
        if (h.size() == 2 && oracle::group_span(6, h) == *f.witness) transposition = true;
    CHECK(transposition);

    for (const auto& g : groups()) {
        CHECK(property_F_check(function_algebra(g)).holds);
        CHECK(property_FD_check(group_algebra(g)).holds);
    }
}

TEST_CASE("pullback: the CS3 counterexample")
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfStarAlgebra cs3 = group_algebra(s3);
    const std::size_t c = s3.index_of("(123)"), c2 = s3.index_of("(132)");
    const int n = cs3.field_order();
    Scalar w = Scalar::zeta(n, n / 3), third(Rational(1, 3));
    Vector e = zero_vector(6);
    e[s3.identity()] = third;
    e[c] = third * w.conj();
    e[c2] = third * w;
    Subspace a0 = oracle::group_span(6, {s3.identity(), c, c2});
    Subspace i0 = Subspace::span({e}, 6);
    PullbackResult r = pullback_check(cs3, a0, i0, PullbackMode::PlainIdeal);
    CHECK_FALSE(r.holds);
    CHECK(i0.dim() == 1);
    CHECK(r.intersection.dim() == 2);
    CHECK(a0.contains(r.intersection));
    // a plain ideal of A0 but not a Hopf ideal of it
    CHECK_THROWS_AS(pullback_check(cs3, a0, i0, PullbackMode::HopfIdeal), NotHopfIdeal);

    CHECK(pullback_check(cs3, a0, Subspace(6), PullbackMode::PlainIdeal).holds);
}

TEST_CASE("pullback: function algebras")
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfStarAlgebra f = function_algebra(s3);
    oracle::Set a3 = elements(s3, {"e", "(123)", "(132)"});
    Subspace a0 = oracle::coset_functions(s3.table(), a3, true);
    Subspace aug = a0.intersect(Subspace::kernel(Matrix::from_rows({f.counit_vector()}, 6)));
    REQUIRE(aug.dim() == 1);
    for (auto mode : {PullbackMode::PlainIdeal, PullbackMode::HopfIdeal}) {
        CHECK(pullback_check(f, a0, aug, mode).holds);
        CHECK(pullback_check(f, a0, Subspace(6), mode).holds);
    }
    CHECK_THROWS_AS(pullback_check(f, Subspace::span({f.basis(0)}, 6), Subspace(6), PullbackMode::PlainIdeal),
                    ShapeError);
    CHECK_THROWS_AS(pullback_check(f, a0, Subspace::span({f.basis(0)}, 6), PullbackMode::PlainIdeal), NotHopfIdeal);
}

TEST_CASE("third isomorphism on F(D4)")
{
    FiniteGroup d4 = FiniteGroup::dihedral(4);
    HopfStarAlgebra f = function_algebra(d4);
    oracle::Set center = elements(d4, {"e", "r2"}), z4 = elements(d4, {"e", "r", "r2", "r3"});
    REQUIRE(oracle::normal(d4.table(), center));
    QuantumSubgroup n = make_subgroup(f, oracle::vanishing_ideal(8, center));
    QuantumSubgroup h = make_subgroup(f, oracle::vanishing_ideal(8, z4));
    ThirdIsomorphism r = third_isomorphism_check(n, h);
    CHECK(r.holds());
    CHECK(r.lhs == r.rhs);
    CHECK(r.lhs.dim() == 2);
    CHECK(r.rhs == oracle::coset_functions(d4.table(), z4, true));

    ThirdIsomorphism same = third_isomorphism_check(n, n);
    CHECK(same.holds());
    CHECK(same.lhs == coset_algebras(n).g_mod_n);

    QuantumSubgroup g = make_subgroup(f, Subspace(8));
    ThirdIsomorphism top = third_isomorphism_check(n, g);
    CHECK(top.holds());
    CHECK(top.lhs == Subspace::span({f.unit()}, 8));

    CHECK_THROWS_AS(third_isomorphism_check(h, n), ContainmentViolated);
    oracle::Set refl = elements(d4, {"e", "s"});
    QuantumSubgroup nn = make_subgroup(f, oracle::vanishing_ideal(8, refl));
    CHECK_THROWS_AS(third_isomorphism_check(nn, g), NotNormalInner);
}

TEST_CASE("third isomorphism holds for every admissible chain")
{
    for (const char* name : {"f_s3", "f_d4"}) {
        HopfStarAlgebra f = catalog_algebra(name);
        auto subs = enumerate_quantum_subgroups(f);
        std::size_t chains = 0;
        for (const auto& n : subs) {
            if (!is_normal_coset(n)) continue;
            for (const auto& h : subs) {
                if (!n.ideal.contains(h.ideal)) continue;
                ++chains;
                CHECK_MESSAGE(third_isomorphism_check(n, h).holds(), name);
            }
        }
        CHECK(chains > 0);
    }
}

TEST_CASE("inheritance of properties")
{
    InheritanceReport fs3 = property_inheritance_suite(catalog_algebra("f_s3"));
    CHECK(fs3.has_f);
    CHECK_FALSE(fs3.has_fd);
    CHECK(fs3.ok());
    CHECK(fs3.pullback);
    CHECK(fs3.checks.size() == 3);

    InheritanceReport cs3 = property_inheritance_suite(catalog_algebra("c_s3"));
    CHECK_FALSE(cs3.has_f);
    CHECK(cs3.has_fd);
    CHECK(cs3.ok());
    CHECK_FALSE(cs3.checks.empty());
}
