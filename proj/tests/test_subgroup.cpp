#include "doctest.h"
#include "hopfcheck/constructions.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/subgroup.hpp"
#include "oracles.hpp"

using namespace hopfcheck;

namespace {

struct S3 {
    FiniteGroup g = FiniteGroup::symmetric(3);
    HopfStarAlgebra f = function_algebra(g);
    oracle::Set a3, t12;

    S3()
    {
        for (std::size_t x = 0; x < 6; ++x)
            if (oracle::element_order(g.table(), x) != 2) a3.insert(x);
        t12 = {g.identity(), g.index_of("(12)")};
    }
    QuantumSubgroup sub(const oracle::Set& h) const { return make_subgroup(f, oracle::vanishing_ideal(6, h)); }
};

Subspace augmentation(const HopfStarAlgebra& h) { return Subspace::kernel(Matrix::from_rows({h.counit_vector()}, h.dim())); }

}  // namespace

TEST_CASE("the two trivial quantum subgroups")
{
    S3 s;
    QuantumSubgroup whole = make_subgroup(s.f, Subspace(6));
    CHECK(whole.quotient.dim() == 6);
    CHECK(whole.proj.is_identity());
    CHECK(verify_subgroup(whole).empty());

    QuantumSubgroup triv = make_subgroup(s.f, augmentation(s.f));
    CHECK(triv.quotient.dim() == 1);
    CHECK(Matrix::from_rows({triv.proj.row(0)}, 6).row(0) == s.f.counit_vector());
    CHECK(verify_subgroup(triv).empty());
}

TEST_CASE("F(S3) restricted to A3 is F(A3)")
{
    S3 s;
    QuantumSubgroup q = s.sub(s.a3);
    REQUIRE(q.quotient.dim() == 3);
    CHECK(verify_subgroup(q).empty());
    CHECK(check_axioms(q.quotient).all_passed());
    // the quotient basis is delta_x for x in A3, in increasing order
    std::vector<std::size_t> elems(s.a3.begin(), s.a3.end());
    for (std::size_t t = 0; t < 3; ++t) {
        CHECK(q.project(s.f.basis(elems[t])) == unit_vector(3, t));
        for (std::size_t u = 0; u < 3; ++u)
            CHECK(q.quotient.product(t, u) == (t == u ? unit_vector(3, t) : zero_vector(3)));
        Tensor2 d = q.quotient.comultiply(q.quotient.basis(t));
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                CHECK(d(a, b) == Scalar(s.g.mul(elems[a], elems[b]) == elems[t] ? 1 : 0));
    }
}

TEST_CASE("ideals that are not Hopf ideals")
{
    S3 s;
    oracle::Set not_subgroup{s.g.identity(), s.g.index_of("(123)")};
    IdealCheck c = check_hopf_ideal(s.f, oracle::vanishing_ideal(6, not_subgroup));
    CHECK_FALSE(c.ok);
    CHECK(c.condition.find("Delta") != std::string::npos);
    CHECK_FALSE(is_zero(c.witness));
    CHECK_THROWS_AS(make_subgroup(s.f, oracle::vanishing_ideal(6, not_subgroup)), NotHopfIdeal);

    // the minimal idempotent of CZ3 for the character g -> w spans a *-ideal
    // that is not a Hopf ideal
    HopfStarAlgebra c3 = group_algebra(FiniteGroup::cyclic(3));
    const int n = c3.field_order();
    Scalar w = Scalar::zeta(n, n / 3), third(Rational(1, 3));
    Vector e{third, third * w.conj(), third * w};
    CHECK(c3.multiply(e, e) == e);
    CHECK(c3.star(e) == e);
    IdealCheck d = check_hopf_ideal(c3, Subspace::span({e}, 3));
    CHECK_FALSE(d.ok);

    CHECK(check_hopf_ideal(s.f, Subspace(6)).ok);
    CHECK(check_hopf_ideal(s.f, augmentation(s.f)).ok);
}

TEST_CASE("coset algebras are the coset functions")
{
    S3 s;
    for (const auto& h : oracle::all_subgroups(s.g.table())) {
        CosetAlgebras c = coset_algebras(s.sub(h));
        CHECK(c.g_mod_n == oracle::coset_functions(s.g.table(), h, true));
        CHECK(c.n_mod_g == oracle::coset_functions(s.g.table(), h, false));
    }
    CosetAlgebras a3 = coset_algebras(s.sub(s.a3));
    CHECK(a3.g_mod_n.dim() == 2);
    CHECK(coset_algebras(make_subgroup(s.f, Subspace(6))).g_mod_n == Subspace::span({s.f.unit()}, 6));
    CHECK(coset_algebras(make_subgroup(s.f, augmentation(s.f))).g_mod_n == Subspace::full(6));
}

TEST_CASE("conditional expectation averages over the subgroup")
{
    S3 s;
    for (const auto& h : {s.a3, s.t12}) {
        QuantumSubgroup q = s.sub(h);
        LinearEndo e = conditional_expectation(q, Side::Left);
        for (std::size_t i = 0; i < 6; ++i) CHECK(e(s.f.basis(i)) == oracle::coset_average(s.g.table(), h, s.f.basis(i)));
    }
    CHECK(conditional_expectation(make_subgroup(s.f, augmentation(s.f)), Side::Left) == LinearEndo::identity(6));
    LinearEndo whole = conditional_expectation(make_subgroup(s.f, Subspace(6)), Side::Right);
    for (std::size_t i = 0; i < 6; ++i) CHECK(whole(s.f.basis(i)) == s.f.haar()[i] * s.f.unit());
}

TEST_CASE("adjoint coactions")
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfStarAlgebra cs3 = group_algebra(s3);
    for (std::size_t g = 0; g < 6; ++g) {
        Tensor2 x = adjoint_coaction(cs3, cs3.basis(g), Side::Left);
        Tensor2 expect(6, 6);
        expect(g, s3.identity()) = Scalar(1);
        CHECK(x == expect);
    }

    HopfStarAlgebra f = function_algebra(s3);
    for (std::size_t x = 0; x < 6; ++x) {
        Tensor2 expect(6, 6);
        for (std::size_t c = 0; c < 6; ++c) expect(s3.mul(s3.mul(c, x), s3.inverse(c)), s3.inverse(c)) += Scalar(1);
        CHECK(adjoint_coaction(f, f.basis(x), Side::Left) == expect);
        CHECK(adjoint_coaction(f, f.basis(x), Side::Right).apply(f.counit_vector()) == f.basis(x));
    }
}

TEST_CASE("a-normality and the representation criterion on F(S3)")
{
    S3 s;
    PeterWeylData p = peter_weyl(s.f);
    auto chi = oracle::s3_character_table(s.g.table());
    std::size_t sign = 0, two = 0;
    for (std::size_t l = 0; l < 3; ++l) {
        if (p.irreps[l].character() == chi[1]) sign = l;
        if (p.irreps[l].character() == chi[2]) two = l;
    }

    QuantumSubgroup a3 = s.sub(s.a3);
    CHECK(is_left_a_normal(a3));
    CHECK(is_right_a_normal(a3));
    CHECK(is_normal_coset(a3));
    RepCriterion r = is_normal_rep(a3, p);
    CHECK(r.normal);
    CHECK(r.matrices[sign] == Matrix::identity(1));
    CHECK(r.matrices[two].is_zero());
    CHECK(r.trivial == std::vector<std::size_t>{std::min(p.trivial, sign), std::max(p.trivial, sign)});

    QuantumSubgroup t = s.sub(s.t12);
    CHECK_FALSE(is_left_a_normal(t));
    CHECK_FALSE(is_right_a_normal(t));
    CHECK_FALSE(is_normal_coset(t));
    RepCriterion rt = is_normal_rep(t, p);
    CHECK_FALSE(rt.normal);
    const Matrix& m = rt.matrices[two];
    CHECK_FALSE(m.is_zero());
    CHECK_FALSE(m.is_identity());
    CHECK(m * m == m);

    for (const auto& ideal : {Subspace(6), augmentation(s.f)}) {
        QuantumSubgroup q = make_subgroup(s.f, ideal);
        CHECK(is_left_a_normal(q));
        CHECK(is_right_a_normal(q));
        CHECK(normality_report(q, p).normal());
    }
    QuantumSubgroup triv = make_subgroup(s.f, augmentation(s.f));
    for (const auto& mm : is_normal_rep(triv, p).matrices) CHECK(mm.is_identity());
}

TEST_CASE("normality reports")
{
    S3 s;
    PeterWeylData p = peter_weyl(s.f);
    NormalityReport a3 = normality_report(s.sub(s.a3), p);
    CHECK(a3.normal());
    CHECK(a3.block_sum);
    CHECK(a3.rep.trivial.size() == 2);
    NormalityReport t = normality_report(s.sub(s.t12), p);
    CHECK(t.agree);
    CHECK_FALSE(t.normal());
    CHECK_FALSE(t.describe().empty());

    HopfStarAlgebra cs3 = group_algebra(s.g);
    PeterWeylData pc = peter_weyl(cs3);
    for (const auto& k : oracle::normal_subgroups(s.g.table()))
        CHECK(normality_report(make_subgroup(cs3, group_algebra_quotient_ideal(s.g, k)), pc).normal());
}

TEST_CASE("reconstruction lemma on F(S3)/A3")
{
    S3 s;
    QuantumSubgroup q = s.sub(s.a3);
    Reconstruction r = reconstruction_check(q);
    CHECK(r.holds);
    CHECK(q.ideal.dim() == 3);
    CHECK(r.left == q.ideal);
    CHECK(r.right == q.ideal);
    CHECK(r.augmented_cosets.dim() == 1);

    CHECK(reconstruction_check(make_subgroup(s.f, Subspace(6))).holds);
    CHECK(reconstruction_check(make_subgroup(s.f, augmentation(s.f))).holds);
}

TEST_CASE("comodule splitting and phi identities")
{
    S3 s;
    for (const auto& h : oracle::all_subgroups(s.g.table())) {
        QuantumSubgroup q = s.sub(h);
        Matrix sp = comodule_splitting(q);
        CHECK((q.proj * sp).is_identity());
        PhiIdentities phi = phi_map(q, sp);
        CHECK(phi.all());
    }
    QuantumSubgroup triv = make_subgroup(s.f, augmentation(s.f));
    Matrix sp = comodule_splitting(triv);
    CHECK(sp.col(0) == s.f.unit());
    QuantumSubgroup whole = make_subgroup(s.f, Subspace(6));
    CHECK(comodule_splitting(whole).is_identity());
    CHECK(phi_map(whole, comodule_splitting(whole)).phi == LinearEndo::counit_unit(s.f));
}

TEST_CASE("exact sequences and dimension counts")
{
    S3 s;
    ExactSequence e = exact_sequence_check(s.sub(s.a3));
    CHECK(e.holds());
    CHECK(coset_algebras(s.sub(s.a3)).g_mod_n.dim() * 3 == 6);

    HopfStarAlgebra cs3 = group_algebra(s.g);
    QuantumSubgroup q = make_subgroup(cs3, group_algebra_quotient_ideal(s.g, s.a3));
    CHECK(q.quotient.dim() == 2);
    CHECK(coset_algebras(q).g_mod_n.dim() == 3);
    CHECK(exact_sequence_check(q).holds());
}

TEST_CASE("Hopf subalgebras")
{
    S3 s;
    HopfStarAlgebra cs3 = group_algebra(s.g);
    CHECK(is_hopf_subalgebra(cs3, oracle::group_span(6, s.t12)));
    std::string why;
    CHECK_FALSE(is_hopf_subalgebra(cs3, oracle::group_span(6, {s.g.identity(), s.g.index_of("(123)")}), &why));
    CHECK_FALSE(why.empty());
    HopfSubalgebra b = subalgebra_as_hopf(cs3, oracle::group_span(6, s.a3));
    CHECK(b.algebra.dim() == 3);
    CHECK(check_axioms(b.algebra).all_passed());
    CHECK_THROWS_AS(subalgebra_as_hopf(cs3, Subspace::span({cs3.basis(1)}, 6)), TheoremViolation);
}

TEST_CASE("from_surjection rejects non-morphisms")
{
    S3 s;
    HopfStarAlgebra c = function_algebra(FiniteGroup::cyclic(1));
    Matrix ev(1, 6);
    ev(0, s.g.index_of("(12)")) = Scalar(1);  // evaluation at a non-identity point is not counital
    CHECK_THROWS_AS(from_surjection(s.f, c, ev), NotASubgroup);
    Matrix eps = Matrix::from_rows({s.f.counit_vector()}, 6);
    QuantumSubgroup q = from_surjection(s.f, c, eps);
    CHECK(q.ideal == augmentation(s.f));
}
