#include <random>

#include "doctest.h"
#include "hopfcheck/constructions.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/structure.hpp"

using namespace hopfcheck;

namespace {

Vector random_element(std::mt19937& rng, const HopfStarAlgebra& h)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    Vector v = zero_vector(h.dim());
    const int n = h.field_order();
    for (auto& x : v) x = Scalar(coef(rng)) + Scalar(coef(rng)) * Scalar::zeta(n);
    return v;
}

// Sparse random subspace: each spanning vector has a few entries in {-1, 1, 2}.
Subspace random_subspace(std::mt19937& rng, std::size_t d, std::size_t k)
{
    std::uniform_int_distribution<std::size_t> pos(0, d - 1);
    std::uniform_int_distribution<int> coef(0, 2), terms(1, 3);
    const Scalar values[] = {Scalar(-1), Scalar(1), Scalar(2)};
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < k; ++i) {
        Vector v = zero_vector(d);
        for (int t = terms(rng); t > 0; --t) v[pos(rng)] += values[coef(rng)];
        vs.push_back(v);
    }
    return Subspace::span(vs, d);
}

template <class T>
bool contains(const std::vector<T>& list, const Subspace& s)
{
    for (const auto& x : list)
        if (x == s) return true;
    return false;
}

}  // namespace

TEST_CASE("random elements satisfy the Hopf *-algebra identities")
{
    std::mt19937 rng(2024);
    for (const auto& e : catalog()) {
        const HopfStarAlgebra& h = e.algebra;
        LinearEndo id = LinearEndo::identity(h.dim()), s = LinearEndo::antipode(h), eps = LinearEndo::counit_unit(h);
        CHECK(convolve(h, s, id) == eps);
        CHECK(convolve(h, id, s) == eps);
        CHECK(convolve(h, eps, id) == id);
        for (int k = 0; k < 4; ++k) {
            Vector a = random_element(rng, h), b = random_element(rng, h), c = random_element(rng, h);
            CHECK_MESSAGE(h.multiply(h.multiply(a, b), c) == h.multiply(a, h.multiply(b, c)), e.name);
            CHECK_MESSAGE(h.comultiply(h.multiply(a, b)) == h.multiply(h.comultiply(a), h.comultiply(b)), e.name);
            CHECK(h.counit(h.multiply(a, b)) == h.counit(a) * h.counit(b));
            CHECK(h.star(h.multiply(a, b)) == h.multiply(h.star(b), h.star(a)));
            CHECK(h.star(h.star(a)) == a);
            CHECK(h.antipode(h.antipode(a)) == a);
            Scalar norm = h.haar(h.multiply(h.star(a), a));
            CHECK(norm.is_real());
            CHECK_MESSAGE(norm.sign() == (is_zero(a) ? 0 : 1), e.name);
            CHECK(h.haar(h.multiply(a, b)) == h.haar(h.multiply(b, a)));
        }
    }
}

TEST_CASE("the dual is involutive on the catalog")
{
    for (const auto& e : catalog()) {
        HopfStarAlgebra d = dual(e.algebra);
        CHECK_MESSAGE(check_axioms(d).all_passed(), e.name);
        CHECK_MESSAGE(same_structure(dual(d), e.algebra), e.name);
    }
}

TEST_CASE("randomized ideal and subalgebra probes")
{
    std::mt19937 rng(99);
    std::size_t probes = 0, rejected = 0, accepted = 0;
    for (const auto& e : catalog()) {
        const HopfStarAlgebra& h = e.algebra;
        const std::size_t d = h.dim();
        std::vector<Subspace> ideals;
        for (const auto& q : enumerate_quantum_subgroups(h)) ideals.push_back(q.ideal);
        std::vector<Subspace> subalgebras;
        for (const auto& b : enumerate_hopf_subalgebras(h, peter_weyl(h))) subalgebras.push_back(b.space);

        std::uniform_int_distribution<std::size_t> size(1, d > 1 ? d - 1 : 1);
        for (int k = 0; k < 14; ++k) {
            Subspace s = random_subspace(rng, d, size(rng));
            ++probes;
            IdealCheck c = check_hopf_ideal(h, s);
            CHECK_MESSAGE(c.ok == contains(ideals, s), e.name);
            if (c.ok) {
                ++accepted;
                CHECK(verify_subgroup(make_subgroup(h, s)).empty());
            } else {
                ++rejected;
                CHECK_FALSE(c.condition.empty());
                CHECK_THROWS_AS(make_subgroup(h, s), NotHopfIdeal);
            }
            CHECK_MESSAGE(is_hopf_subalgebra(h, s) == contains(subalgebras, s), e.name);
        }
        // every listed ideal passes, every listed subalgebra passes
        for (const auto& i : ideals) CHECK(check_hopf_ideal(h, i).ok);
        for (const auto& b : subalgebras) CHECK(is_hopf_subalgebra(h, b));
    }
    CHECK(probes >= 100);
    CHECK(rejected > 0);
    MESSAGE("probes: " << probes << ", rejected: " << rejected << ", accepted: " << accepted);
}

TEST_CASE("random surjections are rejected")
{
    std::mt19937 rng(5);
    HopfStarAlgebra f = catalog_algebra("f_s3");
    HopfStarAlgebra z2 = function_algebra(FiniteGroup::cyclic(2));
    std::uniform_int_distribution<int> coef(-1, 1);
    for (int k = 0; k < 20; ++k) {
        Matrix pi(2, 6);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 6; ++j) pi(i, j) = Scalar(coef(rng));
        CHECK_THROWS_AS(from_surjection(f, z2, pi), NotASubgroup);
    }
}

TEST_CASE("shape errors")
{
    HopfStarAlgebra f = catalog_algebra("f_s3");
    CHECK_THROWS_AS(check_hopf_ideal(f, Subspace(5)), ShapeError);
}
