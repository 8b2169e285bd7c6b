#include <algorithm>

#include "doctest.h"
#include "hopfcheck/constructions.hpp"
#include "hopfcheck/corep.hpp"
#include "hopfcheck/errors.hpp"
#include "oracles.hpp"

using namespace hopfcheck;

namespace {

std::size_t index_of_character(const PeterWeylData& p, const Vector& chi)
{
    for (std::size_t l = 0; l < p.size(); ++l)
        if (p.irreps[l].character() == chi) return l;
    return p.size();
}

}  // namespace

TEST_CASE("cocommutative case: the irreps of CS3 are the group elements")
{
    HopfStarAlgebra cs3 = group_algebra(FiniteGroup::symmetric(3));
    PeterWeylData p = peter_weyl(cs3);
    REQUIRE(p.size() == 6);
    std::vector<bool> seen(6, false);
    for (std::size_t l = 0; l < 6; ++l) {
        CHECK(p.irreps[l].dim == 1);
        const Vector& u = p.irreps[l](0, 0);
        std::size_t nonzero = 0, at = 0;
        for (std::size_t i = 0; i < 6; ++i)
            if (!u[i].is_zero()) ++nonzero, at = i;
        CHECK(nonzero == 1);
        CHECK(u[at].is_one());
        seen[at] = true;
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
}

TEST_CASE("F(S3) decomposes as 1 + 1 + 2 with the classical characters")
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfStarAlgebra f = function_algebra(s3);
    PeterWeylData p = peter_weyl(f);
    REQUIRE(p.size() == 3);
    std::vector<std::size_t> dims;
    for (const auto& u : p.irreps) dims.push_back(u.dim);
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{1, 1, 2});

    auto chi = oracle::s3_character_table(s3.table());
    const std::size_t triv = index_of_character(p, chi[0]), sign = index_of_character(p, chi[1]),
                      two = index_of_character(p, chi[2]);
    REQUIRE(triv < 3);
    REQUIRE(sign < 3);
    REQUIRE(two < 3);
    CHECK(p.trivial == triv);

    // 2 (x) 2 = triv + sign + 2
    CHECK(p.fusion[two][two][triv] == 1);
    CHECK(p.fusion[two][two][sign] == 1);
    CHECK(p.fusion[two][two][two] == 1);
    CHECK(p.fusion[sign][sign][triv] == 1);
    CHECK(p.fusion[sign][two][two] == 1);
    CHECK(p.conj[two] == two);
    CHECK(p.conj[sign] == sign);
}

TEST_CASE("F(Z3) has the three characters 1, w, w-bar")
{
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    HopfStarAlgebra f = function_algebra(z3);
    PeterWeylData p = peter_weyl(f);
    REQUIRE(p.size() == 3);
    const int n = f.field_order();
    std::vector<std::size_t> idx;
    for (long j = 0; j < 3; ++j) {
        Vector chi = zero_vector(3);
        for (std::size_t x = 0; x < 3; ++x) chi[x] = Scalar::zeta(n, (n / 3) * j * static_cast<long>(x));
        idx.push_back(index_of_character(p, chi));
        REQUIRE(idx.back() < 3);
        CHECK(verify_corepresentation(f, p.irreps[idx.back()]));
    }
    CHECK(p.conj[idx[1]] == idx[2]);
    CHECK(p.conj[idx[2]] == idx[1]);
    CHECK(p.conj[idx[0]] == idx[0]);
}

TEST_CASE("CZ3: w (x) w = w-bar")
{
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    HopfStarAlgebra c = group_algebra(z3);
    PeterWeylData p = peter_weyl(c);
    auto irrep_of = [&](std::size_t g) { return index_of_character(p, unit_vector(3, g)); };
    const std::size_t g = irrep_of(1), g2 = irrep_of(2);
    CHECK(p.fusion[g][g][g2] == 1);
    CHECK(p.conj[g] == g2);
}

TEST_CASE("Peter-Weyl invariants on every catalog algebra")
{
    for (const auto& e : catalog()) {
        const HopfStarAlgebra& h = e.algebra;
        PeterWeylData p = peter_weyl(h);
        CHECK_MESSAGE(check_peter_weyl(h, p).empty(), e.name);
        std::size_t total = 0;
        Subspace sum(h.dim());
        for (std::size_t l = 0; l < p.size(); ++l) {
            total += p.irreps[l].dim * p.irreps[l].dim;
            sum = sum + p.blocks[l];
            CHECK_MESSAGE(verify_corepresentation(h, p.irreps[l]), e.name);
            // triv (x) l = l
            for (std::size_t n = 0; n < p.size(); ++n) CHECK(p.fusion[p.trivial][l][n] == (n == l ? 1 : 0));
            CHECK(p.conj[p.conj[l]] == l);
        }
        CHECK_MESSAGE(total == h.dim(), e.name);
        CHECK_MESSAGE(sum.dim() == h.dim(), e.name);

        // characters are orthonormal for the Haar state
        for (std::size_t l = 0; l < p.size(); ++l)
            for (std::size_t m = 0; m < p.size(); ++m) {
                Scalar ip = h.haar(h.multiply(p.irreps[l].character(), h.star(p.irreps[m].character())));
                CHECK_MESSAGE(ip == Scalar(l == m ? 1 : 0), e.name);
            }
    }
}

TEST_CASE("Haar pairing matrix of an irrep is diagonal with entries 1/d")
{
    HopfStarAlgebra f = function_algebra(FiniteGroup::symmetric(3));
    PeterWeylData p = peter_weyl(f);
    for (const auto& u : p.irreps) {
        Matrix m = haar_pairing_matrix(f, u);
        // orthogonality h(u_ij u_rs^*) = delta_ir delta_js / d holds for a unitary gauge;
        // in general the matrix is invertible
        CHECK(inverse(m).has_value());
    }
}

TEST_CASE("regauging preserves corepresentations and characters")
{
    HopfStarAlgebra f = function_algebra(FiniteGroup::symmetric(3));
    PeterWeylData p = peter_weyl(f);
    for (const auto& u : p.irreps) {
        Matrix t = Matrix::identity(u.dim);
        for (std::size_t i = 0; i + 1 < u.dim; ++i) t(i, i + 1) = Scalar(3);
        t(0, 0) = Scalar(2);
        Corepresentation v = regauge(u, t);
        CHECK(verify_corepresentation(f, v));
        CHECK(v.character() == u.character());
    }
    CHECK_THROWS_AS(regauge(p.irreps[0], Matrix(p.irreps[0].dim, p.irreps[0].dim)), ShapeError);
}

TEST_CASE("a scaled matrix is not a corepresentation")
{
    HopfStarAlgebra f = function_algebra(FiniteGroup::symmetric(3));
    PeterWeylData p = peter_weyl(f);
    for (auto u : p.irreps) {
        for (auto& row : u.entries)
            for (auto& x : row) x = Scalar(2) * x;
        std::string why;
        CHECK_FALSE(verify_corepresentation(f, u, &why));
        CHECK_FALSE(why.empty());
    }
}

TEST_CASE("the seed does not change the decomposition")
{
    HopfStarAlgebra f = catalog_algebra("f_d4");
    PeterWeylData a = peter_weyl(f, {1, 40}), b = peter_weyl(f, {99, 40});
    REQUIRE(a.size() == b.size());
    for (std::size_t l = 0; l < a.size(); ++l) {
        CHECK(a.blocks[l] == b.blocks[l]);
        CHECK(a.irreps[l].character() == b.irreps[l].character());
    }
    CHECK(a.fusion == b.fusion);
}
