// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hopfcheck/constructions.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/structure.hpp"

using namespace hopfcheck;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

std::vector<QuantumSubgroup> normal_subgroups(const HopfStarAlgebra& h)
{
    std::vector<QuantumSubgroup> out;
    for (auto& q : enumerate_quantum_subgroups(h))
        if (is_normal_coset(q)) out.push_back(std::move(q));
    return out;
}

// 1. all four normality criteria agree on every subgroup of every catalog algebra
void equivalence(Outcome& o)
{
    std::size_t subgroups = 0, normal = 0, disagreements = 0;
    for (const auto& e : catalog()) {
        PeterWeylData p = peter_weyl(e.algebra);
        for (const auto& q : enumerate_quantum_subgroups(e.algebra)) {
            NormalityReport r = normality_report(q, p, true);
            ++subgroups;
            normal += r.normal();
            const bool same = r.rep.normal == r.left_a_normal && r.left_a_normal == r.right_a_normal &&
                              r.right_a_normal == r.coset_equality;
            if (!same || !r.agree || !r.block_sum) {
                ++disagreements;
                o.require(false, e.name + ": " + r.describe());
            }
        }
    }
    o.detail << subgroups << " subgroups over 9 algebras, " << normal << " normal, " << disagreements
             << " disagreements";
}

// 2. the matrices h_N pi(u) for F(S3)
void matrices(Outcome& o)
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfStarAlgebra f = function_algebra(s3);
    PeterWeylData p = peter_weyl(f);
    std::size_t sign = p.size(), two = p.size();
    for (std::size_t l = 0; l < p.size(); ++l) {
        if (p.irreps[l].dim == 2) two = l;
        else if (l != p.trivial) sign = l;
    }
    o.require(sign < p.size() && two < p.size(), "irreps of F(S3) are not 1 + 1 + 2");
    if (!o.pass) return;
    Subset a3{s3.identity(), s3.index_of("(123)"), s3.index_of("(132)")}, t{s3.identity(), s3.index_of("(12)")};
    RepCriterion ra = is_normal_rep(make_subgroup(f, subgroup_ideal(s3, a3)), p);
    RepCriterion rt = is_normal_rep(make_subgroup(f, subgroup_ideal(s3, t)), p);
    o.require(ra.matrices[sign] == Matrix::identity(1), "M_sign != I for A3");
    o.require(ra.matrices[two].is_zero(), "M_2dim != 0 for A3");
    const Matrix& m = rt.matrices[two];
    o.require(!m.is_zero() && !m.is_identity(), "M_2dim in {0, I} for <(12)>");
    o.detail << "A3: M_sign = [" << ra.matrices[sign](0, 0) << "], M_2dim = 0; <(12)>: M_2dim = [[" << m(0, 0)
             << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
}

// 3. reconstruction for normal subgroups, phi identities for all subgroups
void reconstruction(Outcome& o)
{
    std::size_t normals = 0, all = 0;
    for (const auto& e : catalog()) {
        for (const auto& q : enumerate_quantum_subgroups(e.algebra)) {
            ++all;
            o.require(phi_map(q, comodule_splitting(q)).all(), e.name + ": phi identities");
            if (!is_normal_coset(q)) continue;
            ++normals;
            Reconstruction r = reconstruction_check(q);
            o.require(r.left == q.ideal && r.right == q.ideal && r.holds, e.name + ": ker pi != A+ A");
        }
    }
    o.detail << "ker pi = A+ A = A A+ on " << normals << " normal subgroups; phi identities on " << all << " subgroups";
}

// 4. third isomorphism on every admissible chain of F(S3) and F(D4)
void third_iso(Outcome& o)
{
    std::size_t chains = 0, proper = 0;
    for (const char* name : {"f_s3", "f_d4"}) {
        HopfStarAlgebra g = catalog_algebra(name);
        auto subs = enumerate_quantum_subgroups(g);
        for (const auto& n : subs) {
            if (!is_normal_coset(n)) continue;
            for (const auto& h : subs) {
                if (!n.ideal.contains(h.ideal)) continue;
                ThirdIsomorphism r = third_isomorphism_check(n, h);
                ++chains;
                o.require(r.lhs == r.rhs && r.holds(), std::string(name) + ": chain fails");
                const bool nontrivial = n.quotient.dim() > 1 && h.ideal.dim() > 0 && n.ideal != h.ideal;
                if (std::string(name) == "f_d4" && nontrivial && n.quotient.dim() == 2 && h.quotient.dim() == 4) ++proper;
            }
        }
    }
    o.require(proper > 0, "no Z2 < Z4 < D4 chain found");
    o.detail << chains << " chains, " << proper << " of the form Z2 < Z4 <= D4";
}

// 5. the CS3 pullback counterexample
void counterexample(Outcome& o)
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfStarAlgebra a = group_algebra(s3);
    const std::size_t c = s3.index_of("(123)"), c2 = s3.index_of("(132)");
    const int n = a.field_order();
    Scalar w = Scalar::zeta(n, n / 3), third(Rational(1, 3));
    Vector e = zero_vector(6);
    e[s3.identity()] = third;
    e[c] = third * w.conj();
    e[c2] = third * w;
    Subspace a0 = Subspace::span({a.basis(s3.identity()), a.basis(c), a.basis(c2)}, 6);
    Subspace i0 = Subspace::span({e}, 6);
    PullbackResult r = pullback_check(a, a0, i0, PullbackMode::PlainIdeal);
    o.require(!r.holds, "pullback identity unexpectedly holds");
    o.require(i0.dim() == 1 && r.intersection.dim() == 2, "dimensions differ");
    o.detail << "dim I0 = " << i0.dim() << ", dim(I cap A0) = " << r.intersection.dim() << ", identity "
             << (r.holds ? "holds" : "fails");
}

// 6. properties F and FD and their inheritance
void properties(Outcome& o)
{
    HopfStarAlgebra fs3 = catalog_algebra("f_s3"), cs3 = catalog_algebra("c_s3");
    o.require(property_F_check(fs3).holds, "F(S3) lacks F");
    o.require(property_FD_check(cs3).holds, "CS3 lacks FD");
    PropertyResult f = property_F_check(cs3);
    o.require(!f.holds && f.witness && f.witness->dim() == 2, "CS3 has F or no witness");
    std::size_t checks = 0;
    for (const auto& e : catalog()) {
        InheritanceReport r = property_inheritance_suite(e.algebra);
        checks += r.checks.size();
        for (const auto& fail : r.failures) o.require(false, e.name + ": " + fail);
    }
    o.detail << "F(F(S3)) yes, FD(CS3) yes, F(CS3) no (witness dim " << (f.witness ? f.witness->dim() : 0) << "), "
             << checks << " inherited properties verified";
}

// 7. tensor and crossed products
void products(Outcome& o)
{
    std::size_t pairs = 0;
    auto tensor_pairs = [&](const HopfStarAlgebra& a, const HopfStarAlgebra& b) {
        for (const auto& q1 : normal_subgroups(a))
            for (const auto& q2 : normal_subgroups(b)) {
                ++pairs;
                o.require(tensor_subgroup(q1, q2).quotient_identity, "tensor quotient identity");
            }
    };
    tensor_pairs(catalog_algebra("f_z2"), catalog_algebra("f_z3"));
    tensor_pairs(catalog_algebra("f_s3"), group_algebra(FiniteGroup::cyclic(2)));

    FiniteGroup z3 = FiniteGroup::cyclic(3), z2 = FiniteGroup::cyclic(2);
    HopfStarAlgebra a = function_algebra(z3);
    GroupAction inv = function_algebra_action(z3, z2, {{0, 1, 2}, {0, 2, 1}});
    HopfStarAlgebra x = crossed_product(a, inv);
    o.require(crossed_haar(a, inv) == compute_haar(x), "crossed Haar");
    CrossedSubgroup canon = crossed_canonical_subgroup(a, inv, x);
    o.require(canon.coset_identity && normality_report(canon.subgroup, peter_weyl(x)).normal(), "canonical subgroup");

    FiniteGroup k4 = FiniteGroup::direct_product(z2, z2);
    std::vector<std::vector<std::size_t>> theta;
    for (std::size_t g = 0; g < 4; ++g) theta.push_back(g / 2 ? std::vector<std::size_t>{0, 2, 1} : std::vector<std::size_t>{0, 1, 2});
    GroupAction act = function_algebra_action(z3, k4, theta);
    HopfStarAlgebra x4 = crossed_product(a, act);
    o.require(crossed_haar(a, act) == compute_haar(x4), "crossed Haar (Z2 x Z2)");
    CrossedSubgroup gen = crossed_general_subgroup(a, act, x4, Subspace(3), {0, 1});
    o.require(gen.coset_identity && gen.trivial_set_identity, "general subgroup coset identity");
    o.require(normality_report(gen.subgroup, peter_weyl(x4)).normal(), "general subgroup normality");
    o.require(gen.subgroup.quotient.dim() == 6, "general subgroup quotient dim");

    std::size_t normals = 0;
    for (const auto& e : catalog())
        for (const auto& q : normal_subgroups(e.algebra)) {
            ++normals;
            o.require(e.algebra.dim() == coset_algebras(q).g_mod_n.dim() * q.quotient.dim(), e.name + ": dimensions");
        }
    o.detail << pairs << " tensor pairs; crossed Haar exact; canonical and general subgroups normal (12 = "
             << coset_algebras(gen.subgroup).g_mod_n.dim() << " x 6); dim multiplicative on " << normals
             << " normal subgroups";
}

// 8. property suites on the catalog plus randomized negative probes
void suites(Outcome& o)
{
    std::mt19937 rng(8);
    std::size_t probes = 0;
    for (const auto& e : catalog()) {
        const HopfStarAlgebra& h = e.algebra;
        const std::size_t d = h.dim();
        o.require(check_axioms(h).all_passed(), e.name + ": axioms");
        o.require(haar_positive_definite(h), e.name + ": Haar positivity");
        for (std::size_t i = 0; i < d; ++i) {
            Tensor2 t = h.comultiply(h.basis(i));
            o.require(t.apply(h.haar()) == h.haar()[i] * h.unit(), e.name + ": left invariance");
            o.require(t.transpose().apply(h.haar()) == h.haar()[i] * h.unit(), e.name + ": right invariance");
        }
        LinearEndo id = LinearEndo::identity(d), s = LinearEndo::antipode(h), eps = LinearEndo::counit_unit(h);
        o.require(convolve(h, eps, id) == id && convolve(h, id, eps) == id, e.name + ": convolution unit");
        o.require(convolve(h, s, id) == eps && convolve(h, id, s) == eps, e.name + ": antipode inverse");
        o.require(same_structure(dual(dual(h)), h), e.name + ": dual involutive");
        PeterWeylData p = peter_weyl(h);
        std::size_t total = 0;
        for (const auto& u : p.irreps) total += u.dim * u.dim;
        o.require(total == d, e.name + ": Peter-Weyl completeness");
        for (std::size_t l = 0; l < p.size(); ++l)
            for (std::size_t m = 0; m < p.size(); ++m)
                o.require(h.haar(h.multiply(p.irreps[l].character(), h.star(p.irreps[m].character()))) ==
                              Scalar(l == m ? 1 : 0),
                          e.name + ": character orthonormality");

        std::vector<Subspace> ideals;
        for (const auto& q : enumerate_quantum_subgroups(h)) ideals.push_back(q.ideal);
        std::uniform_int_distribution<std::size_t> pos(0, d - 1), size(1, d - 1);
        std::uniform_int_distribution<int> coef(-2, 2);
        for (int k = 0; k < 12; ++k, ++probes) {
            std::vector<Vector> vs;
            for (std::size_t j = size(rng); j > 0; --j) {
                Vector v = zero_vector(d);
                for (int t = 0; t < 2; ++t) v[pos(rng)] += Scalar(coef(rng));
                vs.push_back(v);
            }
            Subspace sp = Subspace::span(vs, d);
            bool listed = false;
            for (const auto& i : ideals) listed |= i == sp;
            bool threw = false;
            try {
                make_subgroup(h, sp);
            } catch (const NotHopfIdeal&) {
                threw = true;
            }
            o.require(threw != listed, e.name + ": random probe misclassified");
        }
    }
    o.require(probes >= 100, "fewer than 100 probes");
    o.detail << "axioms, Haar, convolution, duality, Peter-Weyl and characters on 9 algebras; " << probes
             << " random ideal probes";
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"equivalence of the four normality criteria", equivalence},
        {"representation matrices for F(S3)", matrices},
        {"reconstruction lemma and splitting identities", reconstruction},
        {"third isomorphism theorem", third_iso},
        {"pullback counterexample in CS3", counterexample},
        {"properties F and FD with inheritance", properties},
        {"tensor and crossed products", products},
        {"property-based suites", suites},
    };
    const auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail.str() << std::endl;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "total " << secs << " s" << std::endl;
    return all ? 0 : 1;
}
