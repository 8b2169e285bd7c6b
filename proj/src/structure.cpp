#include "hopfcheck/structure.hpp"

#include <algorithm>
#include <set>

#include "hopfcheck/errors.hpp"

namespace hopfcheck {

namespace {

std::set<std::size_t> fusion_closure(const PeterWeylData& p, std::set<std::size_t> s)
{
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> add;
        for (auto l : s) {
            add.push_back(p.conj[l]);
            for (auto m : s)
                for (std::size_t n = 0; n < p.size(); ++n)
                    if (p.fusion[l][m][n] > 0) add.push_back(n);
        }
        for (auto x : add) grew |= s.insert(x).second;
    }
    return s;
}

std::string dims_of(const Subspace& s) { return "dim " + std::to_string(s.dim()); }

}  // namespace

std::vector<std::vector<std::size_t>> closed_irrep_sets(const PeterWeylData& p, const EnumerationCaps& caps)
{
    if (p.size() > caps.max_irreps)
        throw CapExceeded(std::to_string(p.size()) + " irreps exceed the cap of " + std::to_string(caps.max_irreps));
    std::set<std::set<std::size_t>> seen;
    std::vector<std::set<std::size_t>> queue{fusion_closure(p, {p.trivial})};
    seen.insert(queue.front());
    std::size_t examined = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto cur = queue[head];
        for (std::size_t l = 0; l < p.size(); ++l) {
            if (cur.count(l)) continue;
            if (++examined > caps.max_subsets)
                throw CapExceeded("more than " + std::to_string(caps.max_subsets) + " irrep subsets examined");
            auto next = cur;
            next.insert(l);
            next = fusion_closure(p, std::move(next));
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : seen) out.emplace_back(s.begin(), s.end());
    return out;
}

std::vector<HopfSubalgebraEntry> enumerate_hopf_subalgebras(const HopfStarAlgebra& h, const PeterWeylData& p,
                                                            const EnumerationCaps& caps)
{
    std::vector<HopfSubalgebraEntry> out;
    for (auto& set : closed_irrep_sets(p, caps)) {
        Subspace sum(h.dim());
        for (auto l : set) sum = sum + p.blocks[l];
        out.push_back({std::move(sum), std::move(set)});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare(a.space, b.space) < 0; });
    return out;
}

std::vector<QuantumSubgroup> enumerate_quantum_subgroups(const HopfStarAlgebra& h, const StructureOptions& opt)
{
    HopfStarAlgebra d = dual(h);
    PeterWeylData pd = peter_weyl(d, opt.peter_weyl);
    std::vector<QuantumSubgroup> out;
    for (const auto& b : enumerate_hopf_subalgebras(d, pd, opt.caps)) {
        // annihilator {x : f(x) = 0 for f in b}
        Subspace ideal = Subspace::kernel(b.space.basis());
        out.push_back(make_subgroup(h, ideal));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare(a.ideal, b.ideal) < 0; });
    return out;
}

SubgroupLattice subgroup_lattice(const HopfStarAlgebra& h, const StructureOptions& opt)
{
    SubgroupLattice l;
    l.algebra = h;
    l.hopf_subalgebras = enumerate_hopf_subalgebras(h, peter_weyl(h, opt.peter_weyl), opt.caps);
    l.quantum_subgroups = enumerate_quantum_subgroups(h, opt);
    for (const auto& q : l.quantum_subgroups) l.normal_flags.push_back(is_normal_coset(q));
    return l;
}

PropertyResult property_F_check(const HopfStarAlgebra& h, const StructureOptions& opt)
{
    PeterWeylData p = peter_weyl(h, opt.peter_weyl);
    std::vector<Subspace> cosets;
    for (const auto& q : enumerate_quantum_subgroups(h, opt)) {
        CosetAlgebras c = coset_algebras(q);
        if (c.g_mod_n == c.n_mod_g) cosets.push_back(c.g_mod_n);
    }
    for (const auto& b : enumerate_hopf_subalgebras(h, p, opt.caps))
        if (std::none_of(cosets.begin(), cosets.end(), [&](const Subspace& c) { return c == b.space; }))
            return {false, b.space};
    return {};
}

PropertyResult property_FD_check(const HopfStarAlgebra& h, const StructureOptions& opt)
{
    PeterWeylData p = peter_weyl(h, opt.peter_weyl);
    for (const auto& q : enumerate_quantum_subgroups(h, opt))
        if (!normality_report(q, p).normal()) return {false, q.ideal};
    return {};
}

PullbackResult pullback_check(const HopfStarAlgebra& a, const Subspace& a0, const Subspace& i0, PullbackMode mode)
{
    if (!a0.contains(a.unit())) throw ShapeError("A0 does not contain the unit");
    std::vector<Vector> b0 = a0.basis_vectors();
    for (const auto& x : b0)
        for (const auto& y : b0)
            if (!a0.contains(a.multiply(x, y))) throw ShapeError("A0 is not closed under multiplication");
    if (!a0.contains(i0)) throw NotHopfIdeal("I0 is not contained in A0");
    for (const auto& x : i0.basis_vectors()) {
        for (const auto& y : b0)
            if (!i0.contains(a.multiply(x, y)) || !i0.contains(a.multiply(y, x)))
                throw NotHopfIdeal("I0 is not a two-sided ideal of A0");
        if (!i0.contains(a.star(x))) throw NotHopfIdeal("I0 is not closed under *");
    }
    if (mode == PullbackMode::HopfIdeal) {
        HopfSubalgebra sub = subalgebra_as_hopf(a, a0);
        std::vector<Vector> coords;
        for (const auto& x : i0.basis_vectors()) coords.push_back(a0.coordinates(x));
        IdealCheck c = check_hopf_ideal(sub.algebra, Subspace::span(coords, a0.dim()));
        if (!c.ok) throw NotHopfIdeal("I0 is not a Hopf *-ideal of A0: " + c.condition);
    }
    Subspace all = Subspace::full(a.dim());
    PullbackResult r;
    r.generated = product_span(a, product_span(a, all, i0), all);
    r.intersection = r.generated.intersect(a0);
    r.holds = r.intersection == i0;
    return r;
}

ThirdIsomorphism third_isomorphism_check(const QuantumSubgroup& n, const QuantumSubgroup& h)
{
    if (!n.ideal.contains(h.ideal)) throw ContainmentViolated("ker(theta) is not contained in ker(pi)");
    if (!is_normal_coset(n)) throw NotNormalInner("N is not normal in G");
    ThirdIsomorphism r;
    // pi_1 on A_H with pi_1 theta = pi
    QuantumSubgroup n_in_h = from_surjection(h.quotient, n.quotient, n.proj * h.section);
    r.n_normal_in_h = is_normal_coset(n_in_h);

    Subspace g_mod_n = coset_algebras(n).g_mod_n;
    Subspace h_mod_n = coset_algebras(n_in_h).g_mod_n;
    std::vector<Vector> img;
    for (const auto& b : g_mod_n.basis_vectors()) img.push_back(h.project(b));
    r.image_identity = Subspace::span(img, h.quotient.dim()) == h_mod_n;

    HopfSubalgebra gn = subalgebra_as_hopf(n.parent, g_mod_n);
    HopfSubalgebra hn = subalgebra_as_hopf(h.quotient, h_mod_n);
    Matrix theta_r(h_mod_n.dim(), g_mod_n.dim());
    for (std::size_t s = 0; s < g_mod_n.dim(); ++s) {
        Vector t = h.project(g_mod_n.basis_vector(s));
        if (!h_mod_n.contains(t)) throw TheoremViolation("theta does not map A_{G/N} into A_{H/N}");
        theta_r.set_col(s, h_mod_n.coordinates(t));
    }
    QuantumSubgroup induced = from_surjection(gn.algebra, hn.algebra, theta_r);
    std::vector<Vector> lhs;
    for (const auto& c : coset_algebras(induced).g_mod_n.basis_vectors()) lhs.push_back(gn.inclusion.apply(c));
    r.lhs = Subspace::span(lhs, n.parent.dim());
    r.rhs = coset_algebras(h).g_mod_n;
    r.coset_identity = r.lhs == r.rhs;
    r.h_normal = is_normal_coset(h);
    if (r.h_normal) r.quotient_normal = is_normal_coset(induced);
    return r;
}

InheritanceReport property_inheritance_suite(const HopfStarAlgebra& g, const StructureOptions& opt)
{
    InheritanceReport r;
    r.has_f = property_F_check(g, opt).holds;
    r.has_fd = property_FD_check(g, opt).holds;
    std::vector<QuantumSubgroup> subs = enumerate_quantum_subgroups(g, opt);
    auto note = [&](bool ok, const std::string& what) { (ok ? r.checks : r.failures).push_back(what); };

    std::vector<std::pair<const QuantumSubgroup*, HopfSubalgebra>> quotients;
    for (const auto& q : subs) {
        CosetAlgebras c = coset_algebras(q);
        if (c.g_mod_n == c.n_mod_g) quotients.emplace_back(&q, subalgebra_as_hopf(g, c.g_mod_n));
    }

    r.pullback = true;
    for (const auto& [q, sub] : quotients) {
        for (const auto& inner : enumerate_quantum_subgroups(sub.algebra, opt)) {
            std::vector<Vector> vs;
            for (const auto& v : inner.ideal.basis_vectors()) vs.push_back(sub.inclusion.apply(v));
            Subspace i0 = Subspace::span(vs, g.dim());
            Subspace a0 = Subspace::image(sub.inclusion);
            if (!pullback_check(g, a0, i0, PullbackMode::HopfIdeal).holds) r.pullback = false;
        }
    }

    for (const auto& [q, sub] : quotients) {
        const std::string name = "G/N with A_{G/N} " + dims_of(Subspace::image(sub.inclusion));
        if (r.has_f) note(property_F_check(sub.algebra, opt).holds, name + " has property F");
        if (r.has_fd && r.pullback) note(property_FD_check(sub.algebra, opt).holds, name + " has property FD");
    }
    if (r.has_fd)
        for (const auto& q : subs)
            note(property_FD_check(q.quotient, opt).holds,
                 "quantum subgroup with quotient dim " + std::to_string(q.quotient.dim()) + " has property FD");
    return r;
}

}  // namespace hopfcheck
