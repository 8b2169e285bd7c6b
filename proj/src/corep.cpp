#include "hopfcheck/corep.hpp"

#include <algorithm>
#include <numeric>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/splitting.hpp"

namespace hopfcheck {

namespace {

Tensor2 outer(const Vector& a, const Vector& b)
{
    Tensor2 t(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) t(i, j) = a[i] * b[j];
    }
    return t;
}

long as_multiplicity(const Scalar& s)
{
    if (!s.is_rational()) throw TheoremViolation("fusion multiplicity is not rational: " + s.str());
    Rational q = s.rational();
    if (q.get_den() != 1 || q < 0 || !q.get_num().fits_slong_p())
        throw TheoremViolation("fusion multiplicity is not a non-negative integer: " + s.str());
    return q.get_num().get_si();
}

Subspace entry_span(const Corepresentation& u, std::size_t d)
{
    std::vector<Vector> vs;
    for (const auto& row : u.entries)
        for (const auto& v : row) vs.push_back(v);
    return Subspace::span(vs, d);
}

std::vector<Vector> splitting_candidates(const HopfStarAlgebra& h, const HopfStarAlgebra& dual_alg,
                                         const splitting::Options& so)
{
    // Group-likes of the dual (algebra maps of h) come first: for function
    // algebras these are the point evaluations, which split every block.
    std::vector<Vector> c = splitting::characters(h, so);
    const std::size_t d = dual_alg.dim();
    for (std::size_t k = 0; k < d; ++k) c.push_back(dual_alg.basis(k));
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < d && pairs < 256; ++i)
        for (std::size_t j = i + 1; j < d && pairs < 256; ++j, ++pairs) {
            Vector v = dual_alg.basis(i);
            v[j] += Scalar(1);
            c.push_back(std::move(v));
        }
    return c;
}

}  // namespace

Vector Corepresentation::character() const
{
    Vector chi = entries.at(0).at(0);
    for (std::size_t i = 1; i < dim; ++i) chi = chi + entries[i][i];
    return chi;
}

bool verify_corepresentation(const HopfStarAlgebra& h, const Corepresentation& u, std::string* why)
{
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    const std::size_t n = u.dim, d = h.dim();
    if (u.entries.size() != n) return fail("entry array has the wrong shape");
    for (const auto& row : u.entries) {
        if (row.size() != n) return fail("entry array has the wrong shape");
        for (const auto& v : row)
            if (v.size() != d) return fail("entry has the wrong length");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Tensor2 expect(d, d);
            for (std::size_t k = 0; k < n; ++k) expect = expect + outer(u(i, k), u(k, j));
            if (h.comultiply(u(i, j)) != expect)
                return fail("Delta(u_" + std::to_string(i) + std::to_string(j) + ") != sum_k u_ik (x) u_kj");
            if (h.counit(u(i, j)) != Scalar(i == j ? 1 : 0))
                return fail("eps(u_" + std::to_string(i) + std::to_string(j) + ") != delta");
        }
    std::vector<std::vector<Vector>> s(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = h.antipode(u(i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector left(d), right(d);
            for (std::size_t k = 0; k < n; ++k) {
                left = left + h.multiply(s[i][k], u(k, j));
                right = right + h.multiply(u(i, k), s[k][j]);
            }
            Vector expect = i == j ? h.unit() : zero_vector(d);
            if (left != expect || right != expect) return fail("S(u) is not a two-sided inverse of u");
        }
    return true;
}

PeterWeylData peter_weyl(const HopfStarAlgebra& h, const PeterWeylOptions& opt)
{
    const std::size_t d = h.dim();
    splitting::Options so{opt.seed, opt.max_attempts};
    HopfStarAlgebra a = dual(h);
    std::vector<Vector> idempotents = splitting::primitive_central_idempotents(a, so);
    std::vector<Vector> candidates;
    bool have_candidates = false;

    std::vector<std::pair<Corepresentation, Subspace>> found;
    for (const auto& e : idempotents) {
        std::size_t block_dim = 0;
        {
            std::vector<Vector> gens;
            for (std::size_t k = 0; k < d; ++k) gens.push_back(a.multiply(a.basis(k), e));
            block_dim = Subspace::span(gens, d).dim();
        }
        if (block_dim > 1 && !have_candidates) {
            candidates = splitting_candidates(h, a, so);
            have_candidates = true;
        }
        Subspace v = splitting::minimal_left_ideal(a, e, candidates, so);
        const std::size_t n = v.dim();
        Corepresentation u;
        u.dim = n;
        u.entries.assign(n, std::vector<Vector>(n, zero_vector(d)));
        for (std::size_t k = 0; k < d; ++k) {
            Matrix rho = splitting::left_action(a, v, a.basis(k));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) u.entries[i][j][k] = rho(i, j);
        }
        std::string why;
        if (!verify_corepresentation(h, u, &why)) throw TheoremViolation("extracted corepresentation: " + why);
        Subspace block = entry_span(u, d);
        if (block.dim() != n * n) throw TheoremViolation("entries of an irreducible corepresentation are dependent");
        found.emplace_back(std::move(u), std::move(block));
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (x.first.dim != y.first.dim) return x.first.dim < y.first.dim;
        return compare(x.second, y.second) < 0;
    });

    PeterWeylData p;
    for (auto& [u, b] : found) {
        p.irreps.push_back(std::move(u));
        p.blocks.push_back(std::move(b));
    }
    bool have_trivial = false;
    for (std::size_t l = 0; l < p.size(); ++l)
        if (p.irreps[l].dim == 1 && p.irreps[l](0, 0) == h.unit()) {
            if (have_trivial) throw TheoremViolation("two trivial corepresentations");
            p.trivial = l;
            have_trivial = true;
        }
    if (!have_trivial) throw TheoremViolation("no trivial corepresentation");

    p.fusion.resize(p.size());
    for (std::size_t l = 0; l < p.size(); ++l) {
        p.fusion[l].resize(p.size());
        for (std::size_t m = 0; m < p.size(); ++m) p.fusion[l][m] = fusion(h, p, l, m);
    }
    p.conj.assign(p.size(), p.size());
    for (std::size_t l = 0; l < p.size(); ++l) {
        for (std::size_t m = 0; m < p.size(); ++m)
            if (p.fusion[l][m][p.trivial] == 1) {
                if (p.conj[l] != p.size()) throw TheoremViolation("conjugate is not unique");
                p.conj[l] = m;
            }
        if (p.conj[l] == p.size()) throw TheoremViolation("irrep without a conjugate");
    }
    return p;
}

std::vector<long> fusion(const HopfStarAlgebra& h, const PeterWeylData& p, std::size_t l, std::size_t m)
{
    Vector prod = h.multiply(p.irreps.at(l).character(), p.irreps.at(m).character());
    std::vector<long> out;
    for (const auto& nu : p.irreps) out.push_back(as_multiplicity(h.haar(h.multiply(prod, h.star(nu.character())))));
    return out;
}

std::size_t conjugate(const PeterWeylData& p, std::size_t l) { return p.conj.at(l); }

Corepresentation regauge(const Corepresentation& u, const Matrix& t)
{
    if (t.rows() != u.dim || t.cols() != u.dim) throw ShapeError("regauge: gauge matrix has the wrong size");
    auto inv = inverse(t);
    if (!inv) throw ShapeError("regauge: gauge matrix is singular");
    const Matrix& ti = *inv;
    const std::size_t n = u.dim, d = u.entries.at(0).at(0).size();
    Corepresentation out;
    out.dim = n;
    out.entries.assign(n, std::vector<Vector>(n, zero_vector(d)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a) {
                if (t(i, a).is_zero()) continue;
                for (std::size_t b = 0; b < n; ++b)
                    if (!ti(b, j).is_zero()) axpy(out.entries[i][j], t(i, a) * ti(b, j), u(a, b));
            }
    return out;
}

Matrix haar_pairing_matrix(const HopfStarAlgebra& h, const Corepresentation& u)
{
    const std::size_t n = u.dim;
    Matrix m(n * n, n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            Vector us = h.star(u(r, s));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i * n + j, r * n + s) = h.haar(h.multiply(u(i, j), us));
        }
    return m;
}

std::vector<std::string> check_peter_weyl(const HopfStarAlgebra& h, const PeterWeylData& p)
{
    std::vector<std::string> bad;
    const std::size_t d = h.dim(), s = p.size();
    std::size_t total = 0;
    Subspace sum(d);
    for (std::size_t l = 0; l < s; ++l) {
        std::string why;
        if (!verify_corepresentation(h, p.irreps[l], &why)) bad.push_back("irrep " + std::to_string(l) + ": " + why);
        total += p.irreps[l].dim * p.irreps[l].dim;
        sum = sum + p.blocks[l];
    }
    if (total != d) bad.push_back("sum of squared dimensions differs from the dimension");
    if (sum.dim() != d) bad.push_back("blocks do not span the algebra");

    std::size_t trivial_count = 0;
    for (const auto& u : p.irreps)
        if (u.dim == 1 && u(0, 0) == h.unit()) ++trivial_count;
    if (trivial_count != 1) bad.push_back("trivial corepresentation is not unique");

    for (std::size_t l = 0; l < s; ++l) {
        const std::size_t dl = p.irreps[l].dim;
        if (p.conj[p.conj[l]] != l) bad.push_back("conjugation is not an involution at " + std::to_string(l));
        std::vector<Vector> starred;
        for (const auto& v : p.blocks[l].basis_vectors()) starred.push_back(h.star(v));
        if (!(Subspace::span(starred, d) == p.blocks[p.conj[l]]))
            bad.push_back("star does not map block " + std::to_string(l) + " onto its conjugate");
        for (std::size_t m = 0; m < s; ++m) {
            const auto& row = p.fusion[l][m];
            long weighted = 0;
            for (std::size_t n = 0; n < s; ++n) weighted += row[n] * static_cast<long>(p.irreps[n].dim);
            if (weighted != static_cast<long>(dl * p.irreps[m].dim))
                bad.push_back("fusion dimensions do not add up for " + std::to_string(l) + "," + std::to_string(m));
            if (m == p.trivial)
                for (std::size_t n = 0; n < s; ++n)
                    if (row[n] != (n == l ? 1 : 0)) bad.push_back("tensoring with the trivial irrep is not the identity");
            if (row[p.trivial] != (m == p.conj[l] ? 1 : 0)) bad.push_back("trivial multiplicity disagrees with conjugation");
            Scalar orth = h.haar(h.multiply(p.irreps[l].character(), h.star(p.irreps[m].character())));
            if (orth != Scalar(l == m ? 1 : 0)) bad.push_back("characters are not Haar-orthonormal");
        }
        for (const auto& row : p.irreps[l].entries)
            for (const auto& v : row)
                if (h.haar(v) != Scalar(l == p.trivial ? 1 : 0)) bad.push_back("Haar value on block " + std::to_string(l));
    }
    return bad;
}

}  // namespace hopfcheck
