#include "hopfcheck/subgroup.hpp"

#include <sstream>

#include "hopfcheck/errors.hpp"

namespace hopfcheck {

namespace {

std::string show(const Vector& v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
    os << ']';
    return os.str();
}

Matrix column_matrix(const std::vector<Vector>& cols, std::size_t rows) { return Matrix::from_columns(cols, rows); }

Vector flatten(const Matrix& m)
{
    Vector out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

Tensor2 outer(const Vector& a, const Vector& b)
{
    Tensor2 t(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero())
            for (std::size_t j = 0; j < b.size(); ++j) t(i, j) = a[i] * b[j];
    return t;
}

// X lies in U (x) V iff its columns lie in U and its rows lie in V.
bool in_tensor_square(const Tensor2& x, const Subspace& b)
{
    for (std::size_t k = 0; k < x.cols(); ++k)
        if (!b.contains(x.col(k))) return false;
    for (std::size_t j = 0; j < x.rows(); ++j)
        if (!b.contains(x.row(j))) return false;
    return true;
}

// Matrix of the quotient map A -> A / ideal in the echelon complement basis.
Matrix complement_projection(const Subspace& ideal, const std::vector<std::size_t>& comp)
{
    const std::size_t d = ideal.ambient_dim(), q = comp.size();
    Matrix p(q, d);
    for (std::size_t t = 0; t < q; ++t) p(t, comp[t]) = Scalar(1);
    for (std::size_t r = 0; r < ideal.dim(); ++r)
        for (std::size_t t = 0; t < q; ++t) {
            const Scalar& c = ideal.basis()(r, comp[t]);
            if (!c.is_zero()) p(t, ideal.pivots()[r]) = -c;
        }
    return p;
}

std::vector<std::string> morphism_failures(const HopfStarAlgebra& g, const HopfStarAlgebra& y, const Matrix& pi)
{
    std::vector<std::string> bad;
    const std::size_t d = g.dim();
    if (pi.rows() != y.dim() || pi.cols() != d) {
        bad.push_back("projection has the wrong shape");
        return bad;
    }
    if (pi.apply(g.unit()) != y.unit()) bad.push_back("pi(1) != 1");
    for (std::size_t i = 0; i < d && bad.size() < 8; ++i) {
        Vector pe = pi.col(i);
        for (std::size_t j = 0; j < d; ++j)
            if (pi.apply(g.product(i, j)) != y.multiply(pe, pi.col(j))) {
                bad.push_back("pi is not multiplicative at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
                break;
            }
        if (pi * g.comultiply(g.basis(i)) * pi.transpose() != y.comultiply(pe))
            bad.push_back("(pi (x) pi) Delta != Delta pi at e_" + std::to_string(i));
        if (y.counit(pe) != g.counit(g.basis(i))) bad.push_back("eps pi != eps at e_" + std::to_string(i));
        if (pi.apply(g.antipode(g.basis(i))) != y.antipode(pe)) bad.push_back("pi S != S pi at e_" + std::to_string(i));
        if (pi.apply(g.star(g.basis(i))) != y.star(pe)) bad.push_back("pi does not commute with * at e_" + std::to_string(i));
    }
    if (rank(pi) != y.dim()) bad.push_back("pi is not surjective");
    return bad;
}

Subspace augmented(const HopfStarAlgebra& g, const Subspace& b)
{
    std::vector<Vector> eps(1, g.counit_vector());
    Subspace ker_eps = Subspace::kernel(Matrix::from_rows(eps, g.dim()));
    return b.intersect(ker_eps);
}

}  // namespace

Vector QuantumSubgroup::haar_pullback() const { return proj.transpose().apply(quotient.haar()); }

IdealCheck check_hopf_ideal(const HopfStarAlgebra& g, const Subspace& ideal)
{
    const std::size_t d = g.dim();
    if (ideal.ambient_dim() != d) throw ShapeError("ideal lives in the wrong ambient dimension");
    auto fail = [](std::string cond, Vector w) { return IdealCheck{false, std::move(cond), std::move(w)}; };
    std::vector<Vector> basis = ideal.basis_vectors();
    for (const auto& x : basis) {
        for (std::size_t i = 0; i < d; ++i) {
            if (!ideal.contains(g.multiply(g.basis(i), x))) return fail("not a left ideal", x);
            if (!ideal.contains(g.multiply(x, g.basis(i)))) return fail("not a right ideal", x);
        }
        if (!ideal.contains(g.star(x))) return fail("not closed under *", x);
        if (!g.counit(x).is_zero()) return fail("counit does not vanish", x);
    }
    Matrix q = complement_projection(ideal, ideal.complement_indices());
    for (const auto& x : basis)
        if (!(q * g.comultiply(x) * q.transpose()).is_zero())
            return fail("Delta(x) not in A (x) I + I (x) A", x);
    for (const auto& x : basis)
        if (!ideal.contains(g.antipode(x))) return fail("not closed under the antipode", x);
    return {};
}

QuantumSubgroup make_subgroup(const HopfStarAlgebra& g, const Subspace& ideal)
{
    IdealCheck c = check_hopf_ideal(g, ideal);
    if (!c.ok) throw NotHopfIdeal(c.condition + " (witness " + show(c.witness) + ")");

    const std::size_t d = g.dim();
    std::vector<std::size_t> comp = ideal.complement_indices();
    const std::size_t q = comp.size();
    Matrix p = complement_projection(ideal, comp);
    Matrix sec(d, q);
    for (std::size_t t = 0; t < q; ++t) sec(comp[t], t) = Scalar(1);

    StructureConstants sc;
    sc.dim = q;
    sc.field_order = g.field_order();
    for (auto i : comp) sc.labels.push_back(g.labels().at(i));
    for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = 0; t < q; ++t) {
            Vector v = p.apply(g.product(comp[s], comp[t]));
            for (std::size_t k = 0; k < q; ++k)
                if (!v[k].is_zero()) sc.mult.push_back({s, t, k, v[k]});
        }
    sc.unit = p.apply(g.unit());
    for (std::size_t s = 0; s < q; ++s) {
        Tensor2 x = p * g.comultiply(g.basis(comp[s])) * p.transpose();
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t k = 0; k < q; ++k)
                if (!x(j, k).is_zero()) sc.comult.push_back({s, j, k, x(j, k)});
    }
    sc.counit = zero_vector(q);
    for (std::size_t s = 0; s < q; ++s) sc.counit[s] = g.counit_vector()[comp[s]];
    sc.antipode = p * g.antipode_matrix() * sec;
    sc.star = p * g.star_matrix() * sec;

    QuantumSubgroup out;
    out.parent = g;
    out.ideal = ideal;
    out.quotient = HopfStarAlgebra(std::move(sc));
    out.proj = std::move(p);
    out.section = std::move(sec);
    return out;
}

QuantumSubgroup from_surjection(const HopfStarAlgebra& g, const HopfStarAlgebra& y, const Matrix& pi)
{
    auto bad = morphism_failures(g, y, pi);
    if (!bad.empty()) throw NotASubgroup(bad.front());
    QuantumSubgroup out;
    out.parent = g;
    out.ideal = Subspace::kernel(pi);
    out.quotient = y;
    out.proj = pi;
    // a right inverse of pi, for callers that need a basis lift
    auto s = solve_linear(pi, Matrix::identity(y.dim()));
    if (!s) throw NotASubgroup("pi is not surjective");
    out.section = std::move(*s);
    return out;
}

std::vector<std::string> verify_subgroup(const QuantumSubgroup& q)
{
    std::vector<std::string> bad = morphism_failures(q.parent, q.quotient, q.proj);
    if (bad.empty() && !(Subspace::kernel(q.proj) == q.ideal)) bad.push_back("ideal differs from ker pi");
    AxiomReport r = check_axioms(q.quotient);
    if (!r.all_passed()) bad.push_back("quotient fails axiom: " + r.first_failure()->name);
    return bad;
}

LinearEndo conditional_expectation(const QuantumSubgroup& q, Side side)
{
    const HopfStarAlgebra& g = q.parent;
    const std::size_t d = g.dim();
    Vector w = q.haar_pullback();
    Matrix e(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Tensor2 x = g.comultiply(g.basis(i));
        e.set_col(i, side == Side::Left ? x.apply(w) : x.transpose().apply(w));
    }
    return LinearEndo(std::move(e));
}

CosetAlgebras coset_algebras(const QuantumSubgroup& q)
{
    const HopfStarAlgebra& g = q.parent;
    const std::size_t d = g.dim(), n = q.quotient.dim();
    const Vector& one_n = q.quotient.unit();
    Matrix right(d * n, d), left(n * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Tensor2 x = g.comultiply(g.basis(i));
        Matrix r = x * q.proj.transpose() - outer(g.basis(i), one_n);
        Matrix l = q.proj * x - outer(one_n, g.basis(i));
        right.set_col(i, flatten(r));
        left.set_col(i, flatten(l));
    }
    CosetAlgebras c{Subspace::kernel(right), Subspace::kernel(left)};
    Subspace img_l = Subspace::image(conditional_expectation(q, Side::Left).matrix());
    Subspace img_r = Subspace::image(conditional_expectation(q, Side::Right).matrix());
    if (!(img_l == c.g_mod_n) || !(img_r == c.n_mod_g))
        throw TheoremViolation("coset algebra differs from the image of its conditional expectation");
    return c;
}

Tensor2 adjoint_coaction(const HopfStarAlgebra& g, const Vector& a, Side side)
{
    const std::size_t d = g.dim();
    std::vector<Scalar> t = g.comultiply_twice(a);
    const Matrix& s = g.antipode_matrix();
    Tensor2 out(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t l = 0; l < d; ++l) {
                const Scalar& c = t[(j * d + k) * d + l];
                if (c.is_zero()) continue;
                Vector prod = side == Side::Left ? g.multiply(g.basis(j), s.col(l)) : g.multiply(s.col(j), g.basis(l));
                for (std::size_t m = 0; m < d; ++m)
                    if (!prod[m].is_zero()) out(k, m) += c * prod[m];
            }
    return out;
}

namespace {

bool a_normal(const QuantumSubgroup& q, Side side)
{
    for (const auto& x : q.ideal.basis_vectors())
        if (!(q.proj * adjoint_coaction(q.parent, x, side)).is_zero()) return false;
    return true;
}

}  // namespace

bool is_left_a_normal(const QuantumSubgroup& q) { return a_normal(q, Side::Left); }
bool is_right_a_normal(const QuantumSubgroup& q) { return a_normal(q, Side::Right); }

bool is_normal_coset(const QuantumSubgroup& q)
{
    CosetAlgebras c = coset_algebras(q);
    return c.g_mod_n == c.n_mod_g;
}

RepCriterion is_normal_rep(const QuantumSubgroup& q, const PeterWeylData& p)
{
    RepCriterion r;
    Vector w = q.haar_pullback();
    for (std::size_t l = 0; l < p.size(); ++l) {
        const auto& u = p.irreps[l];
        Matrix m(u.dim, u.dim);
        for (std::size_t i = 0; i < u.dim; ++i)
            for (std::size_t j = 0; j < u.dim; ++j) m(i, j) = dot(w, u(i, j));
        if (m.is_identity()) r.trivial.push_back(l);
        else if (!m.is_zero()) r.normal = false;
        r.matrices.push_back(std::move(m));
    }
    return r;
}

std::string NormalityReport::describe() const
{
    std::ostringstream os;
    os << "rep=" << rep.normal << " left_a=" << left_a_normal << " right_a=" << right_a_normal
       << " coset=" << coset_equality << " S(N)={";
    for (std::size_t i = 0; i < rep.trivial.size(); ++i) os << (i ? "," : "") << rep.trivial[i];
    os << "}";
    for (std::size_t l = 0; l < rep.matrices.size(); ++l) {
        os << " M" << l << "=[";
        const Matrix& m = rep.matrices[l];
        for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "; " : "") << show(m.row(i));
        os << "]";
    }
    return os.str();
}

NormalityReport normality_report(const QuantumSubgroup& q, const PeterWeylData& p, bool allow_disagreement)
{
    NormalityReport r;
    r.rep = is_normal_rep(q, p);
    r.left_a_normal = is_left_a_normal(q);
    r.right_a_normal = is_right_a_normal(q);
    CosetAlgebras c = coset_algebras(q);
    r.coset_equality = c.g_mod_n == c.n_mod_g;
    r.agree = r.rep.normal == r.left_a_normal && r.rep.normal == r.right_a_normal && r.rep.normal == r.coset_equality;
    if (r.agree && r.rep.normal) {
        Subspace sum(q.parent.dim());
        for (auto l : r.rep.trivial) sum = sum + p.blocks[l];
        r.block_sum = sum == c.g_mod_n;
    }
    if (!allow_disagreement && (!r.agree || !r.block_sum))
        throw TheoremViolation("normality criteria disagree: " + r.describe());
    return r;
}

Subspace product_span(const HopfStarAlgebra& g, const Subspace& a, const Subspace& b)
{
    std::vector<Vector> out;
    for (const auto& x : a.basis_vectors())
        for (const auto& y : b.basis_vectors()) out.push_back(g.multiply(x, y));
    return Subspace::span(out, g.dim());
}

Reconstruction reconstruction_check(const QuantumSubgroup& q)
{
    const HopfStarAlgebra& g = q.parent;
    Subspace all = Subspace::full(g.dim());
    Reconstruction r;
    r.augmented_cosets = augmented(g, coset_algebras(q).g_mod_n);
    r.left = product_span(g, r.augmented_cosets, all);
    r.right = product_span(g, all, r.augmented_cosets);
    r.two_sided = product_span(g, r.right, all);
    r.holds = r.left == q.ideal && r.right == q.ideal && r.two_sided == q.ideal;
    return r;
}

Matrix comodule_splitting(const QuantumSubgroup& q)
{
    const HopfStarAlgebra& g = q.parent;
    const HopfStarAlgebra& n = q.quotient;
    const std::size_t d = g.dim(), m = n.dim();
    // unknown s(e_t) = sum_i s[i][t] e_i, flattened as i*m + t
    std::vector<Matrix> dcol;  // (id (x) pi) Delta(e_i), d x m
    for (std::size_t i = 0; i < d; ++i) dcol.push_back(g.comultiply(g.basis(i)) * q.proj.transpose());
    std::vector<Tensor2> dn;
    for (std::size_t t = 0; t < m; ++t) dn.push_back(n.comultiply(n.basis(t)));

    // the last d rows ask for s(1) = 1, which is dropped if inconsistent
    const std::size_t rows = m * m + m * d * m + d;
    Matrix sys(rows, d * m), rhs(rows, 1);
    std::size_t row = 0;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t t = 0; t < m; ++t, ++row) {
            for (std::size_t i = 0; i < d; ++i)
                if (!q.proj(r, i).is_zero()) sys(row, i * m + t) = q.proj(r, i);
            if (r == t) rhs(row, 0) = Scalar(1);
        }
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t v = 0; v < m; ++v, ++row) {
                for (std::size_t i = 0; i < d; ++i)
                    if (!dcol[i](a, v).is_zero()) sys(row, i * m + t) += dcol[i](a, v);
                for (std::size_t u = 0; u < m; ++u)
                    if (!dn[t](u, v).is_zero()) sys(row, a * m + u) -= dn[t](u, v);
            }
    for (std::size_t i = 0; i < d; ++i, ++row) {
        for (std::size_t t = 0; t < m; ++t)
            if (!n.unit()[t].is_zero()) sys(row, i * m + t) = n.unit()[t];
        rhs(row, 0) = g.unit()[i];
    }
    auto sol = solve_linear(sys, rhs);
    if (!sol) {
        Matrix a(rows - d, d * m), b(rows - d, 1);
        for (std::size_t r = 0; r < rows - d; ++r) {
            a.set_row(r, sys.row(r));
            b(r, 0) = rhs(r, 0);
        }
        sol = solve_linear(a, b);
    }
    if (!sol) throw TheoremViolation("no comodule splitting exists, contradicting cosemisimplicity");
    Matrix s(d, m);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t t = 0; t < m; ++t) s(i, t) = (*sol)(i * m + t, 0);
    return s;
}

PhiIdentities phi_map(const QuantumSubgroup& q, const Matrix& s)
{
    const HopfStarAlgebra& g = q.parent;
    const std::size_t d = g.dim();
    LinearEndo s_pi(s * q.proj);
    PhiIdentities r;
    r.phi = convolve(g, s_pi, LinearEndo::antipode(g));
    Subspace cosets = coset_algebras(q).g_mod_n;
    r.image_in_cosets = cosets.contains(Subspace::image(r.phi.matrix()));
    r.counit = true;
    for (std::size_t i = 0; i < d; ++i)
        if (g.counit(r.phi.image_of_basis(i)) != g.counit_vector()[i]) r.counit = false;
    LinearEndo lhs = LinearEndo::identity(d) - s_pi;
    LinearEndo inner = (LinearEndo::counit_unit(g) - LinearEndo::identity(d)).after(r.phi);
    r.splitting = lhs == convolve(g, inner, LinearEndo::identity(d));
    return r;
}

bool is_hopf_subalgebra(const HopfStarAlgebra& g, const Subspace& b, std::string* why)
{
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!b.contains(g.unit())) return fail("does not contain 1");
    std::vector<Vector> basis = b.basis_vectors();
    for (const auto& x : basis) {
        for (const auto& y : basis)
            if (!b.contains(g.multiply(x, y))) return fail("not closed under multiplication");
        if (!in_tensor_square(g.comultiply(x), b)) return fail("Delta does not map into B (x) B");
        if (!b.contains(g.antipode(x))) return fail("not closed under the antipode");
        if (!b.contains(g.star(x))) return fail("not closed under *");
    }
    return true;
}

ExactSequence exact_sequence_check(const QuantumSubgroup& q)
{
    ExactSequence r;
    Subspace cosets = coset_algebras(q).g_mod_n;
    r.coset_is_hopf_subalgebra = is_hopf_subalgebra(q.parent, cosets);
    r.reconstruction = reconstruction_check(q).holds;
    r.dimensions = q.parent.dim() == cosets.dim() * q.quotient.dim();
    return r;
}

HopfSubalgebra subalgebra_as_hopf(const HopfStarAlgebra& g, const Subspace& b)
{
    std::string why;
    if (!is_hopf_subalgebra(g, b, &why)) throw TheoremViolation("not a Hopf *-subalgebra: " + why);
    const std::size_t k = b.dim();
    std::vector<Vector> basis = b.basis_vectors();
    const auto& piv = b.pivots();
    StructureConstants sc;
    sc.dim = k;
    sc.field_order = g.field_order();
    for (std::size_t s = 0; s < k; ++s) {
        // label by the parent basis element at the pivot when the vector is a basis vector
        bool pure = true;
        for (std::size_t c = 0; c < basis[s].size(); ++c)
            if (c != piv[s] && !basis[s][c].is_zero()) pure = false;
        sc.labels.push_back(pure ? g.labels().at(piv[s]) : "b" + std::to_string(s));
    }
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) {
            Vector c = b.coordinates(g.multiply(basis[s], basis[t]));
            for (std::size_t u = 0; u < k; ++u)
                if (!c[u].is_zero()) sc.mult.push_back({s, t, u, c[u]});
        }
    sc.unit = b.coordinates(g.unit());
    sc.counit = zero_vector(k);
    sc.antipode = Matrix(k, k);
    sc.star = Matrix(k, k);
    for (std::size_t s = 0; s < k; ++s) {
        Tensor2 x = g.comultiply(basis[s]);
        for (std::size_t u = 0; u < k; ++u)
            for (std::size_t v = 0; v < k; ++v)
                if (!x(piv[u], piv[v]).is_zero()) sc.comult.push_back({s, u, v, x(piv[u], piv[v])});
        sc.counit[s] = g.counit(basis[s]);
        sc.antipode.set_col(s, b.coordinates(g.antipode(basis[s])));
        sc.star.set_col(s, b.coordinates(g.star(basis[s])));
    }
    return {HopfStarAlgebra(std::move(sc)), column_matrix(basis, g.dim())};
}

}  // namespace hopfcheck
