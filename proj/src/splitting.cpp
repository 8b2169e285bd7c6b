#include "hopfcheck/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "hopfcheck/errors.hpp"

namespace hopfcheck::splitting {

namespace {

using Complex = std::complex<long double>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

// One embedding zeta -> exp(2 pi i k / n) per complex-conjugate pair.
std::vector<int> embedding_representatives(int n)
{
    if (n <= 2) return {1};
    std::vector<int> reps;
    for (int k = 1; 2 * k < n; ++k)
        if (std::gcd(k, n) == 1) reps.push_back(k);
    return reps;
}

std::vector<Complex> numeric_eigenvalues(const Matrix& m, int k)
{
    const auto r = static_cast<Eigen::Index>(m.rows());
    CMatrix cm(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) cm(i, j) = m(i, j).embed(k);
    Eigen::ComplexEigenSolver<CMatrix> solver(cm, false);
    std::vector<Complex> out;
    const auto& ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        bool dup = false;
        for (const auto& z : out)
            if (std::abs(z - ev(i)) < 1e-9L * (1 + std::abs(z))) dup = true;
        if (!dup) out.push_back(ev(i));
    }
    return out;
}

bool singular_at(const Matrix& m, const Scalar& t)
{
    Matrix s = m;
    for (std::size_t i = 0; i < s.rows(); ++i) s(i, i) -= t;
    return rank(s) < s.rows();
}

Matrix shifted(const Matrix& m, const Scalar& t)
{
    Matrix s = m;
    for (std::size_t i = 0; i < s.rows(); ++i) s(i, i) -= t;
    return s;
}

// Matrix of x -> x y (right = true) or x -> y x on the subspace s.
Matrix multiplication_matrix(const HopfStarAlgebra& a, const Subspace& s, const Vector& y, bool right)
{
    const std::size_t k = s.dim();
    Matrix m(k, k);
    for (std::size_t t = 0; t < k; ++t) {
        Vector b = s.basis_vector(t);
        Vector p = right ? a.multiply(b, y) : a.multiply(y, b);
        if (!s.contains(p)) throw TheoremViolation("multiplication leaves the subspace it should preserve");
        m.set_col(t, s.coordinates(p));
    }
    return m;
}

Subspace lift_kernel(const Subspace& s, const Matrix& coords_kernel)
{
    std::vector<Vector> vs;
    for (std::size_t r = 0; r < coords_kernel.rows(); ++r) vs.push_back(s.from_coordinates(coords_kernel.row(r)));
    return Subspace::span(vs, s.ambient_dim());
}

Vector random_combination(const std::vector<Vector>& basis, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-3, 3);
    Vector v(basis.front().size());
    for (const auto& b : basis) {
        int c = dist(rng);
        if (c) axpy(v, Scalar(c), b);
    }
    return v;
}

}  // namespace

std::optional<Rational> rationalize(long double x, long max_den, long double tol)
{
    if (!std::isfinite(x)) return std::nullopt;
    long double frac = x;
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;  // convergents h1/k1
    for (int iter = 0; iter < 64; ++iter) {
        long double a = std::floor(frac);
        if (std::fabs(a) > 9.0e15L) break;
        long long ai = static_cast<long long>(a);
        long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        long double approx = static_cast<long double>(h1) / static_cast<long double>(k1);
        if (std::fabs(approx - x) <= tol * std::max<long double>(1, std::fabs(x))) {
            Rational q(mpz_class(std::to_string(h1)), mpz_class(std::to_string(k1)));
            q.canonicalize();
            return q;
        }
        long double rem = frac - a;
        if (rem == 0) break;
        frac = 1 / rem;
    }
    return std::nullopt;
}

std::vector<Scalar> field_eigenvalues(const Matrix& m, int order)
{
    if (m.rows() != m.cols()) throw ShapeError("field_eigenvalues: matrix must be square");
    if (m.rows() == 0) return {};
    const int n = order;
    const int phi = euler_phi(n);
    const std::vector<int> reps = embedding_representatives(n);
    std::vector<std::vector<Complex>> numeric;
    for (int k : reps) numeric.push_back(numeric_eigenvalues(m, k));

    RMatrix sys(2 * reps.size(), phi);
    for (std::size_t r = 0; r < reps.size(); ++r)
        for (int j = 0; j < phi; ++j) {
            long double ang = kTwoPi * static_cast<long double>((static_cast<long>(j) * reps[r]) % n) / n;
            sys(2 * r, j) = std::cos(ang);
            sys(2 * r + 1, j) = std::sin(ang);
        }
    Eigen::ColPivHouseholderQR<RMatrix> qr(sys);

    std::vector<Scalar> found;
    const std::size_t others = reps.size() - 1;
    std::vector<std::size_t> choice(others, 0);
    for (const Complex& first : numeric[0]) {
        // enumerate the assignments of conjugates in the remaining embeddings
        std::fill(choice.begin(), choice.end(), 0);
        long budget = 200000;
        while (budget-- > 0) {
            RVector rhs(2 * reps.size());
            rhs(0) = first.real();
            rhs(1) = first.imag();
            for (std::size_t r = 0; r < others; ++r) {
                rhs(2 * (r + 1)) = numeric[r + 1][choice[r]].real();
                rhs(2 * (r + 1) + 1) = numeric[r + 1][choice[r]].imag();
            }
            RVector c = qr.solve(rhs);
            long double resid = (sys * c - rhs).norm();
            if (resid <= 1e-7L * (1 + rhs.norm())) {
                std::vector<Rational> coeffs(phi);
                bool ok = true;
                for (int j = 0; j < phi && ok; ++j) {
                    auto q = rationalize(c(j));
                    if (!q) ok = false;
                    else coeffs[j] = *q;
                }
                if (ok) {
                    Scalar t = n <= 2 ? Scalar(coeffs[0]) : Scalar::from_coeffs(n, coeffs);
                    bool seen = std::any_of(found.begin(), found.end(), [&](const Scalar& s) { return s == t; });
                    if (!seen && singular_at(m, t)) found.push_back(t);
                }
            }
            // next assignment
            std::size_t pos = 0;
            while (pos < others) {
                if (++choice[pos] < numeric[pos + 1].size()) break;
                choice[pos] = 0;
                ++pos;
            }
            if (pos == others) break;
        }
    }
    std::sort(found.begin(), found.end(), [](const Scalar& a, const Scalar& b) { return a.compare(b) < 0; });
    return found;
}

Subspace center(const HopfStarAlgebra& a)
{
    const std::size_t d = a.dim();
    Matrix sys(d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            // column j: contribution of z_j to (z e_i - e_i z)
            for (const auto& [k, c] : a.product_terms(j, i)) sys(i * d + k, j) += c;
            for (const auto& [k, c] : a.product_terms(i, j)) sys(i * d + k, j) -= c;
        }
    return Subspace::kernel(sys);
}

std::optional<Vector> ideal_unit(const HopfStarAlgebra& a, const Subspace& ideal)
{
    const std::size_t k = ideal.dim(), d = a.dim();
    if (k == 0) return std::nullopt;
    std::vector<Vector> b = ideal.basis_vectors();
    Matrix sys(2 * k * d, k), rhs(2 * k * d, 1);
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t s = 0; s < k; ++s) {
            Vector left = a.multiply(b[s], b[t]);
            Vector right = a.multiply(b[t], b[s]);
            for (std::size_t c = 0; c < d; ++c) {
                sys(t * d + c, s) = left[c];
                sys(k * d + t * d + c, s) = right[c];
            }
        }
        for (std::size_t c = 0; c < d; ++c) {
            rhs(t * d + c, 0) = b[t][c];
            rhs(k * d + t * d + c, 0) = b[t][c];
        }
    }
    auto sol = solve_linear(sys, rhs);
    if (!sol) return std::nullopt;
    return ideal.from_coordinates(sol->col(0));
}

std::vector<Vector> primitive_central_idempotents(const HopfStarAlgebra& a, const Options& opt)
{
    const int n = a.field_order();
    Subspace z = center(a);
    std::vector<Subspace> pending{z}, done;
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    while (!pending.empty()) {
        Subspace e = std::move(pending.back());
        pending.pop_back();
        if (e.dim() == 1) {
            done.push_back(std::move(e));
            continue;
        }
        bool split = false;
        std::vector<Vector> basis = e.basis_vectors();
        for (int attempt = 0; attempt < opt.max_attempts && !split; ++attempt) {
            Vector y = random_combination(basis, rng);
            Matrix m = multiplication_matrix(a, e, y, false);
            std::vector<Scalar> eig = field_eigenvalues(m, n);
            std::vector<Subspace> parts;
            std::size_t total = 0;
            for (const auto& t : eig) {
                parts.push_back(lift_kernel(e, kernel_basis(shifted(m, t))));
                total += parts.back().dim();
            }
            if (total == e.dim() && parts.size() >= 2) {
                for (auto& p : parts) pending.push_back(std::move(p));
                split = true;
            }
        }
        if (!split) throw SplittingFailed(n, "center of a " + std::to_string(a.dim()) + "-dimensional algebra");
    }
    std::vector<Vector> idempotents;
    for (const auto& line : done) {
        auto u = ideal_unit(a, line);
        if (!u) throw TheoremViolation("minimal central ideal without a unit");
        idempotents.push_back(std::move(*u));
    }
    std::sort(idempotents.begin(), idempotents.end(), [](const Vector& x, const Vector& y) { return compare(x, y) < 0; });
    return idempotents;
}

std::vector<Vector> characters(const HopfStarAlgebra& a, const Options& opt)
{
    std::vector<Vector> out;
    const std::size_t d = a.dim();
    for (const auto& e : primitive_central_idempotents(a, opt)) {
        std::vector<Vector> block;
        for (std::size_t k = 0; k < d; ++k) block.push_back(a.multiply(a.basis(k), e));
        if (Subspace::span(block, d).dim() != 1) continue;
        std::size_t p = 0;
        while (e[p].is_zero()) ++p;
        Scalar inv = e[p].inverse();
        Vector chi(d);
        for (std::size_t k = 0; k < d; ++k) chi[k] = block[k][p] * inv;
        out.push_back(std::move(chi));
    }
    return out;
}

Matrix left_action(const HopfStarAlgebra& a, const Subspace& v, const Vector& f)
{
    return multiplication_matrix(a, v, f, false);
}

Subspace minimal_left_ideal(const HopfStarAlgebra& a, const Vector& central_idempotent,
                            const std::vector<Vector>& candidates, const Options& opt)
{
    const std::size_t d = a.dim();
    const int n = a.field_order();
    std::vector<Vector> gens;
    for (std::size_t k = 0; k < d; ++k) gens.push_back(a.multiply(a.basis(k), central_idempotent));
    Subspace block = Subspace::span(gens, d);
    std::size_t deg = 1;
    while ((deg + 1) * (deg + 1) <= block.dim()) ++deg;
    if (deg * deg != block.dim()) throw SplittingFailed(n, "block of non-square dimension");
    if (deg == 1) return block;

    Vector p = central_idempotent;
    Subspace left = block;  // = A p
    std::mt19937_64 rng(opt.seed ^ 0xc2b2ae3d27d4eb4fULL);
    const std::size_t fixed = candidates.size();
    const std::size_t budget = fixed + static_cast<std::size_t>(opt.max_attempts);
    for (std::size_t tries = 0; tries < budget; ++tries) {
        Vector x = tries < fixed ? candidates[tries] : random_combination(candidates.empty() ? block.basis_vectors() : candidates, rng);
        Vector y = a.multiply(a.multiply(p, x), p);
        if (is_zero(y)) continue;
        Matrix m = multiplication_matrix(a, left, y, true);
        std::vector<Scalar> eig = field_eigenvalues(m, n);
        std::optional<Subspace> best;
        for (const auto& t : eig) {
            Subspace w = lift_kernel(left, kernel_basis(shifted(m, t)));
            if (w.dim() == 0 || w.dim() >= left.dim() || w.dim() % deg) continue;
            if (!best || w.dim() < best->dim()) best = std::move(w);
        }
        if (!best) continue;
        if (best->dim() == deg) return *best;
        // Shrink to the smaller left ideal and keep refining inside its corner.
        std::vector<Vector> wb = best->basis_vectors();
        const std::size_t k = wb.size();
        Matrix sys(k * d, k), rhs(k * d, 1);
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = 0; t < k; ++t) {
                Vector prod = a.multiply(wb[s], wb[t]);
                for (std::size_t c = 0; c < d; ++c) sys(s * d + c, t) = prod[c];
            }
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t c = 0; c < d; ++c) rhs(s * d + c, 0) = wb[s][c];
        auto sol = solve_linear(sys, rhs);
        if (!sol) throw TheoremViolation("left ideal without a generating idempotent");
        Vector q = best->from_coordinates(sol->col(0));
        if (a.multiply(q, q) != q) throw TheoremViolation("generating element of a left ideal is not idempotent");
        p = std::move(q);
        left = std::move(*best);
        tries = static_cast<std::size_t>(-1);  // restart on the new corner; left shrinks each time
    }
    throw SplittingFailed(n, "no rank-one idempotent found in a " + std::to_string(deg) + "x" + std::to_string(deg) +
                                 " block");
}

}  // namespace hopfcheck::splitting
