#include "hopfcheck/hopf.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <sstream>

#include "hopfcheck/errors.hpp"

namespace hopfcheck {

struct HopfStarAlgebra::HaarCache {
    std::once_flag once;
    Vector value;
    std::exception_ptr error;
};

namespace {

void require_order(const Scalar& x, int order, const char* what)
{
    if (x.is_rational()) return;
    if (x.order() != order)
        throw FieldMismatch(std::string(what) + ": scalar of order " + std::to_string(x.order()) +
                            " in an algebra over Q(zeta_" + std::to_string(order) + ")");
}

std::string idx(std::initializer_list<std::size_t> list)
{
    std::ostringstream os;
    const char* names[] = {"i", "j", "k", "l"};
    std::size_t n = 0;
    for (auto v : list) {
        if (n) os << ",";
        os << names[n++] << "=" << v;
    }
    return os.str();
}

}  // namespace

HopfStarAlgebra::HopfStarAlgebra(StructureConstants sc) : sc_(std::move(sc)), haar_cache_(std::make_shared<HaarCache>())
{
    const std::size_t d = sc_.dim;
    if (d == 0) throw ShapeError("algebra dimension must be positive");
    if (sc_.labels.empty())
        for (std::size_t i = 0; i < d; ++i) sc_.labels.push_back("e" + std::to_string(i));
    if (sc_.labels.size() != d) throw ShapeError("basis_labels: expected " + std::to_string(d) + " labels");
    if (sc_.unit.size() != d) throw ShapeError("unit: expected length " + std::to_string(d));
    if (sc_.counit.size() != d) throw ShapeError("counit: expected length " + std::to_string(d));
    if (sc_.antipode.rows() != d || sc_.antipode.cols() != d) throw ShapeError("antipode: expected a dim x dim matrix");
    if (sc_.star.rows() != d || sc_.star.cols() != d) throw ShapeError("star: expected a dim x dim matrix");

    mult_.assign(d * d, {});
    comult_.assign(d, {});
    for (const auto& t : sc_.mult) {
        if (t.i >= d || t.j >= d || t.k >= d) throw ShapeError("mult: index out of range");
        require_order(t.value, sc_.field_order, "mult");
        if (t.value.is_zero()) continue;
        auto& terms = mult_[t.i * d + t.j];
        bool merged = false;
        for (auto& [k, c] : terms)
            if (k == t.k) {
                c += t.value;
                merged = true;
            }
        if (!merged) terms.emplace_back(t.k, t.value);
    }
    for (const auto& t : sc_.comult) {
        if (t.i >= d || t.j >= d || t.k >= d) throw ShapeError("comult: index out of range");
        require_order(t.value, sc_.field_order, "comult");
        if (t.value.is_zero()) continue;
        auto& terms = comult_[t.i];
        bool merged = false;
        for (auto& u : terms)
            if (u.j == t.j && u.k == t.k) {
                u.value += t.value;
                merged = true;
            }
        if (!merged) terms.push_back(t);
    }
    for (auto& terms : mult_)
        std::erase_if(terms, [](const auto& p) { return p.second.is_zero(); });
    for (auto& terms : comult_)
        std::erase_if(terms, [](const Triple& t) { return t.value.is_zero(); });

    // Canonical triple lists: sorted, merged, zero-free.
    sc_.mult.clear();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto& terms = mult_[i * d + j];
            std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [k, c] : terms) sc_.mult.push_back({i, j, k, c});
        }
    sc_.comult.clear();
    for (std::size_t i = 0; i < d; ++i) {
        auto& terms = comult_[i];
        std::sort(terms.begin(), terms.end(),
                  [](const Triple& a, const Triple& b) { return a.j != b.j ? a.j < b.j : a.k < b.k; });
        for (const auto& t : terms) sc_.comult.push_back(t);
    }
    for (const auto& x : sc_.unit) require_order(x, sc_.field_order, "unit");
    for (const auto& x : sc_.counit) require_order(x, sc_.field_order, "counit");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            require_order(sc_.antipode(i, j), sc_.field_order, "antipode");
            require_order(sc_.star(i, j), sc_.field_order, "star");
        }
}

HopfStarAlgebra HopfStarAlgebra::with_labels(std::vector<std::string> labels) const
{
    StructureConstants sc = sc_;
    sc.labels = std::move(labels);
    return HopfStarAlgebra(std::move(sc));
}

Vector HopfStarAlgebra::product(std::size_t i, std::size_t j) const
{
    Vector v(dim());
    for (const auto& [k, c] : mult_[i * dim() + j]) v[k] += c;
    return v;
}

Vector HopfStarAlgebra::multiply(const Vector& a, const Vector& b) const
{
    const std::size_t d = dim();
    if (a.size() != d || b.size() != d) throw ShapeError("multiply: element length mismatch");
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero()) continue;
            const auto& terms = mult_[i * d + j];
            if (terms.empty()) continue;
            Scalar ab = a[i] * b[j];
            for (const auto& [k, c] : terms) out[k].add_product(ab, c);
        }
    }
    return out;
}

Tensor2 HopfStarAlgebra::comultiply(const Vector& a) const
{
    const std::size_t d = dim();
    if (a.size() != d) throw ShapeError("comultiply: element length mismatch");
    Tensor2 x(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& t : comult_[i]) x(t.j, t.k).add_product(a[i], t.value);
    }
    return x;
}

std::vector<Scalar> HopfStarAlgebra::comultiply_twice(const Vector& a) const
{
    const std::size_t d = dim();
    Tensor2 x = comultiply(a);
    std::vector<Scalar> out(d * d * d);
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t l = 0; l < d; ++l) {
            const Scalar& c = x(m, l);
            if (c.is_zero()) continue;
            for (const auto& t : comult_[m]) out[(t.j * d + t.k) * d + l].add_product(c, t.value);
        }
    return out;
}

Scalar HopfStarAlgebra::counit(const Vector& a) const { return dot(sc_.counit, a); }

Vector HopfStarAlgebra::antipode(const Vector& a) const { return sc_.antipode.apply(a); }

Vector HopfStarAlgebra::star(const Vector& a) const { return sc_.star.apply(hopfcheck::conj(a)); }

Tensor2 HopfStarAlgebra::multiply(const Tensor2& x, const Tensor2& y) const
{
    const std::size_t d = dim();
    Tensor2 out(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const Scalar& xab = x(a, b);
            if (xab.is_zero()) continue;
            for (std::size_t c = 0; c < d; ++c) {
                const auto& left = mult_[a * d + c];
                if (left.empty()) continue;
                for (std::size_t e = 0; e < d; ++e) {
                    const Scalar& yce = y(c, e);
                    if (yce.is_zero()) continue;
                    const auto& right = mult_[b * d + e];
                    if (right.empty()) continue;
                    Scalar coef = xab * yce;
                    for (const auto& [p, cp] : left) {
                        Scalar cc = coef * cp;
                        for (const auto& [q, cq] : right) out(p, q).add_product(cc, cq);
                    }
                }
            }
        }
    return out;
}

const Vector& HopfStarAlgebra::haar() const
{
    if (!haar_cache_) throw NotCosemisimple("empty algebra has no Haar functional");
    std::call_once(haar_cache_->once, [this] {
        try {
            haar_cache_->value = compute_haar(*this);
        } catch (...) {
            haar_cache_->error = std::current_exception();
        }
    });
    if (haar_cache_->error) std::rethrow_exception(haar_cache_->error);
    return haar_cache_->value;
}

bool same_structure(const HopfStarAlgebra& a, const HopfStarAlgebra& b)
{
    const auto& x = a.structure();
    const auto& y = b.structure();
    if (x.dim != y.dim) return false;
    auto same_triples = [](const std::vector<Triple>& p, const std::vector<Triple>& q) {
        if (p.size() != q.size()) return false;
        for (std::size_t n = 0; n < p.size(); ++n)
            if (p[n].i != q[n].i || p[n].j != q[n].j || p[n].k != q[n].k || p[n].value != q[n].value) return false;
        return true;
    };
    return same_triples(x.mult, y.mult) && same_triples(x.comult, y.comult) && x.unit == y.unit &&
           x.counit == y.counit && x.antipode == y.antipode && x.star == y.star;
}

bool AxiomReport::all_passed() const { return first_failure() == nullptr; }

const AxiomResult* AxiomReport::first_failure() const
{
    for (const auto& r : results)
        if (!r.passed) return &r;
    return nullptr;
}

namespace {

// Runs one axiom, recording the first witness produced by the check.
class AxiomRunner {
public:
    explicit AxiomRunner(AxiomReport& report) : report_(report) {}

    template <class F>
    void run(const std::string& name, F&& check)
    {
        AxiomResult r;
        r.name = name;
        try {
            std::optional<std::string> w = check();
            if (w) {
                r.passed = false;
                r.witness = *w;
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.witness = e.what();
        }
        report_.results.push_back(std::move(r));
    }

private:
    AxiomReport& report_;
};

}  // namespace

AxiomReport check_axioms(const HopfStarAlgebra& H)
{
    AxiomReport report;
    AxiomRunner run(report);
    const std::size_t d = H.dim();
    using W = std::optional<std::string>;

    run.run("associativity", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vector ij = H.product(i, j);
                for (std::size_t k = 0; k < d; ++k)
                    if (H.multiply(ij, H.basis(k)) != H.multiply(H.basis(i), H.product(j, k)))
                        return idx({i, j, k});
            }
        return std::nullopt;
    });
    run.run("unitality", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i) {
            Vector e = H.basis(i);
            if (H.multiply(H.unit(), e) != e || H.multiply(e, H.unit()) != e) return idx({i});
        }
        return std::nullopt;
    });
    run.run("coassociativity", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Scalar> left = H.comultiply_twice(H.basis(i));
            std::vector<Scalar> right(d * d * d);
            Tensor2 x = H.comultiply(H.basis(i));
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t m = 0; m < d; ++m) {
                    if (x(j, m).is_zero()) continue;
                    for (const auto& t : H.coproduct_terms(m))
                        right[(j * d + t.j) * d + t.k].add_product(x(j, m), t.value);
                }
            if (left != right) return idx({i});
        }
        return std::nullopt;
    });
    run.run("counit", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i) {
            Tensor2 x = H.comultiply(H.basis(i));
            Vector left(d), right(d);
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    if (x(j, k).is_zero()) continue;
                    left[k].add_product(H.counit_vector()[j], x(j, k));
                    right[j].add_product(H.counit_vector()[k], x(j, k));
                }
            if (left != H.basis(i) || right != H.basis(i)) return idx({i});
        }
        return std::nullopt;
    });
    run.run("comultiplication is an algebra map", [&]() -> W {
        Tensor2 one(d, d);
        const Vector& u = H.unit();
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) one(j, k) = u[j] * u[k];
        if (H.comultiply(u) != one) return std::string("Delta(1) != 1 (x) 1");
        std::vector<Tensor2> deltas;
        for (std::size_t i = 0; i < d; ++i) deltas.push_back(H.comultiply(H.basis(i)));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (H.comultiply(H.product(i, j)) != H.multiply(deltas[i], deltas[j])) return idx({i, j});
        return std::nullopt;
    });
    run.run("counit is an algebra map", [&]() -> W {
        if (!H.counit(H.unit()).is_one()) return std::string("eps(1) != 1");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (H.counit(H.product(i, j)) != H.counit_vector()[i] * H.counit_vector()[j]) return idx({i, j});
        return std::nullopt;
    });
    run.run("antipode", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i) {
            Vector left(d), right(d);
            for (const auto& t : H.coproduct_terms(i)) {
                axpy(left, t.value, H.multiply(H.antipode(H.basis(t.j)), H.basis(t.k)));
                axpy(right, t.value, H.multiply(H.basis(t.j), H.antipode(H.basis(t.k))));
            }
            Vector expect = H.counit_vector()[i] * H.unit();
            if (left != expect || right != expect) return idx({i});
        }
        return std::nullopt;
    });
    run.run("star is involutive", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i)
            if (H.star(H.star(H.basis(i))) != H.basis(i)) return idx({i});
        return std::nullopt;
    });
    run.run("star is anti-multiplicative", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (H.star(H.product(i, j)) != H.multiply(H.star(H.basis(j)), H.star(H.basis(i)))) return idx({i, j});
        return std::nullopt;
    });
    run.run("comultiplication commutes with star", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i) {
            Tensor2 lhs = H.comultiply(H.star(H.basis(i)));
            Tensor2 rhs(d, d);
            for (const auto& t : H.coproduct_terms(i)) {
                Vector sj = H.star(H.basis(t.j)), sk = H.star(H.basis(t.k));
                Scalar c = t.value.conj();
                for (std::size_t a = 0; a < d; ++a) {
                    if (sj[a].is_zero()) continue;
                    Scalar ca = c * sj[a];
                    for (std::size_t b = 0; b < d; ++b)
                        if (!sk[b].is_zero()) rhs(a, b).add_product(ca, sk[b]);
                }
            }
            if (lhs != rhs) return idx({i});
        }
        return std::nullopt;
    });
    run.run("counit commutes with star", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i)
            if (H.counit(H.star(H.basis(i))) != H.counit_vector()[i].conj()) return idx({i});
        return std::nullopt;
    });
    run.run("S o * o S o * = id", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i)
            if (H.antipode(H.star(H.antipode(H.star(H.basis(i))))) != H.basis(i)) return idx({i});
        return std::nullopt;
    });
    run.run("Kac: S^2 = id", [&]() -> W {
        for (std::size_t i = 0; i < d; ++i)
            if (H.antipode(H.antipode(H.basis(i))) != H.basis(i)) return idx({i});
        return std::nullopt;
    });
    run.run("Haar functional exists", [&]() -> W {
        H.haar();
        return std::nullopt;
    });
    run.run("Kac: Haar functional is tracial", [&]() -> W {
        const Vector& h = H.haar();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (dot(h, H.product(i, j)) != dot(h, H.product(j, i))) return idx({i, j});
        return std::nullopt;
    });
    run.run("Kac: Haar functional is positive", [&]() -> W {
        std::string w;
        if (!haar_positive_definite(H, &w)) return w;
        return std::nullopt;
    });
    return report;
}

Vector compute_haar(const HopfStarAlgebra& H)
{
    const std::size_t d = H.dim();
    // Unknowns h_0..h_{d-1}. Right invariance (id (x) h) Delta(e_i) = h_i 1 and
    // left invariance (h (x) id) Delta(e_i) = h_i 1, one row per (i, j).
    Matrix sys(2 * d * d, d);
    const Vector& u = H.unit();
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto& t : H.coproduct_terms(i)) {
            sys(i * d + t.j, t.k) += t.value;
            sys(d * d + i * d + t.k, t.j) += t.value;
        }
        for (std::size_t j = 0; j < d; ++j) {
            sys(i * d + j, i) -= u[j];
            sys(d * d + i * d + j, i) -= u[j];
        }
    }
    Matrix ker = kernel_basis(sys);
    if (ker.rows() == 0) throw NotCosemisimple("no non-zero two-sided invariant functional");
    if (ker.rows() > 1)
        throw NotCosemisimple("invariant functionals form a space of dimension " + std::to_string(ker.rows()));
    Vector h = ker.row(0);
    Scalar norm = dot(h, u);
    if (norm.is_zero()) throw NotCosemisimple("invariant functional vanishes on 1; cannot normalize h(1) = 1");
    return norm.inverse() * h;
}

LinearEndo::LinearEndo(Matrix m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols()) throw ShapeError("LinearEndo: matrix must be square");
}

LinearEndo LinearEndo::counit_unit(const HopfStarAlgebra& h)
{
    const std::size_t d = h.dim();
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(j, i) = h.counit_vector()[i] * h.unit()[j];
    return LinearEndo(std::move(m));
}

LinearEndo LinearEndo::after(const LinearEndo& g) const
{
    if (g.dim() != dim()) throw ShapeError("LinearEndo composition: domain mismatch");
    return LinearEndo(m_ * g.m_);
}

LinearEndo convolve(const HopfStarAlgebra& h, const LinearEndo& f, const LinearEndo& g)
{
    const std::size_t d = h.dim();
    if (f.dim() != d || g.dim() != d) throw ShapeError("convolve: maps are not endomorphisms of this algebra");
    std::vector<Vector> fc(d), gc(d);
    for (std::size_t i = 0; i < d; ++i) {
        fc[i] = f.image_of_basis(i);
        gc[i] = g.image_of_basis(i);
    }
    Matrix out(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vector v(d);
        for (const auto& t : h.coproduct_terms(i)) axpy(v, t.value, h.multiply(fc[t.j], gc[t.k]));
        out.set_col(i, v);
    }
    return LinearEndo(std::move(out));
}

HopfStarAlgebra dual(const HopfStarAlgebra& H)
{
    const auto& s = H.structure();
    StructureConstants d;
    d.dim = s.dim;
    d.field_order = s.field_order;
    for (const auto& l : s.labels) d.labels.push_back("d(" + l + ")");
    // (e^i e^j)(e_k) = coefficient of e_i (x) e_j in Delta(e_k)
    for (const auto& t : s.comult) d.mult.push_back({t.j, t.k, t.i, t.value});
    for (const auto& t : s.mult) d.comult.push_back({t.k, t.i, t.j, t.value});
    d.unit = s.counit;
    d.counit = s.unit;
    d.antipode = s.antipode.transpose();
    d.star = (s.star.conj() * s.antipode).transpose();
    return HopfStarAlgebra(std::move(d));
}

Matrix haar_gram(const HopfStarAlgebra& H)
{
    const std::size_t d = H.dim();
    const Vector& h = H.haar();
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vector si = H.star(H.basis(i));
        for (std::size_t j = 0; j < d; ++j) g(i, j) = dot(h, H.multiply(si, H.basis(j)));
    }
    return g;
}

bool haar_positive_definite(const HopfStarAlgebra& H, std::string* witness)
{
    Matrix g = haar_gram(H);
    const std::size_t d = g.rows();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (g(i, j) != g(j, i).conj()) {
                if (witness) *witness = "Gram matrix not Hermitian at " + idx({i, j});
                return false;
            }
    // Hermitian Gaussian elimination without pivoting; every pivot must be
    // a real positive number.
    for (std::size_t k = 0; k < d; ++k) {
        const Scalar& p = g(k, k);
        if (!p.is_real() || p.sign() <= 0) {
            if (witness) *witness = "LDL* pivot " + std::to_string(k) + " = " + p.str() + " is not positive";
            return false;
        }
        Scalar inv = p.inverse();
        for (std::size_t i = k + 1; i < d; ++i) {
            if (g(i, k).is_zero()) continue;
            Scalar f = -(g(i, k) * inv);
            for (std::size_t j = k; j < d; ++j)
                if (!g(k, j).is_zero()) g(i, j).add_product(f, g(k, j));
        }
    }
    return true;
}

}  // namespace hopfcheck
