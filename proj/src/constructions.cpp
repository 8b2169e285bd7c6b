#include "hopfcheck/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "hopfcheck/errors.hpp"

namespace hopfcheck {

namespace {

Scalar lift_scalar(const Scalar& s, int order)
{
    if (s.is_rational() || s.order() == order) return s;
    return s.lift(order);
}

Matrix lift_matrix(const Matrix& m, int order)
{
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = lift_scalar(m(i, j), order);
    return out;
}

Vector lift_vector(const Vector& v, int order)
{
    Vector out = v;
    for (auto& x : out) x = lift_scalar(x, order);
    return out;
}

std::string cycle_label(const std::vector<std::size_t>& perm)
{
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s] || perm[s] == s) continue;
        out += "(";
        for (std::size_t x = s; !seen[x]; x = perm[x]) {
            seen[x] = true;
            out += std::to_string(x + 1);
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels))
{
    const std::size_t n = table_.size();
    if (n == 0) throw SchemaError("group table: order must be positive");
    for (const auto& row : table_) {
        if (row.size() != n) throw SchemaError("group table: rows must have length " + std::to_string(n));
        for (auto x : row)
            if (x >= n) throw SchemaError("group table: entry out of range");
    }
    if (labels_.empty())
        for (std::size_t i = 0; i < n; ++i) labels_.push_back("g" + std::to_string(i));
    if (labels_.size() != n) throw SchemaError("group labels: expected " + std::to_string(n));
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw SchemaError("group table: no identity element");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw SchemaError("group table: not associative at (" + labels_[a] + ", " + labels_[b] + ", " +
                                      labels_[c] + ")");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (inverse_[a] == n) throw SchemaError("group table: " + labels_[a] + " has no inverse");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n)
{
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
    std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < perms.size(); ++a) {
        labels.push_back(cycle_label(perms[a]));
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<std::size_t> c(n);  // (ab)(x) = a(b(x))
            for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = index[c];
        }
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n)
{
    // element r^a s^b stored at a + n*b
    const std::size_t m = 2 * n;
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < m; ++x) {
        std::size_t a = x % n, b = x / n;
        std::string r = a == 0 ? "" : a == 1 ? "r" : "r" + std::to_string(a);
        labels.push_back(b ? r + "s" : (r.empty() ? "e" : r));
        for (std::size_t y = 0; y < m; ++y) {
            std::size_t c = y % n, d = y / n;
            std::size_t rot = b ? (a + n - c) % n : (a + c) % n;
            t[x][y] = rot + n * ((b + d) % 2);
        }
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const std::size_t na = a.order(), nb = b.order();
    std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < na * nb; ++x) {
        labels.push_back("(" + a.labels()[x / nb] + "," + b.labels()[x % nb] + ")");
        for (std::size_t y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

std::size_t FiniteGroup::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw SchemaError("unknown group element label '" + label + "'");
}

std::size_t FiniteGroup::element_order(std::size_t g) const
{
    std::size_t k = 1;
    for (std::size_t x = g; x != identity_; x = mul(x, g)) ++k;
    return k;
}

std::size_t FiniteGroup::exponent() const
{
    std::size_t e = 1;
    for (std::size_t g = 0; g < order(); ++g) e = std::lcm(e, element_order(g));
    return e;
}

bool FiniteGroup::is_subgroup(const Subset& h) const
{
    if (!h.count(identity_)) return false;
    for (auto a : h) {
        if (a >= order()) return false;
        for (auto b : h)
            if (!h.count(mul(a, inverse(b)))) return false;
    }
    return true;
}

bool FiniteGroup::is_normal(const Subset& h) const
{
    if (!is_subgroup(h)) return false;
    for (std::size_t g = 0; g < order(); ++g)
        for (auto x : h)
            if (!h.count(mul(mul(g, x), inverse(g)))) return false;
    return true;
}

Subset FiniteGroup::generated(const Subset& gens) const
{
    Subset h{identity_};
    std::vector<std::size_t> frontier{identity_};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (auto x : frontier)
            for (auto g : gens) {
                std::size_t y = mul(x, g);
                if (h.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return h;
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subset& k)
{
    if (!g.is_normal(k)) throw NotASubgroup("not a normal subgroup");
    const std::size_t n = g.order();
    std::vector<std::size_t> coset_of(n, n), rep;
    for (std::size_t x = 0; x < n; ++x) {
        if (coset_of[x] != n) continue;
        for (auto y : k) coset_of[g.mul(x, y)] = rep.size();
        rep.push_back(x);
    }
    std::vector<std::vector<std::size_t>> t(rep.size(), std::vector<std::size_t>(rep.size()));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < rep.size(); ++a) {
        labels.push_back(g.labels()[rep[a]] + "K");
        for (std::size_t b = 0; b < rep.size(); ++b) t[a][b] = coset_of[g.mul(rep[a], rep[b])];
    }
    if (!labels.empty()) labels[0] = "e";
    return {FiniteGroup(std::move(t), std::move(labels)), std::move(coset_of)};
}

int field_order_override(int fallback)
{
    const char* env = std::getenv("HOPFCHECK_FIELD_ORDER");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end || v < 1 || v > 100000) throw SchemaError("HOPFCHECK_FIELD_ORDER must be a positive integer");
    if (v % fallback != 0)
        throw FieldMismatch("HOPFCHECK_FIELD_ORDER=" + std::to_string(v) + " is not a multiple of " +
                            std::to_string(fallback));
    return static_cast<int>(v);
}

int default_field_order(const FiniteGroup& g)
{
    return field_order_override(static_cast<int>(g.exponent()));
}

HopfStarAlgebra group_algebra(const FiniteGroup& g, int order)
{
    const std::size_t n = g.order();
    StructureConstants sc;
    sc.dim = n;
    sc.field_order = order ? order : default_field_order(g);
    sc.labels = g.labels();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) sc.mult.push_back({a, b, g.mul(a, b), Scalar(1)});
        sc.comult.push_back({a, a, a, Scalar(1)});
    }
    sc.unit = unit_vector(n, g.identity());
    sc.counit = Vector(n, Scalar(1));
    sc.antipode = Matrix(n, n);
    for (std::size_t a = 0; a < n; ++a) sc.antipode(g.inverse(a), a) = Scalar(1);
    sc.star = sc.antipode;
    return HopfStarAlgebra(std::move(sc));
}

HopfStarAlgebra function_algebra(const FiniteGroup& g, int order)
{
    const std::size_t n = g.order();
    StructureConstants sc;
    sc.dim = n;
    sc.field_order = order ? order : default_field_order(g);
    for (const auto& l : g.labels()) sc.labels.push_back("delta_" + l);
    for (std::size_t a = 0; a < n; ++a) {
        sc.mult.push_back({a, a, a, Scalar(1)});
        for (std::size_t b = 0; b < n; ++b) sc.comult.push_back({g.mul(a, b), a, b, Scalar(1)});
    }
    sc.unit = Vector(n, Scalar(1));
    sc.counit = unit_vector(n, g.identity());
    sc.antipode = Matrix(n, n);
    for (std::size_t a = 0; a < n; ++a) sc.antipode(g.inverse(a), a) = Scalar(1);
    sc.star = Matrix::identity(n);
    return HopfStarAlgebra(std::move(sc));
}

Subspace subgroup_ideal(const FiniteGroup& g, const Subset& h)
{
    if (!g.is_subgroup(h)) throw NotASubgroup("the given elements do not form a subgroup");
    std::vector<Vector> vs;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (!h.count(x)) vs.push_back(unit_vector(g.order(), x));
    return Subspace::span(vs, g.order());
}

Subspace group_algebra_quotient_ideal(const FiniteGroup& g, const Subset& k)
{
    if (!g.is_normal(k)) throw NotASubgroup("the given elements do not form a normal subgroup");
    std::vector<Vector> vs;
    for (std::size_t x = 0; x < g.order(); ++x)
        for (auto y : k) vs.push_back(unit_vector(g.order(), x) - unit_vector(g.order(), g.mul(x, y)));
    return Subspace::span(vs, g.order());
}

HopfStarAlgebra lift_to_order(const HopfStarAlgebra& h, int order)
{
    StructureConstants sc = h.structure();
    if (order % sc.field_order != 0) throw FieldMismatch("cannot lift to a field not containing the current one");
    sc.field_order = order;
    for (auto& t : sc.mult) t.value = lift_scalar(t.value, order);
    for (auto& t : sc.comult) t.value = lift_scalar(t.value, order);
    sc.unit = lift_vector(sc.unit, order);
    sc.counit = lift_vector(sc.counit, order);
    sc.antipode = lift_matrix(sc.antipode, order);
    sc.star = lift_matrix(sc.star, order);
    return HopfStarAlgebra(std::move(sc));
}

Matrix kronecker(const Matrix& a, const Matrix& b)
{
    const int order = std::lcm(std::max(1, a.field_order()), std::max(1, b.field_order()));
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            Scalar x = lift_scalar(a(i, j), order);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * lift_scalar(b(k, l), order);
        }
    return out;
}

HopfStarAlgebra tensor_product(const HopfStarAlgebra& a0, const HopfStarAlgebra& b0)
{
    const int order = std::lcm(a0.field_order(), b0.field_order());
    HopfStarAlgebra a = lift_to_order(a0, order), b = lift_to_order(b0, order);
    const std::size_t da = a.dim(), db = b.dim();
    StructureConstants sc;
    sc.dim = da * db;
    sc.field_order = order;
    for (const auto& x : a.labels())
        for (const auto& y : b.labels()) sc.labels.push_back(x + "|" + y);
    const auto& sa = a.structure();
    const auto& sb = b.structure();
    for (const auto& s : sa.mult)
        for (const auto& t : sb.mult)
            sc.mult.push_back({s.i * db + t.i, s.j * db + t.j, s.k * db + t.k, s.value * t.value});
    for (const auto& s : sa.comult)
        for (const auto& t : sb.comult)
            sc.comult.push_back({s.i * db + t.i, s.j * db + t.j, s.k * db + t.k, s.value * t.value});
    sc.unit = kronecker(Matrix::from_columns({sa.unit}, da), Matrix::from_columns({sb.unit}, db)).col(0);
    sc.counit = kronecker(Matrix::from_columns({sa.counit}, da), Matrix::from_columns({sb.counit}, db)).col(0);
    sc.antipode = kronecker(sa.antipode, sb.antipode);
    sc.star = kronecker(sa.star, sb.star);
    return HopfStarAlgebra(std::move(sc));
}

TensorSubgroup tensor_subgroup(const QuantumSubgroup& q1, const QuantumSubgroup& q2)
{
    HopfStarAlgebra g = tensor_product(q1.parent, q2.parent);
    HopfStarAlgebra n = tensor_product(q1.quotient, q2.quotient);
    TensorSubgroup out;
    out.subgroup = from_surjection(g, n, kronecker(q1.proj, q2.proj));
    Subspace c1 = coset_algebras(q1).g_mod_n, c2 = coset_algebras(q2).g_mod_n;
    std::vector<Vector> vs;
    for (const auto& x : c1.basis_vectors())
        for (const auto& y : c2.basis_vectors())
            vs.push_back(kronecker(Matrix::from_columns({x}, x.size()), Matrix::from_columns({y}, y.size())).col(0));
    out.expected_cosets = Subspace::span(vs, g.dim());
    out.quotient_identity = coset_algebras(out.subgroup).g_mod_n == out.expected_cosets;
    return out;
}

void validate_action(const HopfStarAlgebra& a, const GroupAction& act)
{
    const FiniteGroup& gam = act.group;
    const std::size_t d = a.dim();
    if (act.maps.size() != gam.order()) throw ActionInvalid("expected one map per group element");
    for (std::size_t g = 0; g < gam.order(); ++g) {
        const Matrix& m = act.maps[g];
        const std::string at = " for " + gam.labels()[g];
        if (m.rows() != d || m.cols() != d) throw ActionInvalid("map has the wrong shape" + at);
        if (m.apply(a.unit()) != a.unit()) throw ActionInvalid("alpha(1) != 1" + at);
        for (std::size_t i = 0; i < d; ++i) {
            Vector ai = m.col(i);
            for (std::size_t j = 0; j < d; ++j)
                if (m.apply(a.product(i, j)) != a.multiply(ai, m.col(j)))
                    throw ActionInvalid("alpha is not multiplicative" + at);
            if (m * a.comultiply(a.basis(i)) * m.transpose() != a.comultiply(ai))
                throw ActionInvalid("alpha does not preserve the coproduct" + at);
            if (a.counit(ai) != a.counit_vector()[i]) throw ActionInvalid("alpha does not preserve the counit" + at);
            if (m.apply(a.antipode(a.basis(i))) != a.antipode(ai))
                throw ActionInvalid("alpha does not commute with the antipode" + at);
            if (m.apply(a.star(a.basis(i))) != a.star(ai)) throw ActionInvalid("alpha does not commute with *" + at);
        }
        for (std::size_t h = 0; h < gam.order(); ++h)
            if (m * act.maps[h] != act.maps[gam.mul(g, h)]) throw ActionInvalid("alpha is not a homomorphism" + at);
    }
    if (!act.maps[gam.identity()].is_identity()) throw ActionInvalid("alpha(e) is not the identity");
}

GroupAction function_algebra_action(const FiniteGroup& target, const FiniteGroup& acting,
                                    const std::vector<std::vector<std::size_t>>& theta)
{
    if (theta.size() != acting.order()) throw ActionInvalid("expected one automorphism per group element");
    GroupAction act{acting, {}};
    const std::size_t n = target.order();
    for (const auto& th : theta) {
        if (th.size() != n) throw ActionInvalid("automorphism has the wrong length");
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (th[target.mul(x, y)] != target.mul(th[x], th[y]))
                    throw ActionInvalid("map is not a group automorphism");
        Matrix m(n, n);
        for (std::size_t x = 0; x < n; ++x) m(th[x], x) = Scalar(1);
        act.maps.push_back(std::move(m));
    }
    return act;
}

GroupAction trivial_action(const HopfStarAlgebra& a, const FiniteGroup& acting)
{
    return {acting, std::vector<Matrix>(acting.order(), Matrix::identity(a.dim()))};
}

HopfStarAlgebra crossed_product(const HopfStarAlgebra& a0, const GroupAction& act0, int order)
{
    validate_action(a0, act0);
    const FiniteGroup& gam = act0.group;
    if (!order) order = field_order_override(std::lcm(a0.field_order(), static_cast<int>(gam.exponent())));
    if (order % a0.field_order() != 0) order = std::lcm(order, a0.field_order());
    HopfStarAlgebra a = lift_to_order(a0, order);
    std::vector<Matrix> alpha;
    for (const auto& m : act0.maps) alpha.push_back(lift_matrix(m, order));
    const std::size_t d = a.dim(), n = gam.order();
    auto idx = [n](std::size_t i, std::size_t g) { return i * n + g; };

    StructureConstants sc;
    sc.dim = d * n;
    sc.field_order = order;
    for (const auto& l : a.labels())
        for (const auto& g : gam.labels()) sc.labels.push_back(l + "." + g);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t j = 0; j < d; ++j) {
                Vector prod = a.multiply(a.basis(i), alpha[g].col(j));
                for (std::size_t h = 0; h < n; ++h)
                    for (std::size_t k = 0; k < d; ++k)
                        if (!prod[k].is_zero()) sc.mult.push_back({idx(i, g), idx(j, h), idx(k, gam.mul(g, h)), prod[k]});
            }
    sc.unit = zero_vector(d * n);
    sc.counit = zero_vector(d * n);
    sc.antipode = Matrix(d * n, d * n);
    sc.star = Matrix(d * n, d * n);
    for (std::size_t i = 0; i < d; ++i) {
        sc.unit[idx(i, gam.identity())] = a.unit()[i];
        for (std::size_t g = 0; g < n; ++g) {
            sc.counit[idx(i, g)] = a.counit_vector()[i];
            for (const auto& t : a.coproduct_terms(i)) sc.comult.push_back({idx(i, g), idx(t.j, g), idx(t.k, g), t.value});
            const std::size_t gi = gam.inverse(g);
            Vector s = alpha[gi].apply(a.antipode(a.basis(i)));
            Vector st = alpha[gi].apply(a.star(a.basis(i)));
            for (std::size_t k = 0; k < d; ++k) {
                sc.antipode(idx(k, gi), idx(i, g)) = s[k];
                sc.star(idx(k, gi), idx(i, g)) = st[k];
            }
        }
    }
    return HopfStarAlgebra(std::move(sc));
}

Vector crossed_haar(const HopfStarAlgebra& a, const GroupAction& act)
{
    const std::size_t d = a.dim(), n = act.group.order();
    Vector h = zero_vector(d * n);
    for (std::size_t i = 0; i < d; ++i) h[i * n + act.group.identity()] = a.haar()[i];
    return h;
}

CrossedSubgroup crossed_canonical_subgroup(const HopfStarAlgebra& a, const GroupAction& act, const HopfStarAlgebra& x)
{
    const FiniteGroup& gam = act.group;
    const std::size_t d = a.dim(), n = gam.order();
    HopfStarAlgebra cg = group_algebra(gam, x.field_order());
    Matrix pi(n, d * n);
    std::vector<Vector> copy;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t g = 0; g < n; ++g) pi(g, i * n + g) = a.counit_vector()[i];
        copy.push_back(unit_vector(d * n, i * n + gam.identity()));
    }
    CrossedSubgroup out;
    out.subgroup = from_surjection(x, cg, pi);
    out.expected_cosets = Subspace::span(copy, d * n);
    out.coset_identity = coset_algebras(out.subgroup).g_mod_n == out.expected_cosets;
    return out;
}

CrossedSubgroup crossed_general_subgroup(const HopfStarAlgebra& a, const GroupAction& act, const HopfStarAlgebra& x,
                                         const Subspace& ideal, const Subset& k, const PeterWeylOptions& opt)
{
    const FiniteGroup& gam = act.group;
    const std::size_t d = a.dim(), n = gam.order();
    for (std::size_t g = 0; g < n; ++g)
        for (const auto& v : ideal.basis_vectors())
            if (!ideal.contains(act.maps[g].apply(v)))
                throw InvarianceViolated("ideal is not invariant under " + gam.labels()[g]);
    QuantumSubgroup inner = make_subgroup(a, ideal);
    if (!is_normal_coset(inner)) throw NotNormalInner("A/I is not a normal quantum subgroup of A");
    if (!gam.is_normal(k)) throw NotASubgroup("K is not a normal subgroup of the acting group");
    for (auto g : k)
        if (!act.maps[g].is_identity()) throw KNotInKernel(gam.labels()[g] + " acts nontrivially");

    QuotientGroup qg = quotient_group(gam, k);
    const std::size_t m = qg.group.order(), q = inner.quotient.dim();
    GroupAction induced{qg.group, std::vector<Matrix>(m)};
    for (std::size_t g = 0; g < n; ++g) induced.maps[qg.coset_of[g]] = inner.proj * act.maps[g] * inner.section;
    HopfStarAlgebra y = crossed_product(inner.quotient, induced, x.field_order());

    Matrix pi(q * m, d * n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t t = 0; t < q; ++t)
                if (!inner.proj(t, i).is_zero()) pi(t * m + qg.coset_of[g], i * n + g) = inner.proj(t, i);

    CrossedSubgroup out;
    out.subgroup = from_surjection(x, y, pi);
    Subspace cosets = coset_algebras(out.subgroup).g_mod_n;

    std::vector<Vector> expect;
    for (const auto& b : coset_algebras(inner).g_mod_n.basis_vectors())
        for (auto kk : k) {
            Vector v = zero_vector(d * n);
            for (std::size_t i = 0; i < d; ++i) v[i * n + kk] = b[i];
            expect.push_back(std::move(v));
        }
    out.expected_cosets = Subspace::span(expect, d * n);
    out.coset_identity = cosets == out.expected_cosets;

    PeterWeylData pw = peter_weyl(a, opt);
    RepCriterion rc = is_normal_rep(inner, pw);
    std::vector<Vector> from_irreps;
    for (auto l : rc.trivial)
        for (const auto& row : pw.irreps[l].entries)
            for (const auto& u : row)
                for (auto kk : k) {
                    Vector v = zero_vector(d * n);
                    for (std::size_t i = 0; i < d; ++i) v[i * n + kk] = u[i];
                    from_irreps.push_back(std::move(v));
                }
    out.trivial_set_identity = Subspace::span(from_irreps, d * n) == cosets;
    return out;
}

std::vector<std::string> catalog_names()
{
    return {"f_z2", "f_z3", "f_z6", "f_s3", "f_d4", "c_z3", "c_s3", "f_z2_x_f_z3", "f_z3_cross_z2"};
}

HopfStarAlgebra catalog_algebra(const std::string& name)
{
    if (name == "f_z2") return function_algebra(FiniteGroup::cyclic(2));
    if (name == "f_z3") return function_algebra(FiniteGroup::cyclic(3));
    if (name == "f_z6") return function_algebra(FiniteGroup::cyclic(6));
    if (name == "f_s3") return function_algebra(FiniteGroup::symmetric(3));
    if (name == "f_d4") return function_algebra(FiniteGroup::dihedral(4));
    if (name == "c_z3") return group_algebra(FiniteGroup::cyclic(3));
    if (name == "c_s3") return group_algebra(FiniteGroup::symmetric(3));
    if (name == "f_z2_x_f_z3")
        return tensor_product(function_algebra(FiniteGroup::cyclic(2)), function_algebra(FiniteGroup::cyclic(3)));
    if (name == "f_z3_cross_z2") {
        FiniteGroup z3 = FiniteGroup::cyclic(3), z2 = FiniteGroup::cyclic(2);
        HopfStarAlgebra a = function_algebra(z3);
        return crossed_product(a, function_algebra_action(z3, z2, {{0, 1, 2}, {0, 2, 1}}));
    }
    throw SchemaError("unknown catalog algebra '" + name + "'");
}

std::vector<CatalogEntry> catalog()
{
    std::vector<CatalogEntry> out;
    for (const auto& n : catalog_names()) out.push_back({n, catalog_algebra(n)});
    return out;
}

}  // namespace hopfcheck
