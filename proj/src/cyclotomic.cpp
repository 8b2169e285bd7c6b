#include "hopfcheck/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <mpfr.h>

#include "hopfcheck/errors.hpp"

namespace hopfcheck {

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw SchemaError("malformed rational \"" + s + "\"");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw SchemaError("zero denominator in \"" + s + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

int euler_phi(int n)
{
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

struct FieldData {
    int n = 1;
    int phi = 1;
    // powers[k] = z^k reduced, k in [0, n)
    std::vector<std::vector<Rational>> powers;
};

std::vector<long long> compute_cyclotomic(int n)
{
    // x^n - 1 divided by Phi_d for every proper divisor d of n
    std::vector<long long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        const auto& q = cyclotomic_polynomial(d);
        int dq = static_cast<int>(q.size()) - 1;
        int dp = static_cast<int>(p.size()) - 1;
        std::vector<long long> quot(dp - dq + 1, 0);
        for (int k = dp - dq; k >= 0; --k) {
            long long c = p[k + dq];  // q is monic
            quot[k] = c;
            for (int j = 0; j <= dq; ++j) p[k + j] -= c * q[j];
        }
        p = std::move(quot);
    }
    return p;
}

const FieldData& field_data(int n)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<FieldData>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto data = std::make_unique<FieldData>();
    data->n = n;
    data->phi = euler_phi(n);
    const auto& poly = cyclotomic_polynomial(n);
    int phi = data->phi;
    data->powers.assign(n, std::vector<Rational>(phi));
    std::vector<Rational> cur(phi);
    cur[0] = 1;
    for (int k = 0; k < n; ++k) {
        data->powers[k] = cur;
        // multiply by z and reduce with the monic polynomial
        Rational top = cur[phi - 1];
        for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (int j = 0; j < phi; ++j) cur[j] -= top * Rational(static_cast<long>(poly[j]));
    }
    auto [pos, inserted] = cache.emplace(n, std::move(data));
    return *pos->second;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n)
{
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    static std::recursive_mutex mutex;
    static std::map<int, std::vector<long long>> cache;
    std::lock_guard<std::recursive_mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<long long> p;
    if (n == 1)
        p = {-1, 1};
    else
        p = compute_cyclotomic(n);
    return cache.emplace(n, std::move(p)).first->second;
}

int common_order(int a, int b)
{
    if (a == b || b == 1) return a;
    if (a == 1) return b;
    throw FieldMismatch("cyclotomic orders " + std::to_string(a) + " and " +
                        std::to_string(b) + " are not compatible");
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long value) : order_(1), coeffs_(1, Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value, int order)
    : order_(order), coeffs_(euler_phi(order))
{
    coeffs_[0] = value;
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<Rational> coeffs)
{
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    if (static_cast<int>(coeffs.size()) != euler_phi(order))
        throw ShapeError("coefficient vector of length " + std::to_string(coeffs.size()) +
                         " for order " + std::to_string(order) + " (expected phi(n) = " +
                         std::to_string(euler_phi(order)) + ")");
    Cyclotomic x;
    x.order_ = order;
    x.coeffs_ = std::move(coeffs);
    for (auto& c : x.coeffs_) c.canonicalize();
    return x;
}

Cyclotomic Cyclotomic::zeta(int n, long k)
{
    const auto& fd = field_data(n);
    long e = ((k % n) + n) % n;
    return from_coeffs(n, fd.powers[e]);
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const
{
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational() const
{
    if (!is_rational()) throw std::domain_error("cyclotomic value " + str() + " is not rational");
    return coeffs_[0];
}

void Cyclotomic::promote_to(int order)
{
    if (order == order_) return;
    Rational r = coeffs_[0];
    order_ = order;
    coeffs_.assign(euler_phi(order), Rational(0));
    coeffs_[0] = r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs)
{
    int n = common_order(order_, rhs.order_);
    if (rhs.order_ == n) {
        promote_to(n);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    } else {
        coeffs_[0] += rhs.coeffs_[0];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs)
{
    int n = common_order(order_, rhs.order_);
    if (rhs.order_ == n) {
        promote_to(n);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    } else {
        coeffs_[0] -= rhs.coeffs_[0];
    }
    return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
{
    int n = common_order(a.order_, b.order_);
    if (a.is_rational() || b.is_rational()) {
        const Cyclotomic& full = a.is_rational() ? b : a;
        Rational s = a.is_rational() ? a.coeffs_[0] : b.coeffs_[0];
        Cyclotomic r;
        r.order_ = n;
        r.coeffs_.assign(euler_phi(n), Rational(0));
        if (s == 0) return r;
        if (full.order_ == n) {
            for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = full.coeffs_[i] * s;
        } else {
            r.coeffs_[0] = full.coeffs_[0] * s;
        }
        return r;
    }
    const auto& fd = field_data(n);
    int phi = fd.phi;
    std::vector<Rational> raw(n);
    for (int i = 0; i < phi; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (b.coeffs_[j] == 0) continue;
            raw[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    Cyclotomic r;
    r.order_ = n;
    r.coeffs_.assign(phi, Rational(0));
    for (int k = 0; k < n; ++k) {
        if (raw[k] == 0) continue;
        if (k < phi) {
            r.coeffs_[k] += raw[k];
            continue;
        }
        const auto& pw = fd.powers[k];
        for (int j = 0; j < phi; ++j)
            if (pw[j] != 0) r.coeffs_[j] += raw[k] * pw[j];
    }
    return r;
}

void Cyclotomic::add_product(const Cyclotomic& b, const Cyclotomic& c)
{
    if (b.is_zero() || c.is_zero()) return;
    if (b.is_rational() && c.is_rational()) {
        coeffs_[0] += b.coeffs_[0] * c.coeffs_[0];
        return;
    }
    *this += b * c;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs)
{
    *this = *this * rhs;
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs)
{
    *this = *this * rhs.inverse();
    return *this;
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(order_) + ")");
    if (is_rational()) {
        Cyclotomic r(Rational(1) / coeffs_[0], order_);
        return r;
    }
    // Solve (multiplication by this) * c = 1 over Q.
    int phi = static_cast<int>(coeffs_.size());
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
    for (int j = 0; j < phi; ++j) {
        std::vector<Rational> basis(phi);
        basis[j] = 1;
        Cyclotomic col = *this * from_coeffs(order_, basis);
        for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
    }
    m[0][phi] = 1;
    for (int c = 0, r = 0; c < phi; ++c, ++r) {
        int p = r;
        while (m[p][c] == 0) ++p;  // invertible: a pivot always exists
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (int k = c; k <= phi; ++k) m[r][k] *= inv;
        for (int i = 0; i < phi; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int k = c; k <= phi; ++k) m[i][k] -= f * m[r][k];
        }
    }
    std::vector<Rational> sol(phi);
    for (int i = 0; i < phi; ++i) sol[i] = m[i][phi];
    return from_coeffs(order_, std::move(sol));
}

Cyclotomic Cyclotomic::conj() const
{
    if (is_rational()) return *this;
    const auto& fd = field_data(order_);
    std::vector<Rational> out(fd.phi);
    for (int k = 0; k < fd.phi; ++k) {
        if (coeffs_[k] == 0) continue;
        const auto& pw = fd.powers[(order_ - k) % order_];
        for (int j = 0; j < fd.phi; ++j)
            if (pw[j] != 0) out[j] += coeffs_[k] * pw[j];
    }
    return from_coeffs(order_, std::move(out));
}

Cyclotomic Cyclotomic::lift(int m) const
{
    if (m == order_) return *this;
    if (m < 1 || m % order_ != 0)
        throw FieldMismatch("cannot lift order " + std::to_string(order_) + " to " + std::to_string(m));
    const auto& fd = field_data(m);
    int step = m / order_;
    std::vector<Rational> out(fd.phi);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const auto& pw = fd.powers[(static_cast<long>(k) * step) % m];
        for (int j = 0; j < fd.phi; ++j)
            if (pw[j] != 0) out[j] += coeffs_[k] * pw[j];
    }
    return from_coeffs(m, std::move(out));
}

bool Cyclotomic::is_real() const { return conj() == *this; }

int Cyclotomic::sign() const
{
    if (!is_real()) throw std::domain_error("sign of non-real cyclotomic " + str());
    if (is_zero()) return 0;
    if (is_rational()) return sgn(coeffs_[0]);
    // value = sum_k c_k cos(2 pi k / n); the imaginary parts cancel.
    for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
        mpfr_t acc, term, angle, pi, c, abs_sum;
        mpfr_inits2(prec, acc, term, angle, pi, c, abs_sum, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_zero(acc, 1);
        mpfr_set_zero(abs_sum, 1);
        mpfr_const_pi(pi, MPFR_RNDN);
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            mpfr_mul_ui(angle, pi, 2 * k, MPFR_RNDN);
            mpfr_div_ui(angle, angle, order_, MPFR_RNDN);
            mpfr_cos(term, angle, MPFR_RNDN);
            mpfr_set_q(c, coeffs_[k].get_mpq_t(), MPFR_RNDN);
            mpfr_mul(term, term, c, MPFR_RNDN);
            mpfr_add(acc, acc, term, MPFR_RNDN);
            mpfr_abs(c, c, MPFR_RNDN);
            mpfr_add(abs_sum, abs_sum, c, MPFR_RNDN);
        }
        // Each term carries at most a few ulps of relative error.
        mpfr_mul_2si(abs_sum, abs_sum, -static_cast<long>(prec) + 6, MPFR_RNDU);
        mpfr_abs(term, acc, MPFR_RNDN);
        int certified = mpfr_cmp(term, abs_sum) > 0;
        int s = mpfr_sgn(acc);
        mpfr_clears(acc, term, angle, pi, c, abs_sum, static_cast<mpfr_ptr>(nullptr));
        if (certified) return s > 0 ? 1 : -1;
    }
    throw std::runtime_error("sign certification did not converge for " + str());
}

std::complex<long double> Cyclotomic::embed(int k) const
{
    std::complex<long double> z(0, 0);
    const long double two_pi = 6.283185307179586476925286766559L;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        long double c = static_cast<long double>(coeffs_[j].get_d());
        long double ang = two_pi * static_cast<long double>((static_cast<long>(j) * k) % order_) / order_;
        z += std::complex<long double>(c * std::cos(ang), c * std::sin(ang));
    }
    return z;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    if (a.order_ == 1 || b.order_ == 1) {
        return a.is_rational() && b.is_rational() && a.coeffs_[0] == b.coeffs_[0];
    }
    return false;
}

int Cyclotomic::compare(const Cyclotomic& other) const
{
    // rational values compare by value regardless of tag
    if (is_rational() && other.is_rational()) return cmp(coeffs_[0], other.coeffs_[0]);
    if (is_rational() != other.is_rational()) return is_rational() ? -1 : 1;
    if (order_ != other.order_) return order_ < other.order_ ? -1 : 1;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], other.coeffs_[i]);
        if (c) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string Cyclotomic::str() const
{
    if (is_rational()) return to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << to_string(a);
            continue;
        }
        if (a != 1) os << to_string(a) << "*";
        os << "E(" << order_ << ")";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.str(); }

}  // namespace hopfcheck
