#ifndef HOPFCHECK_CYCLOTOMIC_HPP
#define HOPFCHECK_CYCLOTOMIC_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hopfcheck {

using Rational = mpq_class;

// "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

int euler_phi(int n);

// Coefficients (constant term first) of the n-th cyclotomic polynomial.
const std::vector<long long>& cyclotomic_polynomial(int n);

/*
  An element of Q(zeta_n), stored in the power basis 1, z, ..., z^(phi(n)-1)
  modulo the n-th cyclotomic polynomial.

  Order 1 is the rational field. Binary operations accept operands of equal
  order, or one operand of order 1 (Q sits inside every Q(zeta_n)); anything
  else throws FieldMismatch. Use lift() to move between orders explicitly.
*/
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& value, int order = 1);

    static Cyclotomic from_coeffs(int order, std::vector<Rational> coeffs);
    // zeta_n^k
    static Cyclotomic zeta(int n, long k = 1);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational() const;

    // Complex conjugation zeta -> zeta^-1, the * of the base field.
    Cyclotomic conj() const;
    Cyclotomic inverse() const;
    // Re-express in Q(zeta_m); requires order() | m.
    Cyclotomic lift(int m) const;

    bool is_real() const;
    // Sign of a real element under the embedding zeta -> exp(2 pi i / n),
    // certified by interval refinement. Throws std::domain_error if not real.
    int sign() const;

    // Image under zeta -> exp(2 pi i k / n).
    std::complex<long double> embed(int k = 1) const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);
    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Total order used for deterministic sorting only (no field meaning).
    int compare(const Cyclotomic& other) const;

    // GAP-style text: 1/2, -E(3), 2 + E(6)^1, ...
    std::string str() const;

    // a += b * c without temporaries when the orders already agree.
    void add_product(const Cyclotomic& b, const Cyclotomic& c);

private:
    int order_;
    std::vector<Rational> coeffs_;

    void promote_to(int order);
    friend int common_order(int a, int b);
};

// Common order of two operands, throwing FieldMismatch when incompatible.
int common_order(int a, int b);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace hopfcheck

#endif
