#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored as a polynomial in zeta_N of degree < phi(N), i.e.
// as a residue modulo the N-th cyclotomic polynomial. Reduction is applied
// after every operation, so two values of the same order are equal exactly
// when their coefficient vectors are equal.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vw {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms; the two-argument mpq_class constructor does not reduce.
Rational frac(const Integer& n, const Integer& d);

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Integer coefficients of Phi_N, lowest degree first. Cached process-wide.
const std::vector<Integer>& cyclotomic_polynomial(int n);

int euler_phi(int n);
long gcd_int(long a, long b);
long lcm_int(long a, long b);
/// Non-negative residue of a modulo m (m > 0).
long mod_floor(long a, long m);

class CycNum {
public:
    /// The zero of Q(zeta_1) = Q.
    CycNum();
    explicit CycNum(const Rational& q, int order = 1);
    CycNum(int order, std::vector<Rational> coeffs);

    static CycNum zero(int order = 1) { return CycNum(Rational(0), order); }
    static CycNum one(int order = 1) { return CycNum(Rational(1), order); }
    /// zeta_N^k for any integer k.
    static CycNum root_of_unity(int n, long k);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// True when the value lies in Q; fills *out with it.
    bool is_rational(Rational* out = nullptr) const;

    /// Same value viewed in Q(zeta_m); requires order() | m.
    CycNum lift(int m) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& other);
    CycNum& operator-=(const CycNum& other);
    CycNum& operator*=(const CycNum& other);
    CycNum& operator*=(const Rational& q);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator*(CycNum a, const Rational& q) { return a *= q; }
    friend CycNum operator*(const Rational& q, CycNum a) { return a *= q; }

    /// Multiplicative inverse via the extended Euclidean algorithm with Phi_N.
    CycNum inverse() const;
    /// Complex conjugation, zeta -> zeta^{-1}.
    CycNum conj() const;

    /// Values compare equal across orders (both sides are lifted to the lcm).
    friend bool operator==(const CycNum& a, const CycNum& b);

    /// Evaluation at zeta_N = exp(2 pi i / N) in double precision.
    std::complex<double> embed() const;

    /// Human readable, e.g. "1/8 + 3*z^2" with z = zeta_N.
    std::string to_string() const;

private:
    void reduce(std::vector<Rational>& poly) const;

    int order_;
    std::vector<Rational> coeffs_;
};

/// Lifts a and b into the smallest common field.
int common_order(const CycNum& a, const CycNum& b);

} // namespace vw
