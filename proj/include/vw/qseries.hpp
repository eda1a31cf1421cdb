#pragma once

// Truncated Puiseux series in q with cyclotomic coefficients.

#include <map>
#include <vector>

#include "vw/cycnum.hpp"

namespace vw {

/// Sum of c_e q^e over exponents e in (1/D)Z, known exactly for e < truncOrder.
///
/// Exponents are stored as integer numerators over the per-series denominator
/// D. Zero coefficients are never stored and no stored exponent reaches the
/// truncation order.
class PuiseuxSeries {
public:
    PuiseuxSeries(int exp_denom, Rational trunc_order);

    /// c * q^exponent, known below trunc_order.
    static PuiseuxSeries monomial(const CycNum& c, const Rational& exponent, const Rational& trunc_order);
    /// sum_k coeffs[k] q^(first_exp + k), integer exponents.
    static PuiseuxSeries from_integers(const std::vector<Integer>& coeffs, long first_exp,
                                       const Rational& trunc_order);

    int exp_denom() const { return denom_; }
    const Rational& trunc_order() const { return trunc_; }
    /// Exponent numerator (over exp_denom) -> coefficient.
    const std::map<long, CycNum>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Coefficient at q^e; throws if e >= truncOrder.
    CycNum coefficient(const Rational& exponent) const;
    /// Lowest stored exponent, or the truncation order for a zero series.
    Rational valuation() const;

    /// Same series with exponents written over a multiple of exp_denom.
    PuiseuxSeries with_denom(int denom) const;
    /// Drops the denominator to the smallest one that represents every exponent.
    PuiseuxSeries normalized_denom() const;
    /// Lowers the truncation order to min(current, order).
    PuiseuxSeries truncated(const Rational& order) const;
    /// Lifts every coefficient into Q(zeta_n).
    PuiseuxSeries lift_coefficients(int n) const;

    PuiseuxSeries operator-() const;
    PuiseuxSeries& operator+=(const PuiseuxSeries& other);
    PuiseuxSeries& operator-=(const PuiseuxSeries& other);
    PuiseuxSeries& operator*=(const CycNum& c);

    friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
    friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
    friend PuiseuxSeries operator*(PuiseuxSeries a, const CycNum& c) { return a *= c; }
    friend PuiseuxSeries operator*(const CycNum& c, PuiseuxSeries a) { return a *= c; }
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

    /// Value equality: same truncation order and the same coefficient at every exponent.
    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

    /// Inserts c at the exponent numerator (over exp_denom); ignored at/after truncation.
    void add_term(long numerator, const CycNum& c);

private:
    Rational exponent_of(long numerator) const { return frac(numerator, denom_); }

    int denom_;
    Rational trunc_;
    std::map<long, CycNum> terms_;
};

/// Exact rational as numerator over a given denominator; throws if not representable.
long numerator_over(const Rational& e, int denom);

/// e(Hilb^n(K3)) for n = 0..count-1, the coefficients of prod (1-q^n)^-24.
std::vector<Integer> hilbert_euler_numbers(std::size_t count);

/// Delta(q) = q prod (1-q^n)^24 including the q^order term.
PuiseuxSeries delta(int order);
/// 1/Delta(q) = sum_n e(Hilb^n) q^(n-1) including the q^order term.
PuiseuxSeries hilb_series(int order);

/// Multiplicative inverse; the lowest coefficient must be nonzero.
PuiseuxSeries invert(const PuiseuxSeries& s);

/// q^e -> exp(2 pi i j e / r) q^(e/r), i.e. q replaced by zeta_r^j q^(1/r) with
/// the branch q^(1/r) = exp(2 pi i tau / r).
PuiseuxSeries substitute(const PuiseuxSeries& s, int r, long j);
/// q^e -> q^(m e).
PuiseuxSeries scale_exponent(const PuiseuxSeries& s, int m);
/// Multiplication by q^e.
PuiseuxSeries shift(const PuiseuxSeries& s, const Rational& e);
/// q -> zeta_n^j q for a series with integer exponents.
PuiseuxSeries rotate(const PuiseuxSeries& s, int n, long j);

/// Terms with exponent == k mod r, by direct filtering.
PuiseuxSeries sector_extract_filter(const PuiseuxSeries& s, int r, long k);
/// Same sector as (1/r) sum_j zeta_r^{-jk} s(zeta_r^j q).
PuiseuxSeries sector_extract_average(const PuiseuxSeries& s, int r, long k);
/// Filtering route; both routes share the precondition (D = 1, exponents >= 0).
PuiseuxSeries sector_extract(const PuiseuxSeries& s, int r, long k);

} // namespace vw
