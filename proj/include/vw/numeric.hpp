#pragma once

// Numeric evaluation on the upper half plane, q = exp(2 pi i tau).

#include <complex>
#include <vector>

#include "vw/cycnum.hpp"
#include "vw/modular_expr.hpp"
#include "vw/qseries.hpp"

namespace vw {

/// Working precision in decimal digits. Up to 15 digits evaluates in double,
/// above that in MPFR with the requested number of digits.
struct Precision {
    int digits = 15;
    bool is_double() const { return digits <= 15; }
};

struct NumericValue {
    std::complex<double> value;
    /// Upper bound on the absolute size of the omitted tail.
    double tail_bound = 0.0;
};

/// Evaluates c at zeta_N = exp(2 pi i / N).
std::complex<double> embed(const CycNum& c, Precision precision);

/// sum_e c_e exp(2 pi i tau e) over the stored terms, using the branch
/// q^e = exp(2 pi i tau e) for fractional e.
std::complex<double> eval_series(const PuiseuxSeries& s, std::complex<double> tau, Precision precision = {});

/// sum_e |c_e| |q^e|: the size of the terms being summed, against which
/// cancellation is judged.
double series_magnitude(const PuiseuxSeries& s, std::complex<double> tau);

/// tau^weight * sum c * atom(tau); each atom is summed from its q-expansion over
/// e(Hilb^h) for h < hilbert_terms.
NumericValue eval_expr(const ModularExpr& e, std::complex<double> tau, int hilbert_terms, Precision precision = {});

/// Bound on sum_{h >= first_omitted} e(Hilb^h) x^(h-1) for 0 < x < 1, from the
/// coefficientwise bound e(Hilb^h) <= P(y) / y^h with P(y) = prod (1-y^n)^-24.
double hilbert_tail_bound(double x, long first_omitted);

/// Tail of the atoms of e once their expansion is cut at q-exponent trunc_order,
/// at the point tau, weighted by |c| |tau^weight|.
double expansion_tail_bound(const ModularExpr& e, std::complex<double> tau, const Rational& trunc_order);

/// Delta(tau) = q prod_{n<terms} (1 - q^n)^24.
std::complex<double> delta_product(std::complex<double> tau, int terms, Precision precision = {});

} // namespace vw
