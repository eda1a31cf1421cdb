#include "vw/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace vw {

namespace {

using BigFloat = boost::multiprecision::mpfr_float;

template <class Real>
struct Cplx {
    Real re = 0;
    Real im = 0;

    Cplx& operator+=(const Cplx& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend Cplx operator+(Cplx a, const Cplx& b) { return a += b; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const Real& s, const Cplx& a) { return {s * a.re, s * a.im}; }
};

template <class Real>
Real real_from(const Rational& q)
{
    if constexpr (std::is_same_v<Real, double>) {
        return q.get_d();
    } else {
        Real out;
        mpfr_set_q(out.backend().data(), q.get_mpq_t(), MPFR_RNDN);
        return out;
    }
}

template <class Real>
Real real_from(const Integer& z)
{
    if constexpr (std::is_same_v<Real, double>) {
        return z.get_d();
    } else {
        Real out;
        mpfr_set_z(out.backend().data(), z.get_mpz_t(), MPFR_RNDN);
        return out;
    }
}

template <class Real>
Real pi_value()
{
    return boost::math::constants::pi<Real>();
}

template <class Real>
std::complex<double> to_double(const Cplx<Real>& z)
{
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

/// exp(2 pi i x) for real x
template <class Real>
Cplx<Real> unit(const Real& x)
{
    using std::cos;
    using std::sin;
    Real angle = 2 * pi_value<Real>() * x;
    return {cos(angle), sin(angle)};
}

/// exp(2 pi i tau e) for rational e
template <class Real>
Cplx<Real> q_power(const Cplx<Real>& tau, const Rational& e)
{
    using std::exp;
    Real ev = real_from<Real>(e);
    Real modulus = exp(-2 * pi_value<Real>() * tau.im * ev);
    return modulus * unit<Real>(tau.re * ev);
}

template <class Real>
Cplx<Real> embed_as(const CycNum& c)
{
    Cplx<Real> sum;
    const auto& coeffs = c.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0)
            continue;
        sum += real_from<Real>(coeffs[k]) * unit<Real>(Real(static_cast<long>(k)) / Real(c.order()));
    }
    return sum;
}

template <class Real>
Cplx<Real> tau_power(const Cplx<Real>& tau, int weight)
{
    Cplx<Real> base = tau;
    if (weight < 0) {
        Real norm = tau.re * tau.re + tau.im * tau.im;
        base = {tau.re / norm, -tau.im / norm};
        weight = -weight;
    }
    Cplx<Real> out{Real(1), Real(0)};
    for (int i = 0; i < weight; ++i)
        out = out * base;
    return out;
}

template <class Real>
Cplx<Real> eval_series_as(const PuiseuxSeries& s, const Cplx<Real>& tau)
{
    Cplx<Real> sum;
    for (const auto& [p, c] : s.terms())
        sum += embed_as<Real>(c) * q_power(tau, frac(p, s.exp_denom()));
    return sum;
}

// sum_{h < terms} e(Hilb^h) X^(h-1) with X = exp(2 pi i (tau + j)/m) or exp(2 pi i m tau)
template <class Real>
Cplx<Real> eval_atom_as(const DeltaAtom& atom, const Cplx<Real>& tau, const std::vector<Integer>& euler)
{
    Cplx<Real> x_tau = atom.kind == DeltaAtom::Kind::ScaledUp
                           ? Cplx<Real>{tau.re * atom.m, tau.im * atom.m}
                           : Cplx<Real>{(tau.re + atom.j) / atom.m, tau.im / atom.m};
    Cplx<Real> x = q_power(x_tau, Rational(1));
    Cplx<Real> x_inv = q_power(x_tau, Rational(-1));
    // Horner in X, then divide by X
    Cplx<Real> acc;
    for (std::size_t h = euler.size(); h-- > 0;)
        acc = acc * x + Cplx<Real>{real_from<Real>(euler[h]), Real(0)};
    return acc * x_inv;
}

template <class Real>
NumericValue eval_expr_as(const ModularExpr& e, const Cplx<Real>& tau, int hilbert_terms)
{
    const std::vector<Integer> euler = hilbert_euler_numbers(static_cast<std::size_t>(hilbert_terms));
    Cplx<Real> sum;
    double tail = 0.0;
    for (const auto& [atom, c] : e.terms()) {
        sum += embed_as<Real>(c) * eval_atom_as(atom, tau, euler);
        const double im = static_cast<double>(tau.im);
        const double x = atom.kind == DeltaAtom::Kind::ScaledUp ? std::exp(-2 * M_PI * im * atom.m)
                                                                : std::exp(-2 * M_PI * im / atom.m);
        tail += std::abs(c.embed()) * hilbert_tail_bound(x, hilbert_terms);
    }
    const Cplx<Real> factor = tau_power(tau, e.weight());
    const double factor_abs = std::abs(to_double(factor));
    return {to_double(factor * sum), tail * factor_abs};
}

template <class Real>
Cplx<Real> delta_product_as(const Cplx<Real>& tau, int terms)
{
    Cplx<Real> q = q_power(tau, Rational(1));
    Cplx<Real> qn = q;
    Cplx<Real> prod{Real(1), Real(0)};
    for (int n = 1; n < terms; ++n) {
        Cplx<Real> factor = Cplx<Real>{Real(1), Real(0)} - qn;
        Cplx<Real> f2 = factor * factor;
        Cplx<Real> f4 = f2 * f2;
        Cplx<Real> f8 = f4 * f4;
        Cplx<Real> f24 = f8 * f8 * f8;
        prod = prod * f24;
        qn = qn * q;
    }
    return q * prod;
}

template <class Real>
Cplx<Real> from_std(std::complex<double> z)
{
    return {Real(z.real()), Real(z.imag())};
}

void require_upper_half_plane(std::complex<double> tau)
{
    if (!(tau.imag() > 0))
        throw std::invalid_argument("tau must lie in the upper half plane");
}

// Sets the MPFR working precision for the lifetime of the guard.
class PrecisionScope {
public:
    explicit PrecisionScope(Precision p) : saved_(BigFloat::default_precision())
    {
        BigFloat::default_precision(static_cast<unsigned>(p.digits));
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

} // namespace

std::complex<double> embed(const CycNum& c, Precision precision)
{
    if (precision.is_double())
        return to_double(embed_as<double>(c));
    PrecisionScope scope(precision);
    return to_double(embed_as<BigFloat>(c));
}

std::complex<double> eval_series(const PuiseuxSeries& s, std::complex<double> tau, Precision precision)
{
    require_upper_half_plane(tau);
    if (precision.is_double())
        return to_double(eval_series_as(s, from_std<double>(tau)));
    PrecisionScope scope(precision);
    return to_double(eval_series_as(s, from_std<BigFloat>(tau)));
}

double series_magnitude(const PuiseuxSeries& s, std::complex<double> tau)
{
    require_upper_half_plane(tau);
    double sum = 0.0;
    for (const auto& [p, c] : s.terms())
        sum += std::abs(c.embed()) * std::exp(-2 * M_PI * tau.imag() * frac(p, s.exp_denom()).get_d());
    return sum;
}

NumericValue eval_expr(const ModularExpr& e, std::complex<double> tau, int hilbert_terms, Precision precision)
{
    require_upper_half_plane(tau);
    if (hilbert_terms < 1)
        throw std::invalid_argument("eval_expr: need at least one term");
    if (precision.is_double())
        return eval_expr_as(e, from_std<double>(tau), hilbert_terms);
    PrecisionScope scope(precision);
    return eval_expr_as(e, from_std<BigFloat>(tau), hilbert_terms);
}

std::complex<double> delta_product(std::complex<double> tau, int terms, Precision precision)
{
    require_upper_half_plane(tau);
    if (precision.is_double())
        return to_double(delta_product_as(from_std<double>(tau), terms));
    PrecisionScope scope(precision);
    return to_double(delta_product_as(from_std<BigFloat>(tau), terms));
}

double hilbert_tail_bound(double x, long first_omitted)
{
    if (!(x > 0 && x < 1))
        throw std::invalid_argument("hilbert_tail_bound: need 0 < x < 1");
    first_omitted = std::max(first_omitted, 0L);
    double best = std::numeric_limits<double>::infinity();
    // y ranges over (x, 0.99] on a logarithmic grid
    const double lo = std::log(x), hi = std::log(0.99);
    if (lo >= hi)
        return best;
    for (int i = 1; i <= 200; ++i) {
        const double log_y = lo + (hi - lo) * i / 200.0;
        const double y = std::exp(log_y);
        double log_p = 0.0;
        double yn = y;
        for (int n = 1; n < 100000 && yn > 1e-18; ++n) {
            log_p -= 24.0 * std::log1p(-yn);
            yn *= y;
        }
        const double ratio = x / y;
        const double log_bound =
            log_p + static_cast<double>(first_omitted) * std::log(ratio) - std::log1p(-ratio) - std::log(x);
        best = std::min(best, log_bound);
    }
    return std::exp(best);
}

double expansion_tail_bound(const ModularExpr& e, std::complex<double> tau, const Rational& trunc_order)
{
    require_upper_half_plane(tau);
    double tail = 0.0;
    for (const auto& [atom, c] : e.terms()) {
        // first omitted h: exponent of X^(h-1) reaches trunc_order
        Rational h_bound;
        double x;
        if (atom.kind == DeltaAtom::Kind::ScaledUp) {
            h_bound = trunc_order / atom.m + 1;
            x = std::exp(-2 * M_PI * tau.imag() * atom.m);
        } else {
            h_bound = trunc_order * atom.m + 1;
            x = std::exp(-2 * M_PI * tau.imag() / atom.m);
        }
        Integer first;
        mpz_cdiv_q(first.get_mpz_t(), h_bound.get_num_mpz_t(), h_bound.get_den_mpz_t());
        tail += std::abs(c.embed()) * hilbert_tail_bound(x, first.get_si());
    }
    return tail * std::pow(std::abs(tau), e.weight());
}

} // namespace vw
