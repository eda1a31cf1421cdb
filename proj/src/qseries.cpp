#include "vw/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace vw {

long numerator_over(const Rational& e, int denom)
{
    Rational scaled = e * denom;
    if (scaled.get_den() != 1)
        throw std::invalid_argument("exponent " + e.get_str() + " is not in (1/" +
                                    std::to_string(denom) + ")Z");
    if (!scaled.get_num().fits_slong_p())
        throw std::overflow_error("exponent numerator out of range");
    return scaled.get_num().get_si();
}

PuiseuxSeries::PuiseuxSeries(int exp_denom, Rational trunc_order)
    : denom_(exp_denom), trunc_(std::move(trunc_order))
{
    if (exp_denom < 1)
        throw std::invalid_argument("exponent denominator must be positive");
}

PuiseuxSeries PuiseuxSeries::monomial(const CycNum& c, const Rational& exponent, const Rational& trunc_order)
{
    int denom = static_cast<int>(exponent.get_den().get_si());
    PuiseuxSeries s(denom, trunc_order);
    s.add_term(numerator_over(exponent, denom), c);
    return s;
}

PuiseuxSeries PuiseuxSeries::from_integers(const std::vector<Integer>& coeffs, long first_exp,
                                           const Rational& trunc_order)
{
    PuiseuxSeries s(1, trunc_order);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0)
            s.add_term(first_exp + static_cast<long>(k), CycNum(Rational(coeffs[k])));
    return s;
}

void PuiseuxSeries::add_term(long numerator, const CycNum& c)
{
    if (exponent_of(numerator) >= trunc_ || c.is_zero())
        return;
    auto it = terms_.find(numerator);
    if (it == terms_.end()) {
        terms_.emplace(numerator, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

CycNum PuiseuxSeries::coefficient(const Rational& exponent) const
{
    if (exponent >= trunc_)
        throw std::out_of_range("coefficient at q^" + exponent.get_str() + " is beyond truncation order " +
                                trunc_.get_str());
    Rational scaled = exponent * denom_;
    if (scaled.get_den() != 1)
        return CycNum::zero();
    auto it = terms_.find(scaled.get_num().get_si());
    return it == terms_.end() ? CycNum::zero() : it->second;
}

Rational PuiseuxSeries::valuation() const
{
    return terms_.empty() ? trunc_ : exponent_of(terms_.begin()->first);
}

PuiseuxSeries PuiseuxSeries::with_denom(int denom) const
{
    if (denom % denom_ != 0)
        throw std::invalid_argument("with_denom: target must be a multiple of the current denominator");
    const long factor = denom / denom_;
    PuiseuxSeries out(denom, trunc_);
    for (const auto& [p, c] : terms_)
        out.terms_.emplace(p * factor, c);
    return out;
}

PuiseuxSeries PuiseuxSeries::normalized_denom() const
{
    long g = denom_;
    for (const auto& [p, c] : terms_)
        g = gcd_int(g, p);
    PuiseuxSeries out(static_cast<int>(denom_ / g), trunc_);
    for (const auto& [p, c] : terms_)
        out.terms_.emplace(p / g, c);
    return out;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& order) const
{
    PuiseuxSeries out(denom_, std::min(trunc_, order));
    for (const auto& [p, c] : terms_)
        if (exponent_of(p) < out.trunc_)
            out.terms_.emplace(p, c);
    return out;
}

PuiseuxSeries PuiseuxSeries::lift_coefficients(int n) const
{
    PuiseuxSeries out(denom_, trunc_);
    for (const auto& [p, c] : terms_)
        out.terms_.emplace(p, c.lift(n));
    return out;
}

PuiseuxSeries PuiseuxSeries::operator-() const
{
    PuiseuxSeries out = *this;
    for (auto& [p, c] : out.terms_)
        c = -c;
    return out;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& other)
{
    const int denom = static_cast<int>(lcm_int(denom_, other.denom_));
    PuiseuxSeries out = with_denom(denom).truncated(other.trunc_);
    const PuiseuxSeries rhs = other.with_denom(denom);
    for (const auto& [p, c] : rhs.terms_)
        out.add_term(p, c);
    *this = std::move(out);
    return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& other) { return *this += -other; }

PuiseuxSeries& PuiseuxSeries::operator*=(const CycNum& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, coeff] : terms_)
        coeff *= c;
    return *this;
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    const int denom = static_cast<int>(lcm_int(a.denom_, b.denom_));
    const Rational trunc = std::min(a.trunc_ + b.valuation(), b.trunc_ + a.valuation());
    const PuiseuxSeries lhs = a.with_denom(denom);
    const PuiseuxSeries rhs = b.with_denom(denom);
    PuiseuxSeries out(denom, trunc);
    const Rational limit = trunc * denom;
    for (const auto& [p, x] : lhs.terms_) {
        for (const auto& [q, y] : rhs.terms_) {
            if (Rational(p + q) >= limit)
                break;
            out.add_term(p + q, x * y);
        }
    }
    return out;
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    if (a.trunc_ != b.trunc_)
        return false;
    const int denom = static_cast<int>(lcm_int(a.denom_, b.denom_));
    const PuiseuxSeries lhs = a.with_denom(denom);
    const PuiseuxSeries rhs = b.with_denom(denom);
    if (lhs.terms_.size() != rhs.terms_.size())
        return false;
    auto it = rhs.terms_.begin();
    for (const auto& [p, c] : lhs.terms_) {
        if (it->first != p || !(it->second == c))
            return false;
        ++it;
    }
    return true;
}

std::vector<Integer> hilbert_euler_numbers(std::size_t count)
{
    std::vector<Integer> sigma(count, 0);
    for (std::size_t d = 1; d < count; ++d)
        for (std::size_t m = d; m < count; m += d)
            sigma[m] += static_cast<unsigned long>(d);
    std::vector<Integer> p(count, 0);
    if (count == 0)
        return p;
    // n p_n = 24 sum_{k=1}^n sigma(k) p_{n-k}
    p[0] = 1;
    for (std::size_t n = 1; n < count; ++n) {
        Integer acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            acc += sigma[k] * p[n - k];
        acc *= 24;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
        p[n] = acc;
    }
    return p;
}

PuiseuxSeries delta(int order)
{
    if (order < 1)
        throw std::invalid_argument("delta: order must be >= 1");
    // prod_{n>=1} (1-q^n)^24 up to q^(order-1)
    std::vector<Integer> poly(static_cast<std::size_t>(order), 0);
    poly[0] = 1;
    for (int n = 1; n < order; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (int i = order - 1; i >= n; --i)
                poly[i] -= poly[i - n];
    return PuiseuxSeries::from_integers(poly, 1, Rational(order + 1));
}

PuiseuxSeries hilb_series(int order)
{
    if (order < -1)
        throw std::invalid_argument("hilb_series: order must be >= -1");
    return PuiseuxSeries::from_integers(hilbert_euler_numbers(static_cast<std::size_t>(order) + 2), -1,
                                        Rational(order + 1));
}

PuiseuxSeries invert(const PuiseuxSeries& s)
{
    if (s.empty())
        throw DivisionByZero("invert: series has no known nonzero coefficient");
    const int denom = s.exp_denom();
    const long v = s.terms().begin()->first;
    const CycNum lead_inv = s.terms().begin()->second.inverse();
    const Rational rel = s.trunc_order() - frac(v, denom);
    // number of numerator steps n with v/D + n/D < trunc
    Rational steps_q = rel * denom;
    Integer ceil_steps;
    mpz_cdiv_q(ceil_steps.get_mpz_t(), steps_q.get_num_mpz_t(), steps_q.get_den_mpz_t());
    const long count = ceil_steps.get_si();

    std::vector<std::pair<long, CycNum>> normalized;
    for (const auto& [p, c] : s.terms())
        if (p != v && p - v < count)
            normalized.emplace_back(p - v, c * lead_inv);

    std::vector<CycNum> inv(static_cast<std::size_t>(std::max(count, 0L)));
    if (count > 0)
        inv[0] = CycNum::one();
    for (long n = 1; n < count; ++n) {
        CycNum acc = CycNum::zero();
        for (const auto& [k, b] : normalized) {
            if (k > n)
                break;
            const CycNum& a = inv[static_cast<std::size_t>(n - k)];
            if (!a.is_zero())
                acc += b * a;
        }
        inv[static_cast<std::size_t>(n)] = -acc;
    }

    PuiseuxSeries out(denom, s.trunc_order() - 2 * frac(v, denom));
    for (long n = 0; n < count; ++n)
        if (!inv[static_cast<std::size_t>(n)].is_zero())
            out.add_term(n - v, inv[static_cast<std::size_t>(n)] * lead_inv);
    return out;
}

PuiseuxSeries substitute(const PuiseuxSeries& s, int r, long j)
{
    if (r < 1)
        throw std::invalid_argument("substitute: r must be positive");
    const int denom = s.exp_denom() * r;
    PuiseuxSeries out(denom, s.trunc_order() / r);
    for (const auto& [p, c] : s.terms())
        out.add_term(p, j == 0 ? c : c * CycNum::root_of_unity(denom, j * p));
    return out;
}

PuiseuxSeries scale_exponent(const PuiseuxSeries& s, int m)
{
    if (m < 1)
        throw std::invalid_argument("scale_exponent: m must be positive");
    PuiseuxSeries out(s.exp_denom(), s.trunc_order() * m);
    for (const auto& [p, c] : s.terms())
        out.add_term(p * m, c);
    return out;
}

PuiseuxSeries shift(const PuiseuxSeries& s, const Rational& e)
{
    const int denom = static_cast<int>(lcm_int(s.exp_denom(), e.get_den().get_si()));
    const PuiseuxSeries base = s.with_denom(denom);
    const long offset = numerator_over(e, denom);
    PuiseuxSeries out(denom, s.trunc_order() + e);
    for (const auto& [p, c] : base.terms())
        out.add_term(p + offset, c);
    return out;
}

PuiseuxSeries rotate(const PuiseuxSeries& s, int n, long j)
{
    const int root_order = n * s.exp_denom();
    PuiseuxSeries out(s.exp_denom(), s.trunc_order());
    for (const auto& [p, c] : s.terms())
        out.add_term(p, c * CycNum::root_of_unity(root_order, j * p));
    return out;
}

namespace {

void require_power_series(const PuiseuxSeries& s, int r)
{
    if (r < 1)
        throw std::invalid_argument("sector_extract: r must be positive");
    if (s.exp_denom() != 1)
        throw std::invalid_argument("sector_extract: series must have integer exponents");
    if (!s.empty() && s.terms().begin()->first < 0)
        throw std::invalid_argument("sector_extract: series must have non-negative exponents");
}

} // namespace

PuiseuxSeries sector_extract_filter(const PuiseuxSeries& s, int r, long k)
{
    require_power_series(s, r);
    PuiseuxSeries out(1, s.trunc_order());
    for (const auto& [p, c] : s.terms())
        if (mod_floor(p - k, r) == 0)
            out.add_term(p, c);
    return out;
}

PuiseuxSeries sector_extract_average(const PuiseuxSeries& s, int r, long k)
{
    require_power_series(s, r);
    PuiseuxSeries out(1, s.trunc_order());
    for (long j = 0; j < r; ++j)
        out += CycNum::root_of_unity(r, -j * k) * rotate(s, r, j);
    return out * CycNum(Rational(1, r));
}

PuiseuxSeries sector_extract(const PuiseuxSeries& s, int r, long k) { return sector_extract_filter(s, r, k); }

} // namespace vw
