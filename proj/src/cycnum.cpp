#include "vw/cycnum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace vw {

Rational frac(const Integer& n, const Integer& d)
{
    if (d == 0)
        throw DivisionByZero("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long gcd_int(long a, long b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_int(long a, long b) { return a / gcd_int(a, b) * b; }

long mod_floor(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

int euler_phi(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den)
{
    const std::size_t dn = den.size() - 1;
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        Integer c = num[i];
        quot[i - dn] = c;
        if (c == 0)
            continue;
        for (std::size_t k = 0; k <= dn; ++k)
            num[i - dn + k] -= c * den[k];
    }
    return quot;
}

IntPoly compute_cyclotomic(int n, const std::map<int, IntPoly>& known)
{
    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = divide_monic(p, known.at(d));
    return p;
}

void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// a = q*b + rem over Q[x]; b must be nonzero and trimmed.
void divmod(RatPoly a, const RatPoly& b, RatPoly& q, RatPoly& rem)
{
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational lead = b.back();
    while (a.size() >= b.size()) {
        Rational c = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k)
            a[shift + k] -= c * b[k];
        a.pop_back();
        trim(a);
    }
    rem = std::move(a);
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(int n)
{
    if (n < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0 && !cache.count(d))
            cache.emplace(d, compute_cyclotomic(d, cache));
    return cache.at(n);
}

CycNum::CycNum() : CycNum(Rational(0), 1) {}

CycNum::CycNum(const Rational& q, int order) : order_(order)
{
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
    coeffs_[0] = q;
    coeffs_[0].canonicalize();
}

CycNum::CycNum(int order, std::vector<Rational> coeffs) : order_(order)
{
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    for (auto& c : coeffs)
        c.canonicalize();
    reduce(coeffs);
    coeffs_ = std::move(coeffs);
}

void CycNum::reduce(std::vector<Rational>& poly) const
{
    const IntPoly& phi = cyclotomic_polynomial(order_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0)
            continue;
        Rational c = poly[i];
        for (std::size_t k = 0; k <= deg; ++k)
            poly[i - deg + k] -= c * phi[k];
    }
    poly.resize(deg, Rational(0));
}

CycNum CycNum::root_of_unity(int n, long k)
{
    if (n < 1)
        throw std::invalid_argument("root_of_unity: order must be positive");
    std::vector<Rational> poly(static_cast<std::size_t>(mod_floor(k, n)) + 1, Rational(0));
    poly.back() = 1;
    return CycNum(n, std::move(poly));
}

bool CycNum::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CycNum::is_rational(Rational* out) const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    if (out)
        *out = coeffs_[0];
    return true;
}

CycNum CycNum::lift(int m) const
{
    if (m == order_)
        return *this;
    if (m % order_ != 0)
        throw std::invalid_argument("lift: target order must be a multiple");
    const std::size_t step = static_cast<std::size_t>(m / order_);
    std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        poly[i * step] = coeffs_[i];
    return CycNum(m, std::move(poly));
}

int common_order(const CycNum& a, const CycNum& b)
{
    return static_cast<int>(lcm_int(a.order(), b.order()));
}

CycNum CycNum::operator-() const
{
    CycNum out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& other)
{
    if (other.order_ != order_) {
        int m = common_order(*this, other);
        *this = lift(m);
        return *this += other.lift(m);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) { return *this += -other; }

CycNum& CycNum::operator*=(const CycNum& other)
{
    if (other.order_ != order_) {
        int m = common_order(*this, other);
        *this = lift(m);
        return *this *= other.lift(m);
    }
    std::vector<Rational> prod = poly_mul(coeffs_, other.coeffs_);
    reduce(prod);
    coeffs_ = std::move(prod);
    return *this;
}

CycNum& CycNum::operator*=(const Rational& q)
{
    for (auto& c : coeffs_)
        c *= q;
    return *this;
}

CycNum CycNum::inverse() const
{
    if (is_zero())
        throw DivisionByZero("CycNum::inverse of zero");
    const IntPoly& phi_int = cyclotomic_polynomial(order_);
    RatPoly phi(phi_int.begin(), phi_int.end());
    RatPoly a = coeffs_;
    trim(a);

    // Invariant: r_i == s_i * a (mod phi).
    RatPoly r0 = phi, r1 = a;
    RatPoly s0 = {}, s1 = {Rational(1)};
    while (r1.size() > 1) {
        RatPoly q, rem;
        divmod(r0, r1, q, rem);
        RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant because phi is irreducible and a != 0.
    Rational c = r1.at(0);
    for (auto& x : s1)
        x /= c;
    return CycNum(order_, std::move(s1));
}

CycNum CycNum::conj() const
{
    std::vector<Rational> poly(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        poly[static_cast<std::size_t>(mod_floor(-static_cast<long>(i), order_))] += coeffs_[i];
    return CycNum(order_, std::move(poly));
}

bool operator==(const CycNum& a, const CycNum& b)
{
    if (a.order_ == b.order_)
        return a.coeffs_ == b.coeffs_;
    int m = common_order(a, b);
    return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::complex<double> CycNum::embed() const
{
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0)
            continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
        sum += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

std::string CycNum::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (k == 0)
            os << coeffs_[k].get_str();
        else
            os << "(" << coeffs_[k].get_str() << ")*z" << order_ << (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace vw
