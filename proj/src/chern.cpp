#include "vw/chern.hpp"

#include <stdexcept>

namespace vw {

std::vector<Rational> to_rational(const LatticeVector& v)
{
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long x : v.coords)
        out.emplace_back(x);
    return out;
}

Rational inner_rational(const EvenLattice& lattice, const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    const std::size_t n = static_cast<std::size_t>(lattice.rank());
    if (a.size() != n || b.size() != n)
        throw std::invalid_argument("inner_rational: dimension mismatch");
    const Gram& g = lattice.gram();
    Rational sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (g[i][j] != 0 && b[j] != 0)
                sum += a[i] * g[i][j] * b[j];
    }
    return sum;
}

CohClass class_from_integral(const EvenLattice& lattice, long s, const LatticeVector& D, const Integer& n)
{
    CohClass c{s, to_rational(D), Rational(0)};
    c.ch2 = inner_rational(lattice, c.deg2, c.deg2) / 2 - Rational(n);
    return c;
}

CohClass twist(const EvenLattice& lattice, const CohClass& c, const LatticeVector& xi, long r)
{
    if (r == 0)
        throw std::invalid_argument("twist: r must be nonzero");
    const std::vector<Rational> x = to_rational(xi);
    CohClass out = c;
    for (std::size_t i = 0; i < x.size(); ++i)
        out.deg2.at(i) += frac(c.s, r) * x[i];
    out.ch2 += inner_rational(lattice, c.deg2, x) / r +
               Rational(c.s) * inner_rational(lattice, x, x) / (2 * Rational(r) * r);
    return out;
}

Integer vd(long r, const Integer& c1sq, const Integer& n, const SurfaceInvariants& surface)
{
    return Integer(2 * r) * n - Integer(r - 1) * c1sq - Integer(r * r - 1) * surface.chiO;
}

Rational second_chern_number(const EvenLattice& lattice, const CohClass& c)
{
    return inner_rational(lattice, c.deg2, c.deg2) / 2 - c.ch2;
}

Integer euler_pairing_defect(const EvenLattice& lattice, const CohClass& c, const SurfaceInvariants& surface)
{
    for (const auto& x : c.deg2)
        if (x.get_den() != 1)
            throw std::invalid_argument("euler_pairing_defect: D must be integral");
    const Rational n = second_chern_number(lattice, c);
    if (n.get_den() != 1)
        throw std::invalid_argument("euler_pairing_defect: n must be an integer");
    const Rational d2 = inner_rational(lattice, c.deg2, c.deg2);
    return Integer(2 * c.s) * n.get_num() - Integer(c.s - 1) * d2.get_num() -
           Integer(c.s * c.s - 1) * surface.chiO;
}

bool congruence_check(const EvenLattice& lattice, long s, const LatticeVector& w, const Integer& c2)
{
    if (s < 1)
        throw std::invalid_argument("congruence_check: rank must be positive");
    const long two_s = 2 * s;
    const long w2 = square_mod_2r(lattice, w, s);
    Integer rhs = -Integer(s - 1) * w2;
    Integer diff = c2 - rhs;
    return mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(two_s)) != 0;
}

IntegralityReport integrality_check(const EvenLattice& lattice, const CohClass& c, const LatticeVector& xi, long r)
{
    const CohClass t = twist(lattice, c, xi, r);
    IntegralityReport report;
    report.s = t.s;
    report.D = t.deg2;
    report.n = second_chern_number(lattice, t);
    report.D_ok = true;
    for (const auto& x : t.deg2)
        if (x.get_den() != 1)
            report.D_ok = false;
    report.n_ok = report.n.get_den() == 1;
    return report;
}

} // namespace vw
