#include "vw/partition.hpp"

#include <stdexcept>

namespace vw {

namespace {

int field_order(long r) { return static_cast<int>(2 * r); }

void require_prime(long r)
{
    if (!is_prime(r))
        throw std::invalid_argument("rank r = " + std::to_string(r) + " is not prime");
}

void require_k3(const SurfaceInvariants& surface)
{
    if (!surface.is_k3())
        throw std::invalid_argument("closed-form partition functions are only available for K3 surfaces");
}

Integer power(long base, unsigned long exp)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return out;
}

PuiseuxSeries expand_in_field(const ModularExpr& e, long r, const Rational& order)
{
    return e.expand(order).lift_coefficients(field_order(r));
}

} // namespace

void validate(const PartitionRequest& req)
{
    require_prime(req.r);
    require_k3(req.surface);
    if (req.order <= 0)
        throw std::invalid_argument("truncation order must be positive");
    if (static_cast<int>(req.c1.size()) != k3_lattice().rank())
        throw std::invalid_argument("c1 must have " + std::to_string(k3_lattice().rank()) + " coordinates");
}

Rational normalization_exponent(long r, const SurfaceInvariants& surface)
{
    return frac(-surface.chiO, 2 * r) + frac(r * surface.K2, 24);
}

ModularExpr su_expr(long r, bool c1_divisible, long c1sq_mod_2r)
{
    require_prime(r);
    const int order = field_order(r);
    ModularExpr e;
    if (c1_divisible)
        e.add(DeltaAtom::scaled_up(static_cast<int>(r)), CycNum(Rational(1, power(r, 3)), order));
    const Rational inv_r2(1, power(r, 2));
    for (long j = 0; j < r; ++j)
        e.add(DeltaAtom::shifted(j, static_cast<int>(r)), CycNum::root_of_unity(order, -j * c1sq_mod_2r) * inv_r2);
    return e;
}

ModularExpr su_expr(long r, const LatticeVector& c1)
{
    const EvenLattice& lattice = k3_lattice();
    return su_expr(r, delta_div(c1, lattice.zero(), r) == 1, square_mod_2r(lattice, c1, r));
}

ModularExpr zw_expr(long r, const LatticeVector& w)
{
    require_prime(r);
    const EvenLattice& lattice = k3_lattice();
    const int order = field_order(r);
    const long w2 = square_mod_2r(lattice, w, r);
    ModularExpr e;
    if (delta_div(w, lattice.zero(), r))
        e.add(DeltaAtom::scaled_up(static_cast<int>(r)), CycNum(Rational(1, power(r, 2)), order));
    for (long j = 0; j < r; ++j)
        e.add(DeltaAtom::shifted(j, static_cast<int>(r)), CycNum::root_of_unity(order, -j * w2) * Rational(1, r));
    return e;
}

ModularExpr su_modr_closed_expr(long r, const LatticeVector& c1)
{
    require_prime(r);
    const EvenLattice& lattice = k3_lattice();
    const int order = field_order(r);
    ModularExpr e;
    // only w = 0 carries the Delta(r tau)^-1 atom, with phase exp(0) = 1
    e.add(DeltaAtom::scaled_up(static_cast<int>(r)), CycNum(Rational(1, power(r, 2)), order));
    for (long j = 0; j < r; ++j)
        e.add(DeltaAtom::shifted(j, static_cast<int>(r)),
              flux_sum_closed_form(lattice, r, j, c1).lift(order) * Rational(1, r));
    return e;
}

ModularExpr su_modr_direct_expr(long r, const LatticeVector& c1, std::uint64_t budget)
{
    require_prime(r);
    const int order = field_order(r);
    const JointDistribution dist = joint_distribution(k3_lattice(), r, c1, budget);
    ModularExpr e;
    e.add(DeltaAtom::scaled_up(static_cast<int>(r)), CycNum(Rational(1, power(r, 2)), order));
    for (long j = 0; j < r; ++j)
        e.add(DeltaAtom::shifted(j, static_cast<int>(r)), gauss_sum_from_distribution(dist, j) * Rational(1, r));
    return e;
}

PuiseuxSeries z_su(const PartitionRequest& req)
{
    validate(req);
    return expand_in_field(su_expr(req.r, req.c1), req.r, req.order);
}

PuiseuxSeries z_su_from_invariants(long r, bool c1_divisible, long c1sq, const Rational& order)
{
    if (c1sq % 2 != 0)
        throw std::invalid_argument("c1^2 must be even on a K3 surface");
    if (order <= 0)
        throw std::invalid_argument("truncation order must be positive");
    return expand_in_field(su_expr(r, c1_divisible, mod_floor(c1sq, 2 * r)), r, order);
}

PuiseuxSeries z_w(long r, const LatticeVector& w, const Rational& order)
{
    PartitionRequest req{r, w, order, SurfaceInvariants::k3()};
    validate(req);
    return expand_in_field(zw_expr(r, w), r, order);
}

SuModResult z_su_modr(const PartitionRequest& req, std::uint64_t budget)
{
    validate(req);
    ModularExpr closed = su_modr_closed_expr(req.r, req.c1);
    ModularExpr direct = su_modr_direct_expr(req.r, req.c1, budget);
    PuiseuxSeries series = expand_in_field(closed, req.r, req.order);
    const bool agree = closed == direct && series == expand_in_field(direct, req.r, req.order);
    return {std::move(series), std::move(closed), std::move(direct), agree};
}

PuiseuxSeries z_w_from_euler(long r, const LatticeVector& w, const Rational& order)
{
    PartitionRequest req{r, w, order, SurfaceInvariants::k3()};
    validate(req);
    const EvenLattice& lattice = k3_lattice();
    if (delta_div(w, lattice.zero(), r))
        throw std::invalid_argument("z_w_from_euler needs w != 0 mod r");

    const SurfaceInvariants& surface = req.surface;
    const Integer xi2 = inner(lattice, w, w);
    const Rational prefactor = normalization_exponent(r, surface);

    // smallest n with vd(r, xi, n) >= 0
    Integer offset = Integer(r - 1) * xi2 + Integer(r * r - 1) * surface.chiO;
    Integer n;
    mpz_cdiv_q_ui(n.get_mpz_t(), offset.get_mpz_t(), static_cast<unsigned long>(2 * r));

    std::vector<std::pair<Rational, Integer>> terms;
    Integer max_half = 0;
    for (;; ++n) {
        const Integer dim = vd(r, xi2, n, surface);
        if (dim < 0)
            continue;
        if (mpz_odd_p(dim.get_mpz_t()))
            throw std::logic_error("odd virtual dimension on a K3 surface");
        const Rational exponent = prefactor + frac(dim, 2 * r);
        if (exponent >= order)
            break;
        const Integer half = dim / 2;
        terms.emplace_back(exponent, half);
        max_half = half;
    }

    const std::vector<Integer> euler = hilbert_euler_numbers(max_half.get_ui() + 1);
    PuiseuxSeries out(static_cast<int>(r), order);
    for (const auto& [exponent, half] : terms)
        out.add_term(numerator_over(exponent, static_cast<int>(r)),
                     CycNum(Rational(euler[half.get_ui()]), field_order(r)));
    return out;
}

} // namespace vw
