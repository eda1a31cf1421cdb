#pragma once

// SU(r) and SU(r)/Z_r partition functions of K3 surfaces at prime rank.
//
// Every partition function is built twice: as a ModularExpr over inverse Delta
// atoms and as its Puiseux expansion. Coefficients live in Q(zeta_{2r}).
//
// The formulas assume generic polarizations; nothing here checks genericity.

#include <cstdint>

#include "vw/chern.hpp"
#include "vw/k3lattice.hpp"
#include "vw/modular_expr.hpp"
#include "vw/qseries.hpp"

namespace vw {

struct PartitionRequest {
    long r = 2;
    LatticeVector c1;
    /// Coefficients are returned for exponents below this order.
    Rational order = 1;
    SurfaceInvariants surface = SurfaceInvariants::k3();
};

/// Checks r prime, order > 0, c1 of the lattice rank and a K3 surface.
void validate(const PartitionRequest& req);

/// -chi(O_S)/(2r) + r K_S^2 / 24.
Rational normalization_exponent(long r, const SurfaceInvariants& surface);

/// delta_{c1,0}/r^3 Delta(r tau)^-1 + 1/r^2 sum_j exp(-pi i j c1^2/r) Delta((tau+j)/r)^-1.
ModularExpr su_expr(long r, bool c1_divisible, long c1sq_mod_2r);
ModularExpr su_expr(long r, const LatticeVector& c1);

/// delta_{w,0}/r^2 Delta(r tau)^-1 + 1/r sum_j exp(-pi i j w^2/r) Delta((tau+j)/r)^-1.
ModularExpr zw_expr(long r, const LatticeVector& w);

/// The w-sum collapsed with the two flux-sum identities.
ModularExpr su_modr_closed_expr(long r, const LatticeVector& c1);
/// The w-sum evaluated through the joint distribution of (w.c1 mod r, w^2 mod 2r).
ModularExpr su_modr_direct_expr(long r, const LatticeVector& c1, std::uint64_t budget = kDefaultEnumerationBudget);

PuiseuxSeries z_su(const PartitionRequest& req);
/// z_su from the invariants (c1 divisible by r, c1^2 mod 2r) alone.
PuiseuxSeries z_su_from_invariants(long r, bool c1_divisible, long c1sq, const Rational& order);
PuiseuxSeries z_w(long r, const LatticeVector& w, const Rational& order);

struct SuModResult {
    PuiseuxSeries series;
    ModularExpr closed;
    ModularExpr direct;
    bool routes_agree = false;
};

/// Both evaluation routes; series is expanded from the closed route.
SuModResult z_su_modr(const PartitionRequest& req, std::uint64_t budget = kDefaultEnumerationBudget);

/// q^(-1/r) sum_n q^(vd/2r) e(Hilb^(vd/2)) for a lift w of a non-zero class mod r.
PuiseuxSeries z_w_from_euler(long r, const LatticeVector& w, const Rational& order);

} // namespace vw
