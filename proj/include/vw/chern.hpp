#pragma once

// Twisted Chern characters on H*(S,Q), virtual dimensions and the integrality check.

#include <vector>

#include "vw/cycnum.hpp"
#include "vw/k3lattice.hpp"

namespace vw {

struct SurfaceInvariants {
    long chiO = 2;   // chi(O_S)
    long K2 = 0;     // K_S^2
    long euler = 24; // e(S)

    static SurfaceInvariants k3() { return {2, 0, 24}; }
    bool is_k3() const { return chiO == 2 && K2 == 0 && euler == 24; }
    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// (s, deg2, ch2) in H^0 + H^2 + H^4 of S with rational coefficients.
struct CohClass {
    long s = 0;
    std::vector<Rational> deg2;
    Rational ch2;

    friend bool operator==(const CohClass&, const CohClass&) = default;
};

/// Class (s, D, D^2/2 - n) with D integral.
CohClass class_from_integral(const EvenLattice& lattice, long s, const LatticeVector& D, const Integer& n);

/// Rational pairing on H^2.
Rational inner_rational(const EvenLattice& lattice, const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> to_rational(const LatticeVector& v);

/// Multiplication by exp(xi/r) = (1, xi/r, xi^2/(2r^2)).
CohClass twist(const EvenLattice& lattice, const CohClass& c, const LatticeVector& xi, long r);

/// 2 r n - (r-1) c1^2 - (r^2-1) chi(O_S).
Integer vd(long r, const Integer& c1sq, const Integer& n, const SurfaceInvariants& surface);

/// n = D^2/2 - ch2 for a class written as (s, D, D^2/2 - n).
Rational second_chern_number(const EvenLattice& lattice, const CohClass& c);

/// 2 s n - (s-1) D^2 - (s^2-1) chi(O_S); throws unless D and n are integral.
Integer euler_pairing_defect(const EvenLattice& lattice, const CohClass& c, const SurfaceInvariants& surface);

/// c2 == -(s-1) (w^2 mod 2s) mod 2s, where w is any integral lift of the class mod s.
bool congruence_check(const EvenLattice& lattice, long s, const LatticeVector& w, const Integer& c2);

struct IntegralityReport {
    long s = 0;
    std::vector<Rational> D;
    Rational n;
    bool s_ok = true;
    bool D_ok = false;
    bool n_ok = false;

    bool integral() const { return s_ok && D_ok && n_ok; }
};

/// Twists c by xi/r and reports whether the result has the form (s, D, D^2/2 - n)
/// with D integral and n an integer.
IntegralityReport integrality_check(const EvenLattice& lattice, const CohClass& c, const LatticeVector& xi, long r);

} // namespace vw
