#pragma once

// The S-transformation tau -> -1/tau on inverse Delta atoms, and exact and
// numeric checks of Z^SU(r)_c1(-1/tau) = r^p tau^-12 Z^{SU(r)/Z_r}_c1(tau).

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "vw/k3lattice.hpp"
#include "vw/modular_expr.hpp"
#include "vw/numeric.hpp"

namespace vw {

/// Exponent p of the rank prefactor r^p in the K3 duality relation as usually
/// quoted. See README for the discussion of p = -11 versus p = -12.
inline constexpr int kStatedPrefactorExponent = -11;

class UnsupportedAtom : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rewrites e(-1/tau) in terms of atoms at tau:
///   Delta(r tau)^-1        -> r^12  tau^-12 Delta(tau/r)^-1
///   Delta(tau/r)^-1        -> r^-12 tau^-12 Delta(r tau)^-1
///   Delta((tau+j)/r)^-1    -> tau^-12 Delta((tau+n_j)/r)^-1,  j != 0
/// Result weight is e.weight() - 12.
ModularExpr s_transform(const ModularExpr& e, long r);

struct AtomDiff {
    DeltaAtom atom;
    CycNum lhs;
    CycNum rhs;
};

/// Atoms whose coefficients differ between a and b (weights compared separately).
std::vector<AtomDiff> diff_exprs(const ModularExpr& a, const ModularExpr& b);

struct SymbolicReport {
    long r = 0;
    LatticeVector c1;
    int prefactor_exponent = kStatedPrefactorExponent;
    bool pass = false;
    ModularExpr lhs;
    ModularExpr rhs;
    std::vector<AtomDiff> diffs;
    /// lhs / rhs when both have the same atoms and a common coefficient ratio.
    std::optional<CycNum> uniform_ratio;
};

/// Compares two weight-tagged expressions exactly and fills the diagnostics.
SymbolicReport compare_sides(ModularExpr lhs, ModularExpr rhs);

/// lhs = s_transform(su_expr), rhs = r^p * tau^-12 * su_modr_closed_expr.
SymbolicReport verify_symbolic(long r, const LatticeVector& c1, int prefactor_exponent = kStatedPrefactorExponent);

/// Tau sampling policy: both tau and -1/tau must have imaginary part at least this.
inline constexpr double kMinImaginaryPart = 0.2;

/// Defaults: tau = i and tau = exp(i pi / 3).
std::vector<std::complex<double>> default_taus();

/// Below this fraction of the term magnitude a value counts as cancelled to zero.
inline constexpr double kCancellationFloor = 1e-8;

struct NumericSample {
    std::complex<double> tau;
    std::complex<double> lhs;
    std::complex<double> rhs;
    /// |rhs|, or the magnitude of the summed terms when rhs has cancelled to
    /// below kCancellationFloor of it (tau at a zero of the function).
    double scale = 0.0;
    double relative_error = 0.0;
    /// Relative size of the truncation tails of both sides.
    double relative_tail = 0.0;
};

struct NumericReport {
    long r = 0;
    LatticeVector c1;
    int prefactor_exponent = kStatedPrefactorExponent;
    int hilbert_terms = 0;
    double tol = 0.0;
    bool converged = true;
    bool pass = false;
    std::vector<NumericSample> samples;
};

/// Evaluates the z_su series at -1/tau and r^p tau^-12 times the su_modr series
/// at tau. Series are cut after hilbert_terms coefficients of each shifted atom.
/// converged is false when a tail bound exceeds tol; pass requires convergence
/// and every relative error below tol.
NumericReport verify_numeric(long r, const LatticeVector& c1, const std::vector<std::complex<double>>& taus,
                             double tol, int hilbert_terms = 150, Precision precision = {},
                             int prefactor_exponent = kStatedPrefactorExponent);

} // namespace vw
