#include "vw/sduality.hpp"

#include <algorithm>
#include <cmath>

#include "vw/partition.hpp"

namespace vw {

namespace {

Rational rank_power(long r, int exponent)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(std::abs(exponent)));
    return exponent >= 0 ? Rational(p) : Rational(1, p);
}

} // namespace

ModularExpr s_transform(const ModularExpr& e, long r)
{
    if (!is_prime(r))
        throw std::invalid_argument("s_transform: r must be prime");
    const int m = static_cast<int>(r);
    ModularExpr out(e.weight() - 12);
    for (const auto& [atom, c] : e.terms()) {
        if (atom.m != m)
            throw UnsupportedAtom("s_transform: atom " + atom.to_string() + " is not at level " + std::to_string(r));
        if (atom.kind == DeltaAtom::Kind::ScaledUp)
            out.add(DeltaAtom::shifted(0, m), c * rank_power(r, 12));
        else if (atom.j == 0)
            out.add(DeltaAtom::scaled_up(m), c * rank_power(r, -12));
        else
            out.add(DeltaAtom::shifted(n_j(r, atom.j), m), c);
    }
    return out;
}

std::vector<AtomDiff> diff_exprs(const ModularExpr& a, const ModularExpr& b)
{
    std::map<DeltaAtom, std::pair<CycNum, CycNum>> merged;
    for (const auto& [atom, c] : a.terms())
        merged[atom].first = c;
    for (const auto& [atom, c] : b.terms())
        merged[atom].second = c;
    std::vector<AtomDiff> out;
    for (const auto& [atom, pair] : merged)
        if (!(pair.first == pair.second))
            out.push_back({atom, pair.first, pair.second});
    return out;
}

SymbolicReport compare_sides(ModularExpr lhs, ModularExpr rhs)
{
    SymbolicReport report;
    report.diffs = diff_exprs(lhs, rhs);
    report.pass = report.diffs.empty() && lhs.weight() == rhs.weight();

    if (!report.diffs.empty() && lhs.terms().size() == rhs.terms().size() && !lhs.terms().empty()) {
        std::optional<CycNum> ratio;
        bool uniform = true;
        auto it = rhs.terms().begin();
        for (const auto& [atom, c] : lhs.terms()) {
            if (!(it->first == atom)) {
                uniform = false;
                break;
            }
            CycNum q = c * it->second.inverse();
            if (ratio && !(*ratio == q)) {
                uniform = false;
                break;
            }
            ratio = q;
            ++it;
        }
        if (uniform)
            report.uniform_ratio = ratio;
    }
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    return report;
}

SymbolicReport verify_symbolic(long r, const LatticeVector& c1, int prefactor_exponent)
{
    PartitionRequest req{r, c1, Rational(1), SurfaceInvariants::k3()};
    validate(req);
    ModularExpr lhs = s_transform(su_expr(r, c1), r);
    ModularExpr rhs = CycNum(rank_power(r, prefactor_exponent)) * su_modr_closed_expr(r, c1);
    rhs.set_weight(-12);
    SymbolicReport report = compare_sides(std::move(lhs), std::move(rhs));
    report.r = r;
    report.c1 = c1;
    report.prefactor_exponent = prefactor_exponent;
    return report;
}

std::vector<std::complex<double>> default_taus()
{
    return {{0.0, 1.0}, std::polar(1.0, M_PI / 3.0)};
}

NumericReport verify_numeric(long r, const LatticeVector& c1, const std::vector<std::complex<double>>& taus,
                             double tol, int hilbert_terms, Precision precision, int prefactor_exponent)
{
    if (hilbert_terms < 2)
        throw std::invalid_argument("verify_numeric: need at least two terms");
    if (!(tol > 0))
        throw std::invalid_argument("verify_numeric: tolerance must be positive");
    for (const auto& tau : taus) {
        const std::complex<double> dual = -1.0 / tau;
        if (tau.imag() < kMinImaginaryPart || dual.imag() < kMinImaginaryPart)
            throw std::invalid_argument("tau and -1/tau must both have imaginary part >= " +
                                        std::to_string(kMinImaginaryPart));
    }

    const Rational trunc = frac(hilbert_terms - 1, r);
    PartitionRequest req{r, c1, trunc, SurfaceInvariants::k3()};
    validate(req);

    const ModularExpr su = su_expr(r, c1);
    ModularExpr modr = su_modr_closed_expr(r, c1);
    const PuiseuxSeries su_series = z_su(req);
    const PuiseuxSeries modr_series = modr.expand(trunc);
    const double prefactor = rank_power(r, prefactor_exponent).get_d();
    modr.set_weight(-12);

    NumericReport report;
    report.r = r;
    report.c1 = c1;
    report.prefactor_exponent = prefactor_exponent;
    report.hilbert_terms = hilbert_terms;
    report.tol = tol;
    report.samples.resize(taus.size());

    // Samples are independent; each writes only its own slot.
    std::vector<std::string> errors(taus.size());
#pragma omp parallel for schedule(static) if (precision.is_double())
    for (std::size_t i = 0; i < taus.size(); ++i) {
        try {
            const std::complex<double> tau = taus[i];
            const std::complex<double> dual = -1.0 / tau;
            NumericSample& s = report.samples[i];
            s.tau = tau;
            s.lhs = eval_series(su_series, dual, precision);
            s.rhs = prefactor * std::pow(tau, -12) * eval_series(modr_series, tau, precision);
            const double magnitude =
                std::max(series_magnitude(su_series, dual),
                         prefactor * std::pow(std::abs(tau), -12) * series_magnitude(modr_series, tau));
            const double scale = std::abs(s.rhs) >= kCancellationFloor * magnitude ? std::abs(s.rhs) : magnitude;
            s.scale = scale;
            s.relative_error = std::abs(s.lhs - s.rhs) / scale;
            const double tail = expansion_tail_bound(su, dual, trunc) +
                                prefactor * expansion_tail_bound(modr, tau, trunc);
            s.relative_tail = tail / scale;
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty())
            throw std::runtime_error(e);

    report.pass = true;
    for (const auto& s : report.samples) {
        if (!(s.relative_tail < tol))
            report.converged = false;
        if (!(s.relative_error < tol))
            report.pass = false;
    }
    report.pass = report.pass && report.converged;
    return report;
}

} // namespace vw
