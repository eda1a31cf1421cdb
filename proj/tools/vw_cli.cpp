// vw: expansions, flux sums, integrality checks and S-duality verification
// for Vafa-Witten partition functions of K3 surfaces.
//
// Exit codes: 0 success/pass, 1 verification failed, 2 usage error,
// 3 enumeration budget exceeded or numeric tail not converged.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vw/chern.hpp"
#include "vw/config.hpp"
#include "vw/json_io.hpp"
#include "vw/partition.hpp"
#include "vw/sduality.hpp"

using namespace vw;
using Json = nlohmann::json;
namespace vj = vw::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const char* kVectorHelp =
    "lattice vector: 'zero', a JSON array of 22 integers, or block shorthand such as "
    "\"U1:(1,0)+2*E8a:(0,0,0,0,0,0,0,1)\" with blocks U1 U2 U3 (rank 2) and E8a E8b (rank 8)";

void emit(const Json& doc, const std::string& text, OutputFormat format)
{
    if (format == OutputFormat::Json)
        std::cout << vj::dump(doc);
    else
        std::cout << text;
}

std::string series_text(const PuiseuxSeries& s)
{
    std::ostringstream os;
    for (const auto& [p, c] : s.terms())
        os << "q^" << to_string(frac(p, s.exp_denom())) << "\t" << c.to_string() << "\n";
    os << "+ O(q^" << to_string(s.trunc_order()) << ")\n";
    return os.str();
}

std::string complex_text(std::complex<double> z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

LatticeVector vector_arg(const std::string& text) { return parse_lattice_vector(k3_lattice(), text); }

Rational order_arg(const std::string& text, long r)
{
    if (text.empty())
        return default_symbolic_order(r);
    Rational q = parse_rational(text);
    if (q <= 0)
        throw UsageError("--order must be positive");
    return q;
}

void require_prime(long r)
{
    if (!is_prime(r))
        throw UsageError("--r must be prime, got " + std::to_string(r));
}

Json surface_json() { return {{"chiO", 2}, {"K2", 0}, {"euler", 24}}; }

struct Globals {
    Config config;
    std::string format = "json";
    std::optional<std::uint64_t> budget;
    std::optional<int> precision;

    void apply()
    {
        config.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
        if (budget)
            config.budget = *budget;
        if (precision)
            config.precision.digits = *precision;
    }
};

// ---- expand ----

struct ExpandArgs {
    std::string group;
    long r = 0;
    std::string c1, w, order;
    std::optional<long> c1sq;
    bool divisible = false;
    bool atoms = false;
};

int cmd_expand(const ExpandArgs& a, const Globals& g)
{
    require_prime(a.r);
    const Rational order = order_arg(a.order, a.r);
    Json doc = {{"schema", vj::kSchema}, {"group", a.group}};
    std::ostringstream text;
    PuiseuxSeries series(1, order);
    std::optional<ModularExpr> atoms;
    auto finish = [&](int code) {
        if (atoms) {
            doc["atoms"] = vj::to_json(*atoms);
            for (const auto& [atom, c] : atoms->terms())
                text << "# (" << c.to_string() << ") " << atom.to_string() << "\n";
        }
        doc["series"] = vj::to_json(series);
        emit(doc, text.str() + series_text(series), g.config.format);
        return code;
    };

    if (a.group == "su") {
        if (a.c1sq) {
            if (!a.c1.empty())
                throw UsageError("give either --c1 or --c1sq, not both");
            series = z_su_from_invariants(a.r, a.divisible, *a.c1sq, order);
            doc["request"] = {{"r", a.r}, {"c1sq", *a.c1sq}, {"divisible", a.divisible},
                              {"order", order.get_str()}, {"surface", surface_json()}};
            if (a.atoms)
                atoms = su_expr(a.r, a.divisible, mod_floor(*a.c1sq, 2 * a.r));
        } else {
            if (a.divisible)
                throw UsageError("--divisible only applies together with --c1sq");
            PartitionRequest req{a.r, vector_arg(a.c1.empty() ? "zero" : a.c1), order, SurfaceInvariants::k3()};
            series = z_su(req);
            doc["request"] = vj::to_json(req);
            if (a.atoms)
                atoms = su_expr(a.r, req.c1);
        }
        text << "# Z^SU(" << a.r << ")\n";
    } else if (a.group == "su-mod") {
        if (a.c1sq)
            throw UsageError("su-mod needs a full --c1 vector; --c1sq is only accepted for --group su");
        PartitionRequest req{a.r, vector_arg(a.c1.empty() ? "zero" : a.c1), order, SurfaceInvariants::k3()};
        SuModResult res = z_su_modr(req, g.config.budget);
        series = res.series;
        doc["request"] = vj::to_json(req);
        doc["routesAgree"] = res.routes_agree;
        if (a.atoms)
            atoms = res.closed;
        text << "# Z^SU(" << a.r << ")/Z_" << a.r << "  routes agree: " << (res.routes_agree ? "yes" : "NO") << "\n";
        return finish(res.routes_agree ? kOk : kFail);
    } else if (a.group == "zw") {
        if (a.c1sq || !a.c1.empty())
            throw UsageError("--group zw takes --w");
        const LatticeVector w = vector_arg(a.w.empty() ? "zero" : a.w);
        series = z_w(a.r, w, order);
        doc["request"] = {{"r", a.r}, {"w", vj::to_json(w)}, {"order", order.get_str()}, {"surface", surface_json()}};
        if (a.atoms)
            atoms = zw_expr(a.r, w);
        text << "# Z_w, r = " << a.r << "\n";
    } else {
        throw UsageError("--group must be su, su-mod or zw");
    }
    return finish(kOk);
}

// ---- fluxsum / gauss ----

int cmd_fluxsum(long r, long j, const std::string& c1_text, const Globals& g)
{
    require_prime(r);
    const LatticeVector c1 = vector_arg(c1_text);
    const CycNum value = gauss_sum(k3_lattice(), r, j, c1, g.config.budget);
    const CycNum closed = flux_sum_closed_form(k3_lattice(), r, j, c1);
    const bool agrees = value == closed;
    const std::complex<double> z = embed(value, g.config.precision);
    Json doc = {{"schema", vj::kSchema},
                {"r", r},
                {"j", mod_floor(j, r)},
                {"c1", vj::to_json(c1)},
                {"value", vj::to_json(value)},
                {"complex", vj::to_json(z)},
                {"closedForm", vj::to_json(closed)},
                {"matchesClosedForm", agrees}};
    std::ostringstream text;
    text << value.to_string() << "\n" << complex_text(z) << "\n"
         << "closed form " << (agrees ? "agrees" : "DISAGREES") << "\n";
    emit(doc, text.str(), g.config.format);
    return agrees ? kOk : kFail;
}

int cmd_gauss(long r, const std::string& c1_text, const Globals& g)
{
    require_prime(r);
    const LatticeVector c1 = vector_arg(c1_text);
    const JointDistribution dist = joint_distribution(k3_lattice(), r, c1, g.config.budget);
    Json counts = Json::array();
    std::ostringstream text;
    text << "# N(m, k): w.c1 = m mod r, w^2 = k mod 2r\n";
    for (long m = 0; m < r; ++m)
        for (long k = 0; k < 2 * r; ++k)
            if (dist.at(m, k) != 0) {
                counts.push_back({{"m", m}, {"k", k}, {"count", dist.at(m, k).get_str()}});
                text << m << "\t" << k << "\t" << dist.at(m, k).get_str() << "\n";
            }
    Json sums = Json::array();
    for (long j = 0; j < r; ++j) {
        const CycNum v = gauss_sum_from_distribution(dist, j);
        sums.push_back({{"j", j}, {"value", vj::to_json(v)}, {"complex", vj::to_json(embed(v, g.config.precision))}});
        text << "j=" << j << "\t" << v.to_string() << "\n";
    }
    Json doc = {{"schema", vj::kSchema},    {"r", r},           {"c1", vj::to_json(c1)},
                {"total", dist.total().get_str()}, {"counts", counts}, {"gaussSums", sums}};
    emit(doc, text.str(), g.config.format);
    return kOk;
}

// ---- verify ----

struct VerifyArgs {
    long r = 0;
    std::string c1 = "zero";
    std::string mode = "symbolic";
    std::string taus;
    double tol = 1e-6;
    std::optional<int> terms;
    int prefactor_exp = kStatedPrefactorExponent;
};

int cmd_verify(const VerifyArgs& a, const Globals& g)
{
    require_prime(a.r);
    const LatticeVector c1 = vector_arg(a.c1);
    if (a.mode == "symbolic") {
        SymbolicReport rep = verify_symbolic(a.r, c1, a.prefactor_exp);
        std::ostringstream text;
        text << (rep.pass ? "PASS" : "FAIL") << " symbolic r=" << a.r << " c1=" << format_lattice_vector(c1)
             << " prefactor r^" << a.prefactor_exp << "\n";
        for (const auto& d : rep.diffs)
            text << "  " << d.atom.to_string() << ": lhs " << d.lhs.to_string() << ", rhs " << d.rhs.to_string() << "\n";
        if (rep.uniform_ratio)
            text << "  lhs/rhs = " << rep.uniform_ratio->to_string() << " on every atom\n";
        emit(vj::to_json(rep), text.str(), g.config.format);
        return rep.pass ? kOk : kFail;
    }
    if (a.mode != "numeric")
        throw UsageError("--mode must be symbolic or numeric");
    if (!(a.tol > 0))
        throw UsageError("--tol must be positive");
    const auto taus = a.taus.empty() ? default_taus() : parse_tau_list(a.taus);
    const int terms = a.terms.value_or(g.config.numeric_terms);
    NumericReport rep = verify_numeric(a.r, c1, taus, a.tol, terms, g.config.precision, a.prefactor_exp);
    std::ostringstream text;
    text << (rep.pass ? "PASS" : "FAIL") << " numeric r=" << a.r << " c1=" << format_lattice_vector(c1)
         << " prefactor r^" << a.prefactor_exp << " terms=" << terms
         << (rep.converged ? "" : " (tail bound above tolerance)") << "\n";
    for (const auto& s : rep.samples)
        text << "  tau=" << complex_text(s.tau) << "  rel.err " << s.relative_error << "  rel.tail " << s.relative_tail
             << "\n";
    emit(vj::to_json(rep), text.str(), g.config.format);
    if (!rep.converged)
        return kBudget;
    return rep.pass ? kOk : kFail;
}

// ---- vd / integrality / hilb ----

int cmd_vd(long r, const std::string& c1sq, const std::string& n, const Globals& g)
{
    if (r < 1)
        throw UsageError("--r must be positive");
    const Integer value = vd(r, Integer(c1sq), Integer(n), SurfaceInvariants::k3());
    Json doc = {{"schema", vj::kSchema}, {"r", r}, {"c1sq", c1sq}, {"n", n}, {"vd", value.get_str()}};
    emit(doc, value.get_str() + "\n", g.config.format);
    return kOk;
}

struct IntegralityArgs {
    long r = 0;
    long s = 0;
    std::string D = "zero";
    std::string n = "0";
    std::string xi = "zero";
    std::string deg2;
    std::string ch2;
    bool round_trip = false;
};

std::vector<Rational> rational_vector_arg(const std::string& text)
{
    if (!text.empty() && text.front() == '[') {
        const Json j = Json::parse(text);
        std::vector<Rational> out;
        for (const auto& x : j)
            out.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
        if (static_cast<int>(out.size()) != k3_lattice().rank())
            throw UsageError("--deg2 needs " + std::to_string(k3_lattice().rank()) + " entries");
        return out;
    }
    return to_rational(vector_arg(text));
}

int cmd_integrality(const IntegralityArgs& a, const Globals& g)
{
    require_prime(a.r);
    const EvenLattice& L = k3_lattice();
    const LatticeVector xi = vector_arg(a.xi);
    CohClass c;
    if (a.round_trip) {
        if (!a.deg2.empty() || !a.ch2.empty())
            throw UsageError("--round-trip builds the class from --s, --D and --n");
        // integral (s, D, D^2/2 - n), untwisted by -xi/r
        c = twist(L, class_from_integral(L, a.s, vector_arg(a.D), Integer(a.n)), -1 * xi, a.r);
    } else {
        c.s = a.s;
        c.deg2 = a.deg2.empty() ? std::vector<Rational>(static_cast<std::size_t>(L.rank()), Rational(0))
                                : rational_vector_arg(a.deg2);
        c.ch2 = a.ch2.empty() ? Rational(0) : parse_rational(a.ch2);
    }
    const IntegralityReport rep = integrality_check(L, c, xi, a.r);
    Json doc = vj::to_json(rep);
    doc["schema"] = vj::kSchema;
    std::ostringstream text;
    text << "integral: " << (rep.integral() ? "true" : "false") << "\n"
         << "s = " << rep.s << ", n = " << to_string(rep.n) << "\n";
    emit(doc, text.str(), g.config.format);
    return rep.integral() ? kOk : kFail;
}

int cmd_hilb(int order, bool use_delta, const Globals& g)
{
    if (order < (use_delta ? 1 : 0))
        throw UsageError("--order too small");
    const PuiseuxSeries s = use_delta ? delta(order) : hilb_series(order);
    Json doc = {{"schema", vj::kSchema},
                {"function", use_delta ? "delta" : "hilb"},
                {"order", order},
                {"series", vj::to_json(s)}};
    emit(doc, series_text(s), g.config.format);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Vafa-Witten partition functions of K3 surfaces at prime rank"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer("Exit codes: 0 ok/pass, 1 verification failed, 2 usage, 3 budget exceeded or tail not converged.\n"
               "Environment: VW_ORDER (numeric Hilbert terms, default 150), VW_BUDGET (vectors per block,\n"
               "default 10^7), VW_PRECISION (decimal digits; above 15 uses MPFR).");

    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", g.budget, "maximum vectors enumerated per lattice block");
    app.add_option("--precision", g.precision, "working precision in decimal digits");

    ExpandArgs ex;
    auto* expand = app.add_subcommand("expand", "q-expansion of a partition function");
    expand->add_option("--group", ex.group, "su, su-mod or zw")->required()->check(CLI::IsMember({"su", "su-mod", "zw"}));
    expand->add_option("--r", ex.r, "prime rank")->required();
    expand->add_option("--c1", ex.c1, kVectorHelp);
    expand->add_option("--w", ex.w, std::string("Brauer class lift; ") + kVectorHelp);
    expand->add_option("--order", ex.order, "keep exponents below this rational (default 10/r)");
    expand->add_option("--c1sq", ex.c1sq, "c1^2 instead of --c1 (group su only)");
    expand->add_flag("--divisible", ex.divisible, "with --c1sq: c1 is divisible by r");
    expand->add_flag("--atoms", ex.atoms, "also print the Delta-atom expression");

    long fr = 0, fj = 0;
    std::string fc1 = "zero";
    auto* flux = app.add_subcommand("fluxsum", "exact flux sum over H^2(S, mu_r)");
    flux->add_option("--r", fr, "prime rank")->required();
    flux->add_option("--j", fj, "residue mod r")->required();
    flux->add_option("--c1", fc1, kVectorHelp);

    long gr = 0;
    std::string gc1 = "zero";
    auto* gauss = app.add_subcommand("gauss", "joint distribution of (w.c1 mod r, w^2 mod 2r) and all Gauss sums");
    gauss->add_option("--r", gr, "prime rank")->required();
    gauss->add_option("--c1", gc1, kVectorHelp);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check Z^SU(-1/tau) = r^p tau^-12 Z^SU/Z_r(tau)");
    verify->add_option("--r", va.r, "prime rank")->required();
    verify->add_option("--c1", va.c1, kVectorHelp);
    verify->add_option("--mode", va.mode, "symbolic or numeric");
    verify->add_option("--taus", va.taus, "comma separated: i, rho, a+bi, re:im (default i,rho)");
    verify->add_option("--tol", va.tol, "relative tolerance for numeric mode");
    verify->add_option("--terms", va.terms, "Hilbert terms per shifted atom (default VW_ORDER or 150)");
    verify->add_option("--prefactor-exp", va.prefactor_exp, "exponent p of r^p (default -11)");

    long vr = 0;
    std::string vc1sq, vn;
    auto* vdcmd = app.add_subcommand("vd", "virtual dimension 2rn - (r-1)c1^2 - (r^2-1)chi(O_S) on K3");
    vdcmd->add_option("--r", vr, "rank")->required();
    vdcmd->add_option("--c1sq", vc1sq, "c1^2")->required();
    vdcmd->add_option("--n", vn, "second Chern number")->required();

    IntegralityArgs ia;
    auto* integ = app.add_subcommand("integrality", "twist (s, deg2, ch2) by exp(xi/r) and test integrality");
    integ->add_option("--r", ia.r, "prime r")->required();
    integ->add_option("--s", ia.s, "rank s")->required();
    integ->add_option("--xi", ia.xi, kVectorHelp);
    integ->add_option("--deg2", ia.deg2, "H^2 part: lattice vector or JSON array of \"p/q\"");
    integ->add_option("--ch2", ia.ch2, "H^4 part, rational");
    integ->add_flag("--round-trip", ia.round_trip, "start from integral (s, D, D^2/2 - n) untwisted by -xi");
    integ->add_option("--D", ia.D, "with --round-trip: integral H^2 class");
    integ->add_option("--n", ia.n, "with --round-trip: integer n");

    int horder = 0;
    bool hdelta = false;
    auto* hilb = app.add_subcommand("hilb", "1/Delta = sum e(Hilb^n(K3)) q^(n-1), or Delta with --delta");
    hilb->add_option("--order", horder, "include the q^order term")->required();
    hilb->add_flag("--delta", hdelta, "expand Delta instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        g.config = Config::from_environment();
        g.apply();
        if (*expand)
            return cmd_expand(ex, g);
        if (*flux)
            return cmd_fluxsum(fr, fj, fc1, g);
        if (*gauss)
            return cmd_gauss(gr, gc1, g);
        if (*verify)
            return cmd_verify(va, g);
        if (*vdcmd)
            return cmd_vd(vr, vc1sq, vn, g);
        if (*integ)
            return cmd_integrality(ia, g);
        if (*hilb)
            return cmd_hilb(horder, hdelta, g);
    } catch (const BudgetExceeded& e) {
        std::cerr << "vw: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "vw: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "vw: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "vw: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
