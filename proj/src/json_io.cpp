#include "vw/json_io.hpp"

#include <stdexcept>

namespace vw::json {

json to_json(const CycNum& c)
{
    json coeffs = json::array();
    for (const auto& q : c.coeffs())
        coeffs.push_back(q.get_str());
    return {{"order", c.order()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const json& j)
{
    const int order = j.at("order").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(parse_rational(c.get<std::string>()));
    if (coeffs.empty())
        coeffs.emplace_back(0);
    return CycNum(order, std::move(coeffs));
}

json to_json(const PuiseuxSeries& s)
{
    json terms = json::array();
    for (const auto& [p, c] : s.terms())
        terms.push_back({{"exp", frac(p, s.exp_denom()).get_str()}, {"coeff", to_json(c)}});
    return {{"expDenom", s.exp_denom()}, {"truncOrder", s.trunc_order().get_str()}, {"terms", terms}};
}

PuiseuxSeries series_from_json(const json& j)
{
    const int denom = j.at("expDenom").get<int>();
    PuiseuxSeries s(denom, parse_rational(j.at("truncOrder").get<std::string>()));
    for (const auto& t : j.at("terms"))
        s.add_term(numerator_over(parse_rational(t.at("exp").get<std::string>()), denom),
                   cycnum_from_json(t.at("coeff")));
    return s;
}

json to_json(const DeltaAtom& atom)
{
    if (atom.kind == DeltaAtom::Kind::ScaledUp)
        return {{"kind", "ScaledUp"}, {"m", atom.m}};
    return {{"kind", "Shifted"}, {"j", atom.j}, {"m", atom.m}};
}

DeltaAtom atom_from_json(const json& j)
{
    const std::string kind = j.at("kind").get<std::string>();
    const int m = j.at("m").get<int>();
    if (kind == "ScaledUp")
        return DeltaAtom::scaled_up(m);
    if (kind == "Shifted")
        return DeltaAtom::shifted(j.at("j").get<long>(), m);
    throw std::invalid_argument("unknown atom kind '" + kind + "'");
}

json to_json(const ModularExpr& e)
{
    json terms = json::array();
    for (const auto& [atom, c] : e.terms())
        terms.push_back({{"atom", to_json(atom)}, {"coeff", to_json(c)}});
    return {{"weight", e.weight()}, {"terms", terms}};
}

ModularExpr expr_from_json(const json& j)
{
    ModularExpr e(j.at("weight").get<int>());
    for (const auto& t : j.at("terms"))
        e.add(atom_from_json(t.at("atom")), cycnum_from_json(t.at("coeff")));
    return e;
}

json to_json(const LatticeVector& v) { return v.coords; }

json to_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const PartitionRequest& req)
{
    return {{"r", req.r},
            {"c1", to_json(req.c1)},
            {"order", req.order.get_str()},
            {"surface", {{"chiO", req.surface.chiO}, {"K2", req.surface.K2}, {"euler", req.surface.euler}}}};
}

json to_json(const IntegralityReport& report)
{
    json d = json::array();
    for (const auto& x : report.D) {
        if (x.get_den() == 1 && x.get_num().fits_slong_p())
            d.push_back(x.get_num().get_si());
        else
            d.push_back(x.get_str());
    }
    return {{"s", report.s},
            {"D", d},
            {"n", report.n.get_str()},
            {"integral", report.integral()},
            {"checks", {{"s_ok", report.s_ok}, {"D_ok", report.D_ok}, {"n_ok", report.n_ok}}}};
}

json to_json(const SymbolicReport& report)
{
    json diffs = json::array();
    for (const auto& d : report.diffs)
        diffs.push_back({{"atom", to_json(d.atom)}, {"lhs", to_json(d.lhs)}, {"rhs", to_json(d.rhs)}});
    json details = {{"prefactorExponent", report.prefactor_exponent},
                    {"lhs", to_json(report.lhs)},
                    {"rhs", to_json(report.rhs)},
                    {"diffs", diffs},
                    {"uniformRatio", report.uniform_ratio ? to_json(*report.uniform_ratio) : json(nullptr)}};
    return {{"schema", kSchema},
            {"mode", "symbolic"},
            {"r", report.r},
            {"c1", to_json(report.c1)},
            {"pass", report.pass},
            {"details", details}};
}

json to_json(const NumericReport& report)
{
    json samples = json::array();
    for (const auto& s : report.samples)
        samples.push_back({{"tau", to_json(s.tau)},
                           {"lhs", to_json(s.lhs)},
                           {"rhs", to_json(s.rhs)},
                           {"scale", s.scale},
                           {"relativeError", s.relative_error},
                           {"relativeTail", s.relative_tail}});
    json details = {{"prefactorExponent", report.prefactor_exponent},
                    {"hilbertTerms", report.hilbert_terms},
                    {"tol", report.tol},
                    {"converged", report.converged},
                    {"samples", samples}};
    return {{"schema", kSchema},
            {"mode", "numeric"},
            {"r", report.r},
            {"c1", to_json(report.c1)},
            {"pass", report.pass},
            {"details", details}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace vw::json
