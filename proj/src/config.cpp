#include "vw/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "vw/sduality.hpp"

namespace vw {

namespace {

long env_long(const char* name, long fallback, long minimum)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return fallback;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < minimum)
        throw std::invalid_argument(std::string(name) + " must be an integer >= " + std::to_string(minimum));
    return value;
}

} // namespace

Config Config::from_environment()
{
    Config c;
    c.numeric_terms = static_cast<int>(env_long("VW_ORDER", c.numeric_terms, 1));
    c.budget = static_cast<std::uint64_t>(env_long("VW_BUDGET", static_cast<long>(c.budget), 1));
    c.precision.digits = static_cast<int>(env_long("VW_PRECISION", c.precision.digits, 1));
    c.taus = default_taus();
    return c;
}

Rational default_symbolic_order(long r) { return frac(10, r); }

std::complex<double> parse_tau(const std::string& raw)
{
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            text += ch;
    if (text == "i")
        return {0.0, 1.0};
    if (text == "rho")
        return std::polar(1.0, M_PI / 3.0);
    if (auto colon = text.find(':'); colon != std::string::npos)
        return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};

    if (text.size() > 1 && text.back() == 'i' && text.find_first_of("+-", 1) == std::string::npos) {
        std::size_t used = 0;
        double im = std::stod(text.substr(0, text.size() - 1), &used);
        if (used == text.size() - 1)
            return {0.0, im};
    }
    static const std::regex pattern(R"(^([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)?(?:([-+])([0-9.]*(?:[eE][-+]?[0-9]+)?)i)?$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern) || text.empty())
        throw std::invalid_argument("cannot parse tau '" + raw + "'");
    double re = 0.0, im = 0.0;
    if (m[1].matched)
        re = std::stod(m[1].str());
    if (m[2].matched) {
        im = m[3].str().empty() ? 1.0 : std::stod(m[3].str());
        if (m[2].str() == "-")
            im = -im;
    }
    return {re, im};
}

std::vector<std::complex<double>> parse_tau_list(const std::string& text)
{
    std::vector<std::complex<double>> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        out.push_back(parse_tau(item));
    if (out.empty())
        throw std::invalid_argument("empty tau list");
    return out;
}

} // namespace vw
