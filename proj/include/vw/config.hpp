#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "vw/k3lattice.hpp"
#include "vw/numeric.hpp"

namespace vw {

enum class OutputFormat { Json, Text };

/// Process-wide defaults for the CLI. Environment overrides: VW_ORDER (numeric
/// truncation, in Hilbert terms), VW_BUDGET (vectors per block), VW_PRECISION
/// (decimal digits).
struct Config {
    int numeric_terms = 150;
    std::uint64_t budget = kDefaultEnumerationBudget;
    Precision precision{};
    OutputFormat format = OutputFormat::Json;
    std::vector<std::complex<double>> taus;

    /// Defaults with environment overrides applied; throws on malformed values.
    static Config from_environment();
};

/// Symbolic golden-file order 10/r.
Rational default_symbolic_order(long r);

/// Parses "i", "rho" (= exp(i pi/3)), "a+bi", "a-bi", "bi", or "re:im".
std::complex<double> parse_tau(const std::string& text);
std::vector<std::complex<double>> parse_tau_list(const std::string& text);

} // namespace vw
