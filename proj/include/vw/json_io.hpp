#pragma once

// JSON encodings shared by the CLI and the golden files. All documents that
// leave the process carry "schema": "vw/1".

#include <complex>

#include <json.hpp>

#include "vw/chern.hpp"
#include "vw/cycnum.hpp"
#include "vw/k3lattice.hpp"
#include "vw/modular_expr.hpp"
#include "vw/partition.hpp"
#include "vw/qseries.hpp"
#include "vw/sduality.hpp"

namespace vw::json {

using nlohmann::json;

inline constexpr const char* kSchema = "vw/1";

/// {"order": N, "coeffs": ["p/q", ...]}
json to_json(const CycNum& c);
CycNum cycnum_from_json(const json& j);

/// {"expDenom": D, "truncOrder": "p/q", "terms": [{"exp": "p/q", "coeff": ...}, ...]}
json to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const json& j);

json to_json(const DeltaAtom& atom);
DeltaAtom atom_from_json(const json& j);
/// {"weight": w, "terms": [{"atom": ..., "coeff": ...}, ...]}
json to_json(const ModularExpr& e);
ModularExpr expr_from_json(const json& j);

json to_json(const LatticeVector& v);
json to_json(std::complex<double> z);
json to_json(const PartitionRequest& req);

/// {"s": int, "D": [...], "n": "p/q", "integral": bool}
json to_json(const IntegralityReport& report);

/// {"mode": "symbolic" | "numeric", "r": ..., "c1": ..., "pass": bool, "details": ...}
json to_json(const SymbolicReport& report);
json to_json(const NumericReport& report);

/// Two-space indented dump terminated by a newline; the golden-file format.
std::string dump(const json& j);

} // namespace vw::json
