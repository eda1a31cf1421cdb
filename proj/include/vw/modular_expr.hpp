#pragma once

// Linear combinations of inverse Delta atoms with a tracked power of tau.

#include <compare>
#include <map>
#include <string>

#include "vw/cycnum.hpp"
#include "vw/qseries.hpp"

namespace vw {

/// ScaledUp(m) stands for 1/Delta(m tau); Shifted(j, m) for 1/Delta((tau + j)/m).
struct DeltaAtom {
    enum class Kind { ScaledUp, Shifted };

    Kind kind = Kind::ScaledUp;
    int m = 1;
    long j = 0;

    static DeltaAtom scaled_up(int m);
    /// j is reduced mod m; Shifted(0, 1) is the same atom as ScaledUp(1).
    static DeltaAtom shifted(long j, int m);

    std::string to_string() const;
    auto operator<=>(const DeltaAtom&) const = default;
};

/// tau^weight * sum_atom c_atom * atom(tau).
class ModularExpr {
public:
    ModularExpr() = default;
    explicit ModularExpr(int weight) : weight_(weight) {}

    int weight() const { return weight_; }
    void set_weight(int weight) { weight_ = weight; }
    const std::map<DeltaAtom, CycNum>& terms() const { return terms_; }

    /// Adds c * atom; zero results are removed.
    void add(const DeltaAtom& atom, const CycNum& c);
    CycNum coefficient(const DeltaAtom& atom) const;

    ModularExpr& operator*=(const CycNum& c);
    friend ModularExpr operator*(const CycNum& c, ModularExpr e) { return e *= c; }

    friend bool operator==(const ModularExpr& a, const ModularExpr& b);

    /// Puiseux expansion of the atom sum, known below trunc_order. The tau^weight
    /// tag is not part of the q-expansion.
    PuiseuxSeries expand(const Rational& trunc_order) const;

private:
    int weight_ = 0;
    std::map<DeltaAtom, CycNum> terms_;
};

/// q-expansion of one atom, known below trunc_order.
PuiseuxSeries expand_atom(const DeltaAtom& atom, const Rational& trunc_order);

} // namespace vw
