#include "vw/modular_expr.hpp"

#include <stdexcept>

namespace vw {

DeltaAtom DeltaAtom::scaled_up(int m)
{
    if (m < 1)
        throw std::invalid_argument("DeltaAtom: m must be positive");
    return {Kind::ScaledUp, m, 0};
}

DeltaAtom DeltaAtom::shifted(long j, int m)
{
    if (m < 1)
        throw std::invalid_argument("DeltaAtom: m must be positive");
    if (m == 1)
        return scaled_up(1);
    return {Kind::Shifted, m, mod_floor(j, m)};
}

std::string DeltaAtom::to_string() const
{
    if (kind == Kind::ScaledUp)
        return m == 1 ? "Delta(tau)^-1" : "Delta(" + std::to_string(m) + "tau)^-1";
    return "Delta((tau+" + std::to_string(j) + ")/" + std::to_string(m) + ")^-1";
}

void ModularExpr::add(const DeltaAtom& atom, const CycNum& c)
{
    auto it = terms_.find(atom);
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_.emplace(atom, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

CycNum ModularExpr::coefficient(const DeltaAtom& atom) const
{
    auto it = terms_.find(atom);
    return it == terms_.end() ? CycNum::zero() : it->second;
}

ModularExpr& ModularExpr::operator*=(const CycNum& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [atom, coeff] : terms_)
        coeff *= c;
    return *this;
}

bool operator==(const ModularExpr& a, const ModularExpr& b)
{
    if (a.weight_ != b.weight_ || a.terms_.size() != b.terms_.size())
        return false;
    auto it = b.terms_.begin();
    for (const auto& [atom, c] : a.terms_) {
        if (!(it->first == atom) || !(it->second == c))
            return false;
        ++it;
    }
    return true;
}

namespace {

// smallest integer >= x
long ceil_rational(const Rational& x)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out.get_si();
}

} // namespace

PuiseuxSeries expand_atom(const DeltaAtom& atom, const Rational& trunc_order)
{
    if (atom.kind == DeltaAtom::Kind::ScaledUp) {
        // hilb_series(k) is known below k + 1; scaled by m it is known below m (k + 1)
        long k = std::max(ceil_rational(trunc_order / atom.m) - 1, -1L);
        return scale_exponent(hilb_series(static_cast<int>(k)), atom.m).truncated(trunc_order);
    }
    long k = std::max(ceil_rational(trunc_order * atom.m) - 1, -1L);
    return substitute(hilb_series(static_cast<int>(k)), atom.m, atom.j).truncated(trunc_order);
}

PuiseuxSeries ModularExpr::expand(const Rational& trunc_order) const
{
    PuiseuxSeries sum(1, trunc_order);
    for (const auto& [atom, c] : terms_)
        sum += c * expand_atom(atom, trunc_order);
    return sum;
}

} // namespace vw
