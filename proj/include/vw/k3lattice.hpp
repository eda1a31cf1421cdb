#pragma once

// The K3 lattice H^2(S,Z) = U^3 + E8(-1)^2 and finite sums over H^2(S, mu_r).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vw/cycnum.hpp"

namespace vw {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Gram = std::vector<std::vector<long>>;

struct LatticeBlock {
    std::string name;
    Gram gram;
    int rank() const { return static_cast<int>(gram.size()); }
};

struct LatticeVector {
    std::vector<long> coords;

    std::size_t size() const { return coords.size(); }
    long operator[](std::size_t i) const { return coords[i]; }
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(long k, const LatticeVector& v);

/// Even symmetric integer lattice, presented as an orthogonal sum of blocks.
class EvenLattice {
public:
    explicit EvenLattice(std::vector<LatticeBlock> blocks);

    int rank() const { return static_cast<int>(gram_.size()); }
    const Gram& gram() const { return gram_; }
    const std::vector<LatticeBlock>& blocks() const { return blocks_; }
    /// Index of the first coordinate of block b.
    int block_offset(std::size_t b) const { return offsets_.at(b); }

    LatticeVector zero() const { return LatticeVector{std::vector<long>(gram_.size(), 0)}; }
    /// Restriction of v to block b.
    std::vector<long> restrict_to(const LatticeVector& v, std::size_t b) const;

private:
    std::vector<LatticeBlock> blocks_;
    std::vector<int> offsets_;
    Gram gram_;
};

Gram hyperbolic_gram();
/// Negative of the E8 Cartan matrix (Bourbaki labelling, node 2 on node 4).
Gram e8_negative_gram();
/// U + U + U + E8(-1) + E8(-1), rank 22, signature (3,19).
const EvenLattice& k3_lattice();

/// Exact integer determinant (Bareiss elimination).
Integer determinant(const Gram& g);

long inner(const EvenLattice& lattice, const LatticeVector& v, const LatticeVector& w);
/// v.v mod 2r; depends only on v mod r because the lattice is even.
long square_mod_2r(const EvenLattice& lattice, const LatticeVector& v, long r);
/// 1 when every coordinate of a - b is divisible by r.
int delta_div(const LatticeVector& a, const LatticeVector& b, long r);

bool is_prime(long n);
/// The n in 1..r-1 with j n == -1 mod r.
long n_j(long r, long j);

/// Tally of (w.c1 mod r, w.w mod 2r) over w in (Z/r)^rank.
struct JointDistribution {
    long r = 0;
    /// counts[m * 2r + k]
    std::vector<Integer> counts;

    const Integer& at(long m, long k) const { return counts.at(static_cast<std::size_t>(m * 2 * r + k)); }
    Integer total() const;
};

/// Default maximum number of vectors enumerated for a single block.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// sum over w in L/rL of exp(2 pi i (w.c1)/r) exp(-pi i j w^2 / r), as an element
/// of Q(zeta_{2r}). Evaluated block by block.
CycNum gauss_sum(const EvenLattice& lattice, long r, long j, const LatticeVector& c1,
                 std::uint64_t budget = kDefaultEnumerationBudget);

JointDistribution joint_distribution(const EvenLattice& lattice, long r, const LatticeVector& c1,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

/// sum_{m,k} N(m,k) zeta_r^m zeta_{2r}^{-jk}.
CycNum gauss_sum_from_distribution(const JointDistribution& dist, long j);

/// Closed forms of the two flux sums on the K3 lattice:
/// r^22 delta_{c1,0} for j = 0 and r^11 exp(-pi i n_j c1^2 / r) otherwise.
CycNum flux_sum_closed_form(const EvenLattice& lattice, long r, long j, const LatticeVector& c1);

/// Parses "zero", a JSON array of integers, or a '+'-separated block shorthand
/// such as "U1:(1,0)+E8a:(0,0,0,0,0,0,0,1)" with optional "k*" scale prefixes.
LatticeVector parse_lattice_vector(const EvenLattice& lattice, const std::string& text);
std::string format_lattice_vector(const LatticeVector& v);

} // namespace vw
