#include "vw/k3lattice.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "vw/kernels.hpp"

namespace vw {

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("lattice vector dimension mismatch");
    LatticeVector out = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        out.coords[i] += b.coords[i];
    return out;
}

LatticeVector operator*(long k, const LatticeVector& v)
{
    LatticeVector out = v;
    for (auto& x : out.coords)
        x *= k;
    return out;
}

EvenLattice::EvenLattice(std::vector<LatticeBlock> blocks) : blocks_(std::move(blocks))
{
    int total = 0;
    for (const auto& b : blocks_) {
        offsets_.push_back(total);
        total += b.rank();
    }
    gram_.assign(static_cast<std::size_t>(total), std::vector<long>(static_cast<std::size_t>(total), 0));
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const Gram& g = blocks_[b].gram;
        const std::size_t off = static_cast<std::size_t>(offsets_[b]);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i].size() != g.size())
                throw std::invalid_argument("block gram must be square");
            if (g[i][i] % 2 != 0)
                throw std::invalid_argument("block gram must have even diagonal");
            for (std::size_t j = 0; j < g.size(); ++j) {
                if (g[i][j] != g[j][i])
                    throw std::invalid_argument("block gram must be symmetric");
                gram_[off + i][off + j] = g[i][j];
            }
        }
    }
}

std::vector<long> EvenLattice::restrict_to(const LatticeVector& v, std::size_t b) const
{
    if (static_cast<int>(v.size()) != rank())
        throw std::invalid_argument("lattice vector dimension mismatch");
    auto first = v.coords.begin() + offsets_.at(b);
    return {first, first + blocks_.at(b).rank()};
}

Gram hyperbolic_gram() { return {{0, 1}, {1, 0}}; }

Gram e8_negative_gram()
{
    Gram g(8, std::vector<long>(8, 0));
    for (int i = 0; i < 8; ++i)
        g[i][i] = -2;
    // Dynkin edges 1-3, 3-4, 4-5, 5-6, 6-7, 7-8, 2-4 (1-based)
    const int edges[7][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (const auto& e : edges) {
        g[e[0]][e[1]] = 1;
        g[e[1]][e[0]] = 1;
    }
    return g;
}

const EvenLattice& k3_lattice()
{
    static const EvenLattice lattice({
        {"U1", hyperbolic_gram()},
        {"U2", hyperbolic_gram()},
        {"U3", hyperbolic_gram()},
        {"E8a", e8_negative_gram()},
        {"E8b", e8_negative_gram()},
    });
    return lattice;
}

Integer determinant(const Gram& g)
{
    const std::size_t n = g.size();
    if (n == 0)
        return 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = g[i][j];
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

long inner(const EvenLattice& lattice, const LatticeVector& v, const LatticeVector& w)
{
    const std::size_t n = static_cast<std::size_t>(lattice.rank());
    if (v.size() != n || w.size() != n)
        throw std::invalid_argument("inner: dimension mismatch");
    const Gram& g = lattice.gram();
    long sum = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (v[a] == 0)
            continue;
        for (std::size_t b = 0; b < n; ++b)
            sum += v[a] * g[a][b] * w[b];
    }
    return sum;
}

long square_mod_2r(const EvenLattice& lattice, const LatticeVector& v, long r)
{
    return mod_floor(inner(lattice, v, v), 2 * r);
}

int delta_div(const LatticeVector& a, const LatticeVector& b, long r)
{
    if (a.size() != b.size())
        throw std::invalid_argument("delta_div: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] - b[i]) % r != 0)
            return 0;
    return 1;
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

long n_j(long r, long j)
{
    if (r < 2)
        throw std::invalid_argument("n_j: r must be at least 2");
    if (mod_floor(j, r) == 0)
        throw std::invalid_argument("n_j: j must be nonzero mod r");
    for (long n = 1; n < r; ++n)
        if (mod_floor(j * n + 1, r) == 0)
            return n;
    throw std::invalid_argument("n_j: j is not invertible mod r");
}

Integer JointDistribution::total() const
{
    Integer sum = 0;
    for (const auto& c : counts)
        sum += c;
    return sum;
}

namespace {

void require_rank(long r)
{
    if (r < 2)
        throw std::invalid_argument("r must be at least 2");
}

// Block tallies, keyed by (gram, c restricted mod r) so repeated blocks are
// enumerated once per call.
class BlockTallies {
public:
    BlockTallies(const EvenLattice& lattice, long r, const LatticeVector& c1, std::uint64_t budget)
    {
        if (static_cast<int>(c1.size()) != lattice.rank())
            throw std::invalid_argument("c1 dimension does not match the lattice rank");
        for (const auto& block : lattice.blocks())
            kernels::checked_block_size(block.rank(), r, budget);
        std::map<std::pair<Gram, std::vector<long>>, std::size_t> seen;
        for (std::size_t b = 0; b < lattice.blocks().size(); ++b) {
            // w.c1 on the block is w . (G c1), so the kernels see the covector G c1 mod r
            const Gram& g = lattice.blocks()[b].gram;
            const std::vector<long> coords = lattice.restrict_to(c1, b);
            std::vector<long> c(coords.size(), 0);
            for (std::size_t i = 0; i < g.size(); ++i) {
                for (std::size_t k = 0; k < g.size(); ++k)
                    c[i] += g[i][k] * mod_floor(coords[k], r);
                c[i] = mod_floor(c[i], r);
            }
            auto key = std::make_pair(g, c);
            auto it = seen.find(key);
            if (it == seen.end()) {
                it = seen.emplace(key, unique_.size()).first;
                unique_.push_back(kernels::tally_parallel(lattice.blocks()[b].gram, c, r));
            }
            index_.push_back(it->second);
        }
    }

    const std::vector<std::uint64_t>& block(std::size_t b) const { return unique_[index_[b]]; }
    std::size_t size() const { return index_.size(); }

private:
    std::vector<std::vector<std::uint64_t>> unique_;
    std::vector<std::size_t> index_;
};

// sum_e hist[e] zeta_{2r}^e
CycNum from_exponent_histogram(const std::vector<Integer>& hist, long r)
{
    std::vector<Rational> poly(hist.begin(), hist.end());
    return CycNum(static_cast<int>(2 * r), std::move(poly));
}

} // namespace

CycNum gauss_sum(const EvenLattice& lattice, long r, long j, const LatticeVector& c1, std::uint64_t budget)
{
    require_rank(r);
    const long two_r = 2 * r;
    BlockTallies tallies(lattice, r, c1, budget);
    CycNum product = CycNum::one(static_cast<int>(two_r));
    for (std::size_t b = 0; b < tallies.size(); ++b) {
        const auto& counts = tallies.block(b);
        std::vector<Integer> hist(static_cast<std::size_t>(two_r), 0);
        for (long m = 0; m < r; ++m)
            for (long k = 0; k < two_r; ++k) {
                std::uint64_t n = counts[static_cast<std::size_t>(m * two_r + k)];
                if (n != 0)
                    hist[static_cast<std::size_t>(mod_floor(2 * m - j * k, two_r))] += static_cast<unsigned long>(n);
            }
        product *= from_exponent_histogram(hist, r);
    }
    return product;
}

JointDistribution joint_distribution(const EvenLattice& lattice, long r, const LatticeVector& c1,
                                     std::uint64_t budget)
{
    require_rank(r);
    const long two_r = 2 * r;
    const std::size_t bins = static_cast<std::size_t>(r * two_r);
    BlockTallies tallies(lattice, r, c1, budget);

    JointDistribution dist;
    dist.r = r;
    dist.counts.assign(bins, 0);
    dist.counts[0] = 1;
    for (std::size_t b = 0; b < tallies.size(); ++b) {
        const auto& block = tallies.block(b);
        std::vector<Integer> next(bins, 0);
        for (long m1 = 0; m1 < r; ++m1)
            for (long k1 = 0; k1 < two_r; ++k1) {
                const Integer& a = dist.counts[static_cast<std::size_t>(m1 * two_r + k1)];
                if (a == 0)
                    continue;
                for (long m2 = 0; m2 < r; ++m2)
                    for (long k2 = 0; k2 < two_r; ++k2) {
                        std::uint64_t n = block[static_cast<std::size_t>(m2 * two_r + k2)];
                        if (n == 0)
                            continue;
                        std::size_t slot = static_cast<std::size_t>(((m1 + m2) % r) * two_r + (k1 + k2) % two_r);
                        next[slot] += a * static_cast<unsigned long>(n);
                    }
            }
        dist.counts = std::move(next);
    }
    return dist;
}

CycNum gauss_sum_from_distribution(const JointDistribution& dist, long j)
{
    const long r = dist.r;
    const long two_r = 2 * r;
    std::vector<Integer> hist(static_cast<std::size_t>(two_r), 0);
    for (long m = 0; m < r; ++m)
        for (long k = 0; k < two_r; ++k)
            hist[static_cast<std::size_t>(mod_floor(2 * m - j * k, two_r))] += dist.at(m, k);
    return from_exponent_histogram(hist, r);
}

CycNum flux_sum_closed_form(const EvenLattice& lattice, long r, long j, const LatticeVector& c1)
{
    require_rank(r);
    if (lattice.rank() % 2 != 0)
        throw std::invalid_argument("flux sums need an even-rank lattice");
    const int order = static_cast<int>(2 * r);
    Integer scale;
    if (mod_floor(j, r) == 0) {
        if (!delta_div(c1, lattice.zero(), r))
            return CycNum::zero(order);
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(lattice.rank()));
        return CycNum(Rational(scale), order);
    }
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(lattice.rank() / 2));
    const long phase = -n_j(r, j) * square_mod_2r(lattice, c1, r);
    return CycNum::root_of_unity(order, phase) * Rational(scale);
}

namespace {

std::vector<long> parse_int_list(const std::string& text)
{
    std::vector<long> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer '" + item + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size())
            throw std::invalid_argument("malformed integer '" + item + "'");
        out.push_back(value);
    }
    return out;
}

} // namespace

LatticeVector parse_lattice_vector(const EvenLattice& lattice, const std::string& text)
{
    LatticeVector v = lattice.zero();
    if (text == "zero" || text == "0")
        return v;
    if (!text.empty() && text.front() == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed lattice vector: ") + e.what());
        }
        if (!j.is_array() || j.size() != static_cast<std::size_t>(lattice.rank()))
            throw std::invalid_argument("lattice vector must be an array of " + std::to_string(lattice.rank()) +
                                        " integers");
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number_integer())
                throw std::invalid_argument("lattice vector entries must be integers");
            v.coords[i] = j[i].get<long>();
        }
        return v;
    }

    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, '+')) {
        long scale = 1;
        if (auto star = token.find('*'); star != std::string::npos) {
            scale = parse_int_list(token.substr(0, star)).at(0);
            token = token.substr(star + 1);
        }
        auto colon = token.find(':');
        if (colon == std::string::npos || token.size() < colon + 3 || token[colon + 1] != '(' || token.back() != ')')
            throw std::invalid_argument("expected NAME:(a,b,...) in lattice shorthand, got '" + token + "'");
        const std::string name = token.substr(0, colon);
        const std::vector<long> values = parse_int_list(token.substr(colon + 2, token.size() - colon - 3));
        bool found = false;
        for (std::size_t b = 0; b < lattice.blocks().size(); ++b) {
            if (lattice.blocks()[b].name != name)
                continue;
            if (static_cast<int>(values.size()) != lattice.blocks()[b].rank())
                throw std::invalid_argument("block " + name + " needs " +
                                            std::to_string(lattice.blocks()[b].rank()) + " coordinates");
            for (std::size_t i = 0; i < values.size(); ++i)
                v.coords[static_cast<std::size_t>(lattice.block_offset(b)) + i] += scale * values[i];
            found = true;
        }
        if (!found)
            throw std::invalid_argument("unknown lattice block '" + name + "'");
    }
    return v;
}

std::string format_lattice_vector(const LatticeVector& v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

} // namespace vw
