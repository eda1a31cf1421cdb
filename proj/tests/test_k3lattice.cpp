#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vw/k3lattice.hpp"
#include "vw/kernels.hpp"

using namespace vw;

namespace {

LatticeVector random_vector(std::mt19937& rng, int rank, long range)
{
    std::uniform_int_distribution<long> d(-range, range);
    LatticeVector v{std::vector<long>(static_cast<std::size_t>(rank))};
    for (auto& x : v.coords)
        x = d(rng);
    return v;
}

LatticeVector vec(const std::string& text) { return parse_lattice_vector(k3_lattice(), text); }

Integer ipow(long r, int e)
{
    Integer x = 1;
    for (int i = 0; i < e; ++i)
        x *= r;
    return x;
}

CycNum pow_rational(long r, int e) { return CycNum(Rational(ipow(r, e))); }

}

TEST_SUITE("k3lattice") {

TEST_CASE("k3 lattice shape")
{
    const EvenLattice& L = k3_lattice();
    CHECK(L.rank() == 22);
    CHECK(L.blocks().size() == 5);
    CHECK(abs(determinant(L.gram())) == 1);
    CHECK(determinant(e8_negative_gram()) == 1);
    CHECK(determinant(hyperbolic_gram()) == -1);
    CHECK(inner(L, vec("U1:(1,0)"), vec("U1:(0,1)")) == 1);
    CHECK(inner(L, vec("U2:(3,4)"), L.zero()) == 0);
    for (int i = 0; i < 8; ++i) {
        LatticeVector e = L.zero();
        e.coords[static_cast<std::size_t>(6 + i)] = 1;
        CHECK(inner(L, e, e) == -2);
    }
    // signature (3,19): count negative pivots of the Gram matrix through a congruent diagonalisation
    std::vector<std::vector<double>> g(22, std::vector<double>(22));
    for (int i = 0; i < 22; ++i)
        for (int j = 0; j < 22; ++j)
            g[i][j] = static_cast<double>(L.gram()[i][j]);
    // U blocks are not pivotable directly; change basis to e+f, e-f
    for (int b = 0; b < 3; ++b) {
        g[2 * b][2 * b] = 2;
        g[2 * b + 1][2 * b + 1] = -2;
        g[2 * b][2 * b + 1] = g[2 * b + 1][2 * b] = 0;
    }
    int positive = 0, negative = 0;
    for (int k = 0; k < 22; ++k) {
        (g[k][k] > 0 ? positive : negative) += 1;
        for (int i = k + 1; i < 22; ++i) {
            double f = g[i][k] / g[k][k];
            for (int j = k; j < 22; ++j)
                g[i][j] -= f * g[k][j];
        }
    }
    CHECK(positive == 3);
    CHECK(negative == 19);
}

TEST_CASE("lattice validation")
{
    CHECK_THROWS_AS(EvenLattice({{"odd", {{1}}}}), std::invalid_argument);
    CHECK_THROWS_AS(EvenLattice({{"asym", {{0, 1}, {2, 0}}}}), std::invalid_argument);
    CHECK_THROWS_AS(inner(k3_lattice(), LatticeVector{{1, 2}}, k3_lattice().zero()), std::invalid_argument);
}

TEST_CASE("vector parsing")
{
    const EvenLattice& L = k3_lattice();
    CHECK(vec("zero") == L.zero());
    LatticeVector v = vec("U1:(1,2)+2*E8b:(0,0,0,0,0,0,0,1)");
    CHECK(v[0] == 1);
    CHECK(v[1] == 2);
    CHECK(v[21] == 2);
    CHECK(vec(format_lattice_vector(v)) == v);
    CHECK_THROWS_AS(vec("U9:(1,0)"), std::invalid_argument);
    CHECK_THROWS_AS(vec("U1:(1,0,0)"), std::invalid_argument);
    CHECK_THROWS_AS(vec("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(vec("nonsense"), std::invalid_argument);
}

TEST_CASE("square mod 2r is well defined")
{
    const EvenLattice& L = k3_lattice();
    CHECK(square_mod_2r(L, L.zero(), 3) == 0);
    CHECK(square_mod_2r(L, vec("U1:(1,1)"), 2) == 2);
    CHECK(square_mod_2r(L, vec("E8a:(1,0,0,0,0,0,0,0)"), 5) == 8);

    std::mt19937 rng(17);
    const long primes[] = {2, 3, 5, 7};
    for (int trial = 0; trial < 1000; ++trial) {
        const long r = primes[trial % 4];
        LatticeVector v = random_vector(rng, 22, 50);
        LatticeVector u = random_vector(rng, 22, 50);
        CHECK(square_mod_2r(L, v, r) == square_mod_2r(L, v + r * u, r));
    }
}

TEST_CASE("delta_div and n_j")
{
    const EvenLattice& L = k3_lattice();
    LatticeVector v = vec("U2:(3,-1)");
    CHECK(delta_div(v, v, 3) == 1);
    CHECK(delta_div(5 * v, L.zero(), 5) == 1);
    CHECK(delta_div(vec("U1:(1,0)"), L.zero(), 2) == 0);

    CHECK(n_j(2, 1) == 1);
    CHECK(n_j(5, 2) == 2);
    CHECK(n_j(5, 3) == 3);
    for (long r : {2, 3, 5, 7, 11})
        for (long j = 1; j < r; ++j)
            CHECK(mod_floor(j * n_j(r, j), r) == r - 1);
    CHECK_THROWS_AS(n_j(5, 0), std::invalid_argument);
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("single U block")
{
    EvenLattice U({{"U", hyperbolic_gram()}});
    CHECK(gauss_sum(U, 2, 1, U.zero()) == CycNum(Rational(2)));
    JointDistribution d = joint_distribution(U, 2, U.zero());
    CHECK(d.at(0, 0) == 3);
    CHECK(d.at(0, 2) == 1);
    CHECK(d.total() == 4);
}

TEST_CASE("kernels: serial reference equals parallel")
{
    std::mt19937 rng(19);
    const Gram e8 = e8_negative_gram();
    for (long r : {2, 3, 5}) {
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<long> c = random_vector(rng, 8, 9).coords;
            CHECK(kernels::tally_serial(e8, c, r) == kernels::tally_parallel(e8, c, r));
        }
        std::vector<long> c2 = random_vector(rng, 2, 9).coords;
        CHECK(kernels::tally_serial(hyperbolic_gram(), c2, r) == kernels::tally_parallel(hyperbolic_gram(), c2, r));
    }
    const Gram one = {{2}};
    CHECK(kernels::tally_serial(one, std::vector<long>{1}, 7) == kernels::tally_parallel(one, std::vector<long>{1}, 7));
    CHECK_THROWS_AS(kernels::checked_block_size(8, 7, 1000), BudgetExceeded);
    CHECK(kernels::checked_block_size(8, 5, 390625) == 390625);
}

TEST_CASE("block multiplicativity against monolithic brute force")
{
    std::mt19937 rng(23);
    const Gram a2 = {{-2, 1}, {1, -2}};
    const Gram u = hyperbolic_gram();
    const Gram d4 = {{-2, 1, 0, 0}, {1, -2, 1, 1}, {0, 1, -2, 0}, {0, 1, 0, -2}};
    struct Case {
        std::vector<LatticeBlock> blocks;
    };
    std::vector<Case> cases = {
        {{{"U", u}, {"V", u}}},
        {{{"U", u}, {"A", a2}}},
        {{{"A", a2}, {"B", a2}}},
        {{{"D", d4}}},
        {{{"T", {{2}}}, {"U", u}, {"S", {{4}}}}},
    };
    for (const auto& cs : cases) {
        EvenLattice L(cs.blocks);
        for (long r : {2, 3}) {
            for (int trial = 0; trial < 3; ++trial) {
                LatticeVector c = random_vector(rng, L.rank(), 4);
                for (long j = 0; j < r; ++j) {
                    CycNum mono = oracle::gauss_sum_monolithic(L.gram(), c.coords, r, j);
                    CHECK(gauss_sum(L, r, j, c) == mono);
                    CHECK(gauss_sum_from_distribution(joint_distribution(L, r, c), j) == mono);
                }
            }
        }
    }
}

TEST_CASE("flux sum identities on the K3 lattice")
{
    const EvenLattice& L = k3_lattice();
    for (long r : {2, 3, 5}) {
        std::vector<LatticeVector> c1s = {L.zero(), r * vec("U1:(1,1)")};
        for (long k = 0; k < r; ++k)
            c1s.push_back(vec("U1:(1," + std::to_string(k) + ")"));
        c1s.push_back(vec("E8a:(1,0,0,0,0,0,0,0)+U3:(0,1)"));
        for (const auto& c1 : c1s) {
            JointDistribution dist = joint_distribution(L, r, c1);
            CHECK(dist.total() == ipow(r, 22));
            for (long j = 0; j < r; ++j) {
                CycNum closed = flux_sum_closed_form(L, r, j, c1);
                CHECK(gauss_sum(L, r, j, c1) == closed);
                CHECK(gauss_sum_from_distribution(dist, j) == closed);
            }
        }
        CHECK(flux_sum_closed_form(L, r, 0, L.zero()) == pow_rational(r, 22));
        CHECK(flux_sum_closed_form(L, r, 0, vec("U1:(1,0)")).is_zero());
        if (r > 2)
            CHECK(flux_sum_closed_form(L, r, 1, L.zero()) == pow_rational(r, 11));
    }
    // c1 = 0: counts depend only on the square
    JointDistribution d = joint_distribution(L, 2, L.zero());
    for (long k = 0; k < 4; ++k)
        CHECK(d.at(1, k) == 0);
    // r = 2, j = 1, n_1 = 1, c1^2 = -2: 2^11 exp(-pi i (-2) / 2) = -2^11
    CHECK(gauss_sum(L, 2, 1, vec("U1:(1,-1)")) == CycNum(Rational(-2048)));
}

TEST_CASE("enumeration budget")
{
    CHECK_THROWS_AS(gauss_sum(k3_lattice(), 5, 1, k3_lattice().zero(), 1000), BudgetExceeded);
    CHECK_THROWS_AS(joint_distribution(k3_lattice(), 3, k3_lattice().zero(), 10), BudgetExceeded);
}

}
