#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vw/cycnum.hpp"

using namespace vw;

TEST_SUITE("cycnum") {

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    // Phi_105 is the first with a coefficient -2.
    const auto& p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == -2);
    for (int n = 1; n <= 60; ++n)
        CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("roots of unity")
{
    CHECK(CycNum::root_of_unity(2, 1) == CycNum(Rational(-1)));
    CHECK(CycNum::root_of_unity(3, 0) == CycNum::one());
    CHECK(CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2) == CycNum(Rational(-1)));
    CHECK(CycNum::root_of_unity(4, 1) * CycNum::root_of_unity(4, 1) == CycNum(Rational(-1)));
    CHECK(CycNum::root_of_unity(6, 1) * CycNum::root_of_unity(6, -1) == CycNum::one());
    CHECK(CycNum::root_of_unity(6, 5) == CycNum::root_of_unity(6, -1));

    for (int n = 2; n <= 30; ++n) {
        CycNum z = CycNum::root_of_unity(n, 1);
        CycNum p = CycNum::one(n);
        CycNum sum = CycNum::zero(n);
        for (int k = 0; k < n; ++k) {
            sum += p;
            p *= z;
        }
        CHECK(p == CycNum::one());
        CHECK(sum.is_zero());
    }
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937 rng(1);
    for (int order : {1, 3, 4, 5, 6, 8, 10, 12, 15}) {
        for (int trial = 0; trial < 20; ++trial) {
            CycNum a = oracle::random_cycnum(rng, order);
            CycNum b = oracle::random_cycnum(rng, order);
            CycNum c = oracle::random_cycnum(rng, order);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            CHECK(a + CycNum::zero() == a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == CycNum::one());
                CHECK((a * a.inverse()).coeffs() == CycNum::one(order).coeffs());
            }
        }
    }
}

TEST_CASE("canonical form")
{
    std::mt19937 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        CycNum a = oracle::random_cycnum(rng, 12);
        CycNum b = oracle::random_cycnum(rng, 12);
        // the same value reached by two different computations
        CycNum x = (a + b) * (a - b);
        CycNum y = a * a - b * b;
        CHECK(x.coeffs() == y.coeffs());
        CHECK(x.coeffs().size() == static_cast<std::size_t>(euler_phi(12)));
    }
    CHECK(CycNum::zero(7).coeffs() == std::vector<Rational>(6, Rational(0)));
}

TEST_CASE("mixed orders lift to the lcm")
{
    CycNum i = CycNum::root_of_unity(4, 1);
    CycNum w = CycNum::root_of_unity(3, 1);
    CycNum p = i * w;
    CHECK(p.order() == 12);
    CHECK(p == CycNum::root_of_unity(12, 3 + 4));
    CHECK(CycNum::root_of_unity(6, 2) == CycNum::root_of_unity(3, 1));
    CHECK(CycNum::root_of_unity(3, 1).lift(6).coeffs() == CycNum::root_of_unity(6, 2).coeffs());
}

TEST_CASE("inverse")
{
    CHECK(CycNum::one().inverse() == CycNum::one());
    for (int n = 2; n <= 12; ++n)
        for (int k = 0; k < n; ++k)
            CHECK(CycNum::root_of_unity(n, k).inverse() == CycNum::root_of_unity(n, n - k));
    CycNum a = CycNum::one(5) + CycNum::root_of_unity(5, 1);
    CycNum v = a.inverse();
    CHECK(a * v == CycNum::one());
    CHECK(std::abs(v.embed() * a.embed() - 1.0) < 1e-12);
    CHECK_THROWS_AS(CycNum::zero(5).inverse(), DivisionByZero);
}

TEST_CASE("embedding")
{
    CHECK(std::abs(CycNum::root_of_unity(4, 1).embed() - std::complex<double>(0, 1)) < 1e-15);
    CHECK(std::abs(CycNum(Rational(-1)).embed() - std::complex<double>(-1, 0)) < 1e-15);
    CHECK(std::abs(CycNum::root_of_unity(3, 1).embed() - std::complex<double>(-0.5, std::sqrt(3.0) / 2)) < 1e-15);

    std::mt19937 rng(3);
    for (int order : {5, 7, 8, 9, 10, 14}) {
        for (int trial = 0; trial < 20; ++trial) {
            CycNum a = oracle::random_cycnum(rng, order);
            CycNum b = oracle::random_cycnum(rng, order);
            CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-10);
            CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-12);
            CHECK(std::abs(a.conj().embed() - std::conj(a.embed())) < 1e-12);
        }
    }
}

TEST_CASE("rationals")
{
    CHECK(parse_rational("6/4") == frac(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(frac(-1, 8)) == "-1/8");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    Rational q;
    CHECK(CycNum(frac(5, 3), 7).is_rational(&q));
    CHECK(q == frac(5, 3));
    CHECK_FALSE(CycNum::root_of_unity(4, 1).is_rational());
}

}
