#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgalois/cyclotomic.hpp"
#include "qgalois/parse.hpp"

using namespace qgalois;

TEST_CASE("cyclotomic relations at small orders") {
    // zeta + zeta^2 = -1 in Q(zeta_3)
    auto z3 = Cyclotomic::root_power(3, 1);
    auto z3sq = Cyclotomic::root_power(3, 2);
    CHECK(z3 + z3sq == Cyclotomic(3, Rational(-1)));
    // zeta^2 + 1 = 0 in Q(zeta_4)
    auto z4 = Cyclotomic::root_power(4, 1);
    CHECK((z4 * z4 + Cyclotomic::one(4)).is_zero());
    // 1/2 + 1/3 = 5/6 at order 2
    Cyclotomic half(2, rat(1, 2)), third(2, rat(1, 3));
    CHECK(half + third == Cyclotomic(2, rat(5, 6)));
    // zeta * zeta = zeta^2 = -1 - zeta in Q(zeta_3)
    CHECK(z3 * z3 == -(Cyclotomic::one(3) + z3));
    // inv(zeta) = -zeta in Q(zeta_4)
    CHECK(z4.inverse() == -z4);
    // zeta * zeta^4 = 1 in Q(zeta_5)
    CHECK(Cyclotomic::root_power(5, 1) * Cyclotomic::root_power(5, 4) == Cyclotomic::one(5));
}

TEST_CASE("lambda powers") {
    CHECK(lambda_power(3, 1, -1) == Cyclotomic::root_power(3, 2));
    CHECK(lambda_power(2, 1, 7) == Cyclotomic(2, Rational(-1)));
    for (int n : {2, 3, 4, 5, 6, 8}) CHECK(lambda_power(n, 1, 0).is_one());
}

TEST_CASE("lambda power laws and primitivity") {
    for (int n : {2, 3, 4, 5, 8, 12}) {
        for (int k : {1, n - 1}) {
            if (std::gcd(k, n) != 1) continue;
            for (long e1 = -5; e1 <= 5; ++e1)
                for (long e2 = -3; e2 <= 3; ++e2)
                    CHECK(lambda_power(n, k, e1) * lambda_power(n, k, e2) ==
                          lambda_power(n, k, e1 + e2));
            CHECK(lambda_power(n, k, n).is_one());
            for (int j = 1; j < n; ++j) CHECK_FALSE(lambda_power(n, k, j).is_one());
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coin(-4, 4);
    for (int n : {3, 4, 5, 8}) {
        int d = euler_phi(n);
        auto rnd = [&] {
            Cyclotomic v = Cyclotomic::zero(n);
            for (int i = 0; i < d; ++i) {
                v += Cyclotomic(n, rat(coin(rng), 1 + std::abs(coin(rng)))) *
                     Cyclotomic::root_power(n, i);
            }
            return v;
        };
        for (int trial = 0; trial < 25; ++trial) {
            Cyclotomic a = rnd(), b = rnd(), c = rnd();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Cyclotomic::one(n));
                CHECK(a.inverse() * a == Cyclotomic::one(n));
            }
        }
    }
}

TEST_CASE("inverse of zero throws") {
    CHECK_THROWS_AS(Cyclotomic::zero(3).inverse(), DomainError);
}

TEST_CASE("order mismatch is a configuration error") {
    CHECK_THROWS_AS(Cyclotomic::one(3) + Cyclotomic::one(4), ConfigError);
}

TEST_CASE("scalar literals round trip") {
    for (const char* txt : {"1/2", "z^2", "-z^1", "1 - 2*z^1", "3", "0"}) {
        Cyclotomic v = parse_scalar(txt, 5);
        CHECK(parse_scalar(v.str(), 5) == v);
    }
    CHECK(parse_scalar("(1 + z)*(1 - z)", 5) ==
          Cyclotomic::one(5) - Cyclotomic::root_power(5, 2));
    CHECK(parse_scalar("2/4", 7) == Cyclotomic(7, rat(1, 2)));
    CHECK_THROWS_AS(parse_scalar("1 +", 3), ParseError);
    CHECK_THROWS_AS(parse_scalar("w", 3), ParseError);
}
