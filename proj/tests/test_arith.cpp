#include <doctest.h>

#include <stdexcept>

#include "f1zeta/arith.hpp"

using namespace f1zeta;

TEST_CASE("moebius: known values") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(7) == -1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);  // 2*3*5
    CHECK(moebius(210) == 1);  // 2*3*5*7
    CHECK(moebius(9999991) == -1);  // prime near the envelope
}

TEST_CASE("moebius: domain errors") {
    CHECK_THROWS_AS(moebius(0), std::domain_error);
    CHECK_THROWS_AS(moebius(-5), std::domain_error);
    CHECK_THROWS_AS(moebius(10'000'001), std::domain_error);
}

TEST_CASE("moebius: defining property sum_{d|n} mu(d) = [n == 1]") {
    for (std::int64_t n = 1; n <= 500; ++n) {
        int sum = 0;
        for (std::int64_t d : divisors(n)) sum += moebius(d);
        CAPTURE(n);
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors: examples and brute-force agreement") {
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(7) == std::vector<std::int64_t>{1, 7});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK_THROWS_AS(divisors(0), std::domain_error);

    for (std::int64_t n = 1; n <= 200; ++n) {
        std::vector<std::int64_t> brute;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) brute.push_back(d);
        CAPTURE(n);
        CHECK(divisors(n) == brute);
    }
}

TEST_CASE("kappa: pinned values") {
    CHECK(kappa(1, 3) == 0);
    CHECK(kappa(-1, 2) == 1);
    CHECK(kappa(2, 6) == 9);  // (64 - 8 - 4 + 2) / 6
    CHECK(kappa(2, 1) == 2);
    CHECK(kappa(0, 1) == 0);
    for (std::int64_t a = -6; a <= 6; ++a) CHECK(kappa(a, 1) == a);
    CHECK_THROWS_AS(kappa(3, 0), std::domain_error);
}

TEST_CASE("kappa: Moebius inversion sum_{n|m} n*kappa_a(n) = a^m") {
    for (std::int64_t a = -8; a <= 8; ++a) {
        const auto table = kappa_table(a, 60);
        for (std::int64_t m = 1; m <= 60; ++m) {
            BigInt sum = 0;
            for (std::int64_t n : divisors(m))
                sum += BigInt(static_cast<long>(n)) * table[static_cast<std::size_t>(n)];
            CAPTURE(a);
            CAPTURE(m);
            CHECK(sum == pow_int(a, static_cast<unsigned long>(m)));
        }
    }
}

TEST_CASE("kappa: growth bound |n*kappa_a(n) - a^n| <= a^{floor(n/2)+1}") {
    for (std::int64_t a = 0; a <= 12; ++a) {
        for (std::int64_t n = 1; n <= 40; ++n) {
            const BigInt lhs =
                abs(BigInt(static_cast<long>(n)) * kappa(a, n) - pow_int(a, static_cast<unsigned long>(n)));
            const BigInt rhs = pow_int(a, static_cast<unsigned long>(n / 2 + 1));
            CAPTURE(a);
            CAPTURE(n);
            CHECK(lhs <= rhs);
        }
    }
}

TEST_CASE("kappa: sign pattern of the value table") {
    for (std::int64_t a : {-2, -5, -9}) {
        for (std::int64_t n = 1; n <= 40; ++n) {
            const BigInt v = kappa(a, n);
            CAPTURE(a);
            CAPTURE(n);
            if (n % 2 == 0)
                CHECK(v > 0);
            else
                CHECK(v < 0);
        }
    }
    CHECK(kappa(-1, 1) == -1);
    CHECK(kappa(-1, 2) == 1);
    for (std::int64_t n = 3; n <= 40; ++n) CHECK(kappa(-1, n) == 0);
    CHECK(kappa(1, 1) == 1);
    for (std::int64_t n = 2; n <= 40; ++n) CHECK(kappa(1, n) == 0);
    for (std::int64_t n = 1; n <= 40; ++n) CHECK(kappa(0, n) == 0);
}

TEST_CASE("kappa_table: examples and pointwise agreement with kappa") {
    CHECK(kappa_table(0, 5) == std::vector<BigInt>{0, 0, 0, 0, 0, 0});
    CHECK(kappa_table(-1, 4) == std::vector<BigInt>{0, -1, 1, 0, 0});
    CHECK(kappa_table(2, 4) == std::vector<BigInt>{0, 2, 1, 2, 3});
    CHECK_THROWS_AS(kappa_table(2, 0), std::domain_error);

    for (std::int64_t a : {-3, -1, 0, 1, 2, 5}) {
        const auto table = kappa_table(a, 80);
        REQUIRE(table.size() == 81);
        for (std::int64_t n = 1; n <= 80; ++n) {
            CAPTURE(a);
            CAPTURE(n);
            CHECK(table[static_cast<std::size_t>(n)] == kappa(a, n));
        }
    }
}
