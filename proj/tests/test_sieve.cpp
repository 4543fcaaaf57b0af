#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "zr/sieve.hpp"

using namespace zr;

TEST_CASE("FactorizationSieve basic arithmetic functions") {
    FactorizationSieve fs(1000);
    CHECK(fs.is_prime(2));
    CHECK(fs.is_prime(997));
    CHECK_FALSE(fs.is_prime(1));
    CHECK_FALSE(fs.is_prime(999));
    CHECK(fs.moebius(1) == 1);
    CHECK(fs.moebius(30) == -1);
    CHECK(fs.moebius(12) == 0);
    CHECK(fs.euler_phi(1) == 1);
    CHECK(fs.euler_phi(360) == 96);
    auto f = fs.factor(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint32_t, std::uint32_t>{2, 3});
    CHECK(f[2] == std::pair<std::uint32_t, std::uint32_t>{5, 1});
}

TEST_CASE("local_series collapses to delta when A == C") {
    ShiftSet A({{0.3, 0.1}}, Role::A);
    ShiftSet C({{0.3, 0.1}}, Role::C);
    auto ls = local_series(A, C, 7, 10);
    CHECK(ls.at(0) == cplx(1, 0));
    for (std::size_t j = 1; j <= 10; ++j) CHECK(std::abs(ls.at(j)) < 1e-15);
}

TEST_CASE("local_series with empty C is a shifted divisor coefficient") {
    // A = {a, b}: I(p^j) = sum_{u+v=j} p^{-ua-vb}
    ShiftSet A({{0.2, 0}, {0.5, 0}}, Role::A);
    ShiftSet C({}, Role::C);
    auto ls = local_series(A, C, 3, 6);
    for (std::size_t j = 0; j <= 6; ++j) {
        cplx want{};
        for (std::size_t u = 0; u <= j; ++u)
            want += std::pow(3.0, -0.2 * u - 0.5 * (j - u));
        CHECK(std::abs(ls.at(j) - want) < 1e-13);
    }
}

TEST_CASE("local_series rejects composite p") {
    ShiftSet A({{0.2, 0}}, Role::A), C({}, Role::C);
    CHECK_THROWS_AS(local_series(A, C, 6, 4), std::invalid_argument);
}

TEST_CASE("sieve_coefficients matches brute_force_coefficient") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-0.4, 0.4), im(-1.0, 1.0);
    for (int cfg = 0; cfg < 3; ++cfg) {
        ShiftSet A({{re(rng), im(rng)}, {re(rng), im(rng)}}, Role::A);
        ShiftSet C({{re(rng), im(rng)}}, Role::C);
        auto table = sieve_coefficients(A, C, 2000);
        double worst = 0;
        for (std::uint32_t n = 1; n <= 2000; n += 17) {
            cplx b = brute_force_coefficient(A, C, n);
            double d = std::abs(table[n] - b) / std::max(1.0, std::abs(b));
            worst = std::max(worst, d);
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("sieve_coefficients is multiplicative") {
    ShiftSet A({{0.1, 0.3}, {-0.2, 0.0}}, Role::A);
    ShiftSet C({{0.4, -0.1}}, Role::C);
    auto t = sieve_coefficients(A, C, 5000);
    CHECK(std::abs(t[1] - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(t[12 * 35] - t[12] * t[35]) < 1e-12);
    CHECK(std::abs(t[8 * 9 * 25] - t[8] * t[9] * t[25]) < 1e-12);
}

TEST_CASE("sieve_coefficients enforces the memory cap") {
    ShiftSet A({{0.1, 0}}, Role::A), C({}, Role::C);
    CHECK_THROWS_AS(sieve_coefficients(A, C, 100000, 1024), std::length_error);
}

TEST_CASE("ramanujan_sum equals the exponential-sum oracle") {
    constexpr double tau = 2 * std::numbers::pi;
    for (std::uint32_t q = 1; q <= 40; ++q)
        for (std::uint32_t h = 1; h <= 40; ++h) {
            cplx s{};
            for (std::uint32_t a = 1; a <= q; ++a)
                if (std::gcd(a, q) == 1)
                    s += std::polar(1.0, tau * a * h / q);
            CHECK(std::abs(s.real() - (double)ramanujan_sum(q, h)) < 1e-8);
            CHECK(std::abs(s.imag()) < 1e-8);
        }
}

TEST_CASE("ramanujan_sum special values") {
    CHECK(ramanujan_sum(1, 5) == 1);
    CHECK(ramanujan_sum(6, 6) == (std::int64_t)euler_phi(6));
    CHECK(ramanujan_sum(9, 1) == 0);   // mu(9) = 0
    CHECK(ramanujan_sum(7, 1) == -1);  // mu(7)
}

TEST_CASE("phi_product matches its divisor-sum form") {
    // Phi(x, q) = sum_{r|q squarefree} mu(r) r^{-x}
    cplx x{2.0, 0.0};
    std::uint32_t q = 30;
    cplx want = 1.0 - std::pow(2.0, -2.0) - std::pow(3.0, -2.0) -
                std::pow(5.0, -2.0) + std::pow(6.0, -2.0) +
                std::pow(10.0, -2.0) + std::pow(15.0, -2.0) -
                std::pow(30.0, -2.0);
    CHECK(std::abs(phi_product(x, q) - want) < 1e-14);
    CHECK(std::abs(phi_product(x, 1) - cplx(1, 0)) < 1e-15);
}
