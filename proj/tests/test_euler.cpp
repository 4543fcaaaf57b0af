#include <doctest.h>

#include <cmath>

#include "zr/errors.hpp"
#include "zr/euler.hpp"
#include "zr/zeta.hpp"

using namespace zr;

namespace {

// Defining divisor sum for the local correction factor:
//   sum_{d|q} mu(d) d^{1-ahat}/phi(d) sum_{e|d} mu(e) e^{ahat-1}
//       E_{A,C}(1-ahat, q e / d).
cplx script_E_oracle(const ShiftSet& A, const ShiftSet& C, cplx alpha_hat,
                     std::uint32_t q) {
    cplx w = 1.0 - alpha_hat;
    cplx sum{};
    for (std::uint32_t d = 1; d <= q; ++d) {
        if (q % d != 0 || moebius(d) == 0) continue;
        cplx outer = (double)moebius(d) * std::pow((cplx)d, 1.0 - alpha_hat) /
                     (double)euler_phi(d);
        for (std::uint32_t e = 1; e <= d; ++e) {
            if (d % e != 0 || moebius(e) == 0) continue;
            sum += outer * (double)moebius(e) *
                   std::pow((cplx)e, alpha_hat - 1.0) *
                   E_factor(A, C, w, q / d * e);
        }
    }
    return sum;
}

}  // namespace

TEST_CASE("primes_up_to counts") {
    CHECK(primes_up_to(10) == std::vector<std::uint32_t>{2, 3, 5, 7});
    CHECK(primes_up_to(1000).size() == 168);
    CHECK(primes_up_to(10000).size() == 1229);
}

TEST_CASE("local_factor geometric and collapsed limits") {
    ShiftSet A({{0, 0}}, Role::A), B({{0, 0}}, Role::B);
    ShiftSet empty_c({}, Role::C), empty_d({}, Role::D);
    cplx s{2, 0};
    // both coefficients are identically 1: L_p(s) = (1 - p^-s)^-1
    cplx got = local_factor(A, B, empty_c, empty_d, 5, s);
    CHECK(std::abs(got - 1.0 / (1.0 - std::pow(5.0, -2.0))) < 1e-14);

    // A = C and B = D collapse both coefficients to delta_{j,0}: L_p = 1
    ShiftSet C({{0.1, 0.2}}, Role::C);
    ShiftSet A2({{0.1, 0.2}}, Role::A);
    ShiftSet B2({{0.3, 0.0}}, Role::B);
    ShiftSet D2({{0.3, 0.0}}, Role::D);
    CHECK(std::abs(local_factor(A2, B2, C, D2, 5, s) - cplx(1, 0)) < 1e-14);
}

TEST_CASE("B_value reduces to zeta for singletons with empty denominators") {
    ShiftSet A({{0.15, 0.1}}, Role::A), B({{0.25, -0.2}}, Role::B);
    ShiftSet C({}, Role::C), D({}, Role::D);
    ZetaEvaluator ze;
    cplx s{2, 0};
    BValue b = B_value(A, B, C, D, s);
    cplx want = ze.zeta(s + cplx{0.15, 0.1} + cplx{0.25, -0.2});
    CHECK(std::abs(b.value - want) / std::abs(want) < 1e-10);
}

TEST_CASE("B_value matches a direct Dirichlet sum at s = 2") {
    ShiftSet A({{0.1, 0.0}, {0.2, 0.3}}, Role::A);
    ShiftSet B({{0.12, -0.1}}, Role::B);
    ShiftSet C({{0.3, 0.0}}, Role::C);
    ShiftSet D({{0.35, 0.1}}, Role::D);
    auto Ia = sieve_coefficients(A, C, 200000);
    auto Ib = sieve_coefficients(B, D, 200000);
    cplx direct{};
    for (std::uint32_t n = 200000; n >= 1; --n)
        direct += Ia[n] * Ib[n] / ((double)n * n);
    BValue b = B_value(A, B, C, D, {2, 0});
    CHECK(std::abs(b.value - direct) / std::abs(direct) < 1e-6);
}

TEST_CASE("B_value collapses to 1 when A = C, B = D") {
    ShiftSet A({{0.1, 0.2}}, Role::A), C({{0.1, 0.2}}, Role::C);
    ShiftSet B({{0.3, 0.0}}, Role::B), D({{0.3, 0.0}}, Role::D);
    BValue b = B_value(A, B, C, D, {1.5, 0});
    CHECK(std::abs(b.value - cplx(1, 0)) < 1e-12);
}

TEST_CASE("B_value tail bound covers cutoff refinement") {
    ShiftSet A({{0.1, 0}}, Role::A), B({{0.12, 0}}, Role::B);
    ShiftSet C({{0.3, 0}}, Role::C), D({{0.35, 0}}, Role::D);
    cplx s{1.3, 0};
    BValue coarse = B_value(A, B, C, D, s, 1000);
    BValue fine = B_value(A, B, C, D, s, 10000);
    CHECK(std::abs(coarse.value - fine.value) <=
          (coarse.tail_bound + 1e-12) * std::abs(fine.value));
}

TEST_CASE("B_value reports the pole when s + alpha + beta = 1") {
    ShiftSet A({{0.4, 0}}, Role::A), B({{0.1, 0}}, Role::B);
    ShiftSet C({}, Role::C), D({}, Role::D);
    CHECK_THROWS_AS(B_value(A, B, C, D, {0.5, 0}), PoleError);
}

TEST_CASE("E_factor trivial and prime cases") {
    ShiftSet A({{0.2, 0.1}}, Role::A);
    ShiftSet C({}, Role::C);
    cplx w{2.5, 0};
    CHECK(E_factor(A, C, w, 1) == cplx(1, 0));
    // singleton A, empty C: E(w, p) = p^-alpha
    cplx want = std::pow(cplx(7, 0), -cplx(0.2, 0.1));
    CHECK(std::abs(E_factor(A, C, w, 7) - want) < 1e-12);
}

TEST_CASE("E_factor is multiplicative in coprime moduli") {
    ShiftSet A({{0.2, 0.1}, {-0.1, 0.3}}, Role::A);
    ShiftSet C({{0.4, 0.0}}, Role::C);
    cplx w{2.5, 0};
    cplx lhs = E_factor(A, C, w, 12 * 35);
    cplx rhs = E_factor(A, C, w, 12) * E_factor(A, C, w, 35);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("E_factor matches the dilated Dirichlet sum") {
    // sum_n I(nr) n^-w = [prod zeta(w+a) / prod zeta(w+c)] E(w, r)
    ShiftSet A({{0.2, 0.0}, {-0.1, 0.1}}, Role::A);
    ShiftSet C({{0.4, 0.0}}, Role::C);
    cplx w{2.5, 0};
    std::uint32_t r = 12, N = 100000;
    auto I = sieve_coefficients(A, C, r * N);
    cplx direct{};
    for (std::uint32_t n = N; n >= 1; --n)
        direct += I[n * r] * std::pow((double)n, -2.5);
    ZetaEvaluator ze;
    cplx pref = ze.zeta(w + cplx{0.2, 0.0}) * ze.zeta(w + cplx{-0.1, 0.1}) /
                ze.zeta(w + cplx{0.4, 0.0});
    cplx rhs = pref * E_factor(A, C, w, r);
    CHECK(std::abs(direct - rhs) / std::abs(rhs) < 1e-5);
}

TEST_CASE("script_E closed form equals the defining divisor sum") {
    ShiftSet A({{0.1, 0.0}, {0.3, -0.2}}, Role::A);
    ShiftSet C({{0.45, 0.1}}, Role::C);
    cplx ahat{0.1, 0.0};
    for (std::uint32_t q : {1u, 2u, 8u, 12u, 30u, 49u, 97u}) {
        cplx closed = script_E(A, C, ahat, q);
        cplx oracle = script_E_oracle(A, C, ahat, q);
        CHECK(std::abs(closed - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("script_E rejects alpha_hat outside A") {
    ShiftSet A({{0.1, 0}}, Role::A), C({}, Role::C);
    CHECK_THROWS_AS(script_E(A, C, {0.2, 0}, 6), std::invalid_argument);
}
