#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zr/averages.hpp"
#include "zr/sieve.hpp"

using namespace zr;

namespace {

const TestFunction& shared_psi() {
    static TestFunction psi;
    return psi;
}

ExperimentConfig singleton_config(double T) {
    ExperimentConfig cfg;
    cfg.A = ShiftSet({{0.10, 0}}, Role::A);
    cfg.B = ShiftSet({{0.12, 0}}, Role::B);
    cfg.C = ShiftSet({{0.30, 0}}, Role::C);
    cfg.D = ShiftSet({{0.35, 0}}, Role::D);
    cfg.T = T;
    cfg.psi = &shared_psi();
    return cfg;
}

}  // namespace

TEST_CASE("X derives from T^lambda unless overridden") {
    ExperimentConfig cfg = singleton_config(500);
    CHECK(cfg.X() == 930);
    cfg.T = 1000;
    CHECK(cfg.X() == 1995);
    cfg.x_override = 1234;
    CHECK(cfg.X() == 1234);
}

TEST_CASE("truncated_lhs equals the direct double sum at small T") {
    ExperimentConfig cfg = singleton_config(120);
    const TestFunction& psi = *cfg.psi;
    std::uint32_t X = cfg.X();
    auto Ia = sieve_coefficients(cfg.A, cfg.C, X);
    auto Ib = sieve_coefficients(cfg.B, cfg.D, X);
    constexpr double tau = 2 * std::numbers::pi;
    cplx direct{};
    for (std::uint32_t m = 1; m <= X; ++m)
        for (std::uint32_t n = 1; n <= X; ++n)
            direct += Ia[m] * Ib[n] / std::sqrt((double)m * n) *
                      psi.fourier(cfg.T / tau * std::log((double)m / n));
    direct *= cfg.T;
    cplx fast = truncated_lhs(cfg);
    CHECK(std::abs(fast - direct) < 1e-8 * std::abs(direct));
}

TEST_CASE("truncated pair sum tracks its prediction at desk scale") {
    ExperimentConfig cfg = singleton_config(300);
    cplx lhs = truncated_lhs(cfg);
    ComparisonReport rep = truncated_rhs(cfg);
    REQUIRE(!rep.components.empty());
    CHECK(rep.components.front().label == "diagonal");
    CHECK(std::abs(lhs - rep.predicted) / std::abs(rep.predicted) < 0.01);
}

TEST_CASE("degenerate collapse: truncated sides equal T psi_hat(0)") {
    ExperimentConfig cfg = singleton_config(150);
    cfg.C = ShiftSet(cfg.A.elems, Role::C);
    cfg.D = ShiftSet(cfg.B.elems, Role::D);
    double want = cfg.T * cfg.psi->integral();
    cplx lhs = truncated_lhs(cfg);
    ComparisonReport rep = truncated_rhs(cfg);
    CHECK(std::abs(lhs - cplx(want, 0)) < 1e-9 * want);
    CHECK(std::abs(rep.predicted - cplx(want, 0)) < 1e-9 * want);
    for (std::size_t i = 1; i < rep.components.size(); ++i)
        CHECK(std::abs(rep.components[i].value) < 1e-12 * want);
}

TEST_CASE("degenerate collapse: correlations reduce to the n = 1 term") {
    ShiftSet A({{0.1, 0}}, Role::A), C({{0.1, 0}}, Role::C);
    ShiftSet B({{0.2, 0}}, Role::B), D({{0.2, 0}}, Role::D);
    for (std::uint32_t h : {1u, 3u}) {
        cplx emp = correlation_empirical(A, C, B, D, 500, h);
        // I(n) = delta_{n,1}, so only n = 1 could contribute, and I(1+h) = 0
        CHECK(std::abs(emp) < 1e-14);
        CHECK(std::abs(correlation_predicted(A, C, B, D, 200.0, h, 200)) <
              1e-12);
    }
}

TEST_CASE("correlation_empirical rejects h = 0") {
    ShiftSet A({{0.1, 0}}, Role::A), C({{0.3, 0}}, Role::C);
    ShiftSet B({{0.12, 0}}, Role::B), D({{0.35, 0}}, Role::D);
    CHECK_THROWS_AS(correlation_empirical(A, C, B, D, 100, 0),
                    std::invalid_argument);
}

TEST_CASE("windowed exponential-sum mean matches the residue prediction") {
    ShiftSet A({{0.10, 0}}, Role::A), C({{0.30, 0}}, Role::C);
    for (std::uint32_t q : {3u, 8u}) {
        ExpSumAverage r = exp_sum_average(A, C, q, 3e4, 1.0);
        CHECK(std::abs(r.empirical - r.predicted) <
              0.05 * std::max(0.05, std::abs(r.predicted)));
    }
}

TEST_CASE("delta-method correlation matches windowed empirical means") {
    ShiftSet A({{0.10, 0}}, Role::A), C({{0.30, 0}}, Role::C);
    ShiftSet B({{0.12, 0}}, Role::B), D({{0.35, 0}}, Role::D);
    std::uint32_t lo = 20000, hi = 60000, h = 2;
    auto Ia = sieve_coefficients(A, C, hi + h);
    auto Ib = sieve_coefficients(B, D, hi + h);
    cplx mean{};
    for (std::uint32_t m = lo; m <= hi; ++m) mean += Ia[m] * Ib[m + h];
    mean /= (double)(hi - lo + 1);
    cplx pred = correlation_predicted(A, C, B, D, 0.5 * (lo + hi), h, 2000);
    CHECK(std::abs(mean - pred) < 0.05 * std::abs(pred));
}

TEST_CASE("ratio average matches the swap-sum prediction") {
    ExperimentConfig cfg = singleton_config(400);
    cfg.panels_per_unit = 2;
    cplx lhs = ratios_lhs(cfg);
    std::vector<Component> comps;
    cplx rhs = ratios_rhs(cfg, 1, &comps);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].label == "no-swap");
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 0.02);
}

TEST_CASE("degenerate ratio average is T psi_hat(0) exactly") {
    ExperimentConfig cfg = singleton_config(200);
    cfg.C = ShiftSet(cfg.A.elems, Role::C);
    cfg.D = ShiftSet(cfg.B.elems, Role::D);
    double want = cfg.T * cfg.psi->integral();
    cplx lhs = ratios_lhs(cfg);
    CHECK(std::abs(lhs - cplx(want, 0)) < 1e-8 * want);
}
