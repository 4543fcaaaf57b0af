#include "zr/averages.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zr/errors.hpp"
#include "zr/euler.hpp"
#include "zr/quadrature.hpp"
#include "zr/sieve.hpp"
#include "zr/zeta.hpp"

namespace zr {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

const TestFunction& weight(const ExperimentConfig& cfg) {
    if (!cfg.psi) throw std::invalid_argument("ExperimentConfig: psi not set");
    return *cfg.psi;
}

cplx power(double base, cplx expo) {
    return std::exp(expo * std::log(base));
}

}  // namespace

std::uint32_t ExperimentConfig::X() const {
    if (x_override) return x_override;
    const double x = std::floor(std::pow(T, lambda));
    if (x < 1.0 || x > 4e9)
        throw RangeError("ExperimentConfig: T^lambda outside sieve range");
    return static_cast<std::uint32_t>(x);
}

cplx ratios_lhs(const ExperimentConfig& cfg) {
    const TestFunction& psi = weight(cfg);
    const double T = cfg.T;
    const double a = psi.support_lo() * T, b = psi.support_hi() * T;
    const ZetaEvaluator zeta_eval(1e-10, std::max(1e4, 2.0 * b));

    std::atomic<bool> bad{false};
    std::atomic<double> bad_t{0.0};
    auto integrand = [&](double t) -> cplx {
        const cplx s(0.5, t);
        const cplx sbar(0.5, -t);
        cplx num = 1.0, den = 1.0;
        for (cplx al : cfg.A.elems) num *= zeta_eval.zeta(s + al);
        for (cplx be : cfg.B.elems) num *= zeta_eval.zeta(sbar + be);
        for (cplx ga : cfg.C.elems) den *= zeta_eval.zeta(s + ga);
        for (cplx de : cfg.D.elems) den *= zeta_eval.zeta(sbar + de);
        if (std::abs(den) < 1e-6) {
            if (!bad.exchange(true)) bad_t.store(t);
            return cplx{};
        }
        return psi(t / T) * num / den;
    };

    const auto panels = static_cast<std::size_t>(
        std::ceil((b - a) * static_cast<double>(std::max<std::size_t>(
                                cfg.panels_per_unit, 1))));
    const cplx value = composite_gl(a, b, panels, 8, integrand);
    if (bad.load())
        throw SingularityError("ratios_lhs: denominator below 1e-6 near t = " +
                               std::to_string(bad_t.load()));
    return value;
}

cplx ratios_rhs(const ExperimentConfig& cfg, std::size_t max_swap,
                std::vector<Component>* components) {
    const TestFunction& psi = weight(cfg);
    const double T = cfg.T;
    const double a = psi.support_lo() * T, b = psi.support_hi() * T;

    cplx total{};
    for (const SwapSelection& sel : enumerate_swaps(cfg.A, cfg.B, max_swap)) {
        const auto [As, Bs] = swap_sets(cfg.A, cfg.B, sel);
        const BValue bv = B_value(As, Bs, cfg.C, cfg.D, cplx{1.0},
                                  cfg.prime_cutoff);
        cplx expo{};
        for (std::size_t i : sel.u_idx) expo += cfg.A.elems[i];
        for (std::size_t j : sel.v_idx) expo += cfg.B.elems[j];
        const cplx integral =
            composite_gl(a, b, 64, 8, [&](double t) -> cplx {
                return psi(t / T) * power(t / kTwoPi, -expo);
            });
        const cplx term = bv.value * integral;
        total += term;
        if (components) {
            std::string label = "swap";
            for (std::size_t i : sel.u_idx) label += " u" + std::to_string(i);
            for (std::size_t j : sel.v_idx) label += " v" + std::to_string(j);
            if (sel.u_idx.empty()) label = "no-swap";
            components->push_back({label, term});
        }
    }
    return total;
}

cplx truncated_lhs(const ExperimentConfig& cfg) {
    const TestFunction& psi = weight(cfg);
    const double T = cfg.T;
    const std::uint32_t X = cfg.X();
    const CoefficientTable Ia = sieve_coefficients(cfg.A, cfg.C, X);
    const CoefficientTable Ib = sieve_coefficients(cfg.B, cfg.D, X);

    // psi_hat vanishes beyond its cutoff, so only pairs with
    // |log(m/n)| <= 2 pi ycut / T contribute.
    const double W = kTwoPi * psi.y_cutoff() / T;
    std::vector<double> logn(X + 1);
    std::vector<cplx> wa(X + 1), wb(X + 1);
    for (std::uint32_t n = 1; n <= X; ++n) {
        logn[n] = std::log(static_cast<double>(n));
        const double rs = 1.0 / std::sqrt(static_cast<double>(n));
        wa[n] = Ia[n] * rs;
        wb[n] = Ib[n] * rs;
    }

    constexpr std::uint32_t kBlock = 256;
    const std::uint32_t blocks = (X + kBlock - 1) / kBlock;
    std::vector<cplx> partial(blocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t bi = 0; bi < static_cast<std::ptrdiff_t>(blocks); ++bi) {
        cplx acc{};
        const std::uint32_t m_lo = static_cast<std::uint32_t>(bi) * kBlock + 1;
        const std::uint32_t m_hi = std::min(X, m_lo + kBlock - 1);
        for (std::uint32_t m = m_lo; m <= m_hi; ++m) {
            if (wa[m] == cplx{}) continue;
            const auto n_lo = static_cast<std::uint32_t>(
                std::max(1.0, std::ceil(static_cast<double>(m) * std::exp(-W))));
            const auto n_hi = static_cast<std::uint32_t>(std::min(
                static_cast<double>(X),
                std::floor(static_cast<double>(m) * std::exp(W))));
            cplx row{};
            for (std::uint32_t n = n_lo; n <= n_hi; ++n) {
                if (wb[n] == cplx{}) continue;
                row += wb[n] * psi.fourier(T / kTwoPi * (logn[m] - logn[n]));
            }
            acc += wa[m] * row;
        }
        partial[bi] = acc;
    }
    cplx sum{};
    for (const cplx& v : partial) sum += v;
    return T * sum;
}

namespace {

/// The ahat-residue factor of predicted_mean, without the u-power:
/// q^{ahat-1} E_{A,C}(1-ahat, q) prod_{a in A'} zeta(1-ahat+a)
///                              / prod_{c in C} zeta(1-ahat+c).
/// Vanishes identically when some c in C equals ahat (the zeta denominator
/// sits at its pole), which is what collapses the degenerate case A = C.
cplx residue_factor(const ShiftSet& A, const ShiftSet& C, std::size_t idx,
                    std::uint32_t q, const ZetaEvaluator& zeta_eval) {
    const cplx ahat = A.elems[idx];
    for (cplx ga : C.elems)
        if (std::abs(ga - ahat) < 1e-12) return cplx{};
    cplx f = power(static_cast<double>(q), ahat - 1.0) * script_E(A, C, ahat, q);
    for (std::size_t k = 0; k < A.size(); ++k)
        if (k != idx) f *= zeta_eval.zeta(1.0 - ahat + A.elems[k]);
    for (cplx ga : C.elems) f /= zeta_eval.zeta(1.0 - ahat + ga);
    return f;
}

}  // namespace

ComparisonReport truncated_rhs(const ExperimentConfig& cfg) {
    const TestFunction& psi = weight(cfg);
    const double T = cfg.T;
    const std::uint32_t X = cfg.X();

    ComparisonReport report;

    const CoefficientTable Ia = sieve_coefficients(cfg.A, cfg.C, X);
    const CoefficientTable Ib = sieve_coefficients(cfg.B, cfg.D, X);
    cplx diag{};
    for (std::uint32_t m = 1; m <= X; ++m)
        diag += Ia[m] * Ib[m] / static_cast<double>(m);
    diag *= T * psi.integral();
    report.components.push_back({"diagonal", diag});

    // band of surviving offsets: psi_hat vanishes beyond its cutoff
    const double W = kTwoPi * psi.y_cutoff() / T;
    const auto h_max = static_cast<std::uint32_t>(std::min<double>(
        X >= 1 ? X - 1 : 0, std::floor(static_cast<double>(X) * std::expm1(W))));

    const ZetaEvaluator zeta_eval;
    for (std::size_t i = 0; i < cfg.A.size(); ++i) {
        for (std::size_t j = 0; j < cfg.B.size(); ++j) {
            const cplx expo = cfg.A.elems[i] + cfg.B.elems[j];
            std::vector<cplx> G(h_max + 1);
            for (std::uint32_t q = 1; q <= cfg.swap_qmax; ++q) {
                const cplx fq =
                    residue_factor(cfg.A, cfg.C, i, q, zeta_eval) *
                    residue_factor(cfg.B, cfg.D, j, q, zeta_eval);
                if (fq == cplx{}) continue;
                for (std::uint32_t h = 1; h <= h_max; ++h) {
                    const auto r = static_cast<double>(ramanujan_sum(q, h));
                    if (r != 0.0) G[h] += r * fq;
                }
            }

            constexpr std::uint32_t kBlock = 256;
            const std::uint32_t blocks = (X + kBlock - 1) / kBlock;
            std::vector<cplx> partial(blocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (std::ptrdiff_t bi = 0; bi < static_cast<std::ptrdiff_t>(blocks);
                 ++bi) {
                cplx acc{};
                const std::uint32_t m_lo =
                    static_cast<std::uint32_t>(bi) * kBlock + 1;
                const std::uint32_t m_hi = std::min(X, m_lo + kBlock - 1);
                for (std::uint32_t m = m_lo; m <= m_hi; ++m) {
                    const auto band = static_cast<std::uint32_t>(std::min<double>(
                        X - m, static_cast<double>(m) * std::expm1(W)));
                    if (band == 0) continue;
                    const double dm = static_cast<double>(m);
                    cplx row{};
                    for (std::uint32_t h = 1; h <= band; ++h) {
                        const double y =
                            T / kTwoPi * std::log1p(static_cast<double>(h) / dm);
                        row += G[h] * (2.0 * psi.fourier(y).real()) /
                               std::sqrt(dm * (dm + static_cast<double>(h)));
                    }
                    acc += power(dm, -expo) * row;
                }
                partial[bi] = acc;
            }
            cplx term{};
            for (const cplx& v : partial) term += v;
            term *= T;
            report.components.push_back(
                {"swap " + std::to_string(i) + "," + std::to_string(j), term});
        }
    }

    cplx total{};
    for (const Component& c : report.components) total += c.value;
    report.predicted = total;
    return report;
}

cplx correlation_empirical(const ShiftSet& A, const ShiftSet& C,
                           const ShiftSet& B, const ShiftSet& D,
                           std::uint32_t X, std::uint32_t h) {
    if (h == 0)
        throw std::invalid_argument("correlation_empirical: h >= 1 required");
    const CoefficientTable Ia = sieve_coefficients(A, C, X);
    const CoefficientTable Ib = sieve_coefficients(B, D, X + h);
    cplx sum{};
    for (std::uint32_t n = 1; n <= X; ++n) sum += Ia[n] * Ib[n + h];
    return sum;
}

cplx predicted_mean(const ShiftSet& A, const ShiftSet& C, std::uint32_t q,
                    double u) {
    const ZetaEvaluator zeta_eval;
    cplx sum{};
    for (std::size_t i = 0; i < A.size(); ++i)
        sum += power(u, -A.elems[i]) * residue_factor(A, C, i, q, zeta_eval);
    return sum;
}

ExpSumAverage exp_sum_average(const ShiftSet& A, const ShiftSet& C,
                              std::uint32_t q, double u, double width) {
    if (q == 0 || u < 1.0 || width <= 0.0)
        throw std::invalid_argument("exp_sum_average: bad window");
    const auto m_lo = static_cast<std::uint32_t>(std::ceil(u));
    const auto m_hi = static_cast<std::uint32_t>(std::floor(u * (1.0 + width)));
    if (m_hi <= m_lo)
        throw std::invalid_argument("exp_sum_average: empty window");

    const CoefficientTable I = sieve_coefficients(A, C, m_hi);
    std::vector<cplx> root(q);
    for (std::uint32_t r = 0; r < q; ++r)
        root[r] = std::exp(cplx(0.0, kTwoPi * static_cast<double>(r) /
                                         static_cast<double>(q)));

    ExpSumAverage out;
    cplx sum{};
    for (std::uint32_t m = m_lo; m <= m_hi; ++m) sum += I[m] * root[m % q];
    out.empirical = sum / static_cast<double>(m_hi - m_lo + 1);
    out.predicted = predicted_mean(A, C, q, u);
    return out;
}

cplx correlation_predicted(const ShiftSet& A, const ShiftSet& C,
                           const ShiftSet& B, const ShiftSet& D, double u,
                           std::uint32_t h, std::uint32_t q_max) {
    if (h == 0)
        throw std::invalid_argument("correlation_predicted: h >= 1 required");
    cplx sum{};
    for (std::uint32_t q = 1; q <= q_max; ++q) {
        const auto r = static_cast<double>(ramanujan_sum(q, h));
        if (r == 0.0) continue;
        sum += r * predicted_mean(A, C, q, u) * predicted_mean(B, D, q, u);
    }
    return sum;
}

}  // namespace zr
