#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zr/shift_set.hpp"
#include "zr/test_function.hpp"

namespace zr {

/// Parameters of one moment/ratios experiment.  X = floor(T^lambda) unless
/// overridden; the weight psi is shared read-only across runs.
struct ExperimentConfig {
    ShiftSet A, B, C, D;
    double T = 1000.0;
    double lambda = 1.1;
    const TestFunction* psi = nullptr;
    std::uint32_t x_override = 0;      // 0: derive from T^lambda
    std::size_t panels_per_unit = 1;   // t-quadrature density for ratios_lhs
    std::uint32_t prime_cutoff = 10000;
    std::uint32_t swap_qmax = 1000;    // modulus cutoff in the swap components

    std::uint32_t X() const;
};

/// One labelled additive piece of a prediction (diagonal, per-swap term).
struct Component {
    std::string label;
    cplx value;
};

struct ComparisonReport {
    cplx empirical{};
    cplx predicted{};
    std::vector<Component> components;
    double abs_err = 0.0;
    double rel_err = 0.0;
};

/// Weighted average of the zeta-ratio along the critical line:
///   int psi(t/T) prod_A zeta(s+a) prod_B zeta(1-s+b)
///            / [prod_C zeta(s+c) prod_D zeta(1-s+d)] dt,  s = 1/2 + it,
/// by composite Gauss-Legendre over [c1 T, c2 T].  Throws SingularityError
/// if a denominator factor dips below 1e-6 on the grid.
cplx ratios_lhs(const ExperimentConfig& cfg);

/// Predicted value: sum over swap pairs |U| = |V| <= max_swap of
///   B_{A-U+V^-, B-V+U^-, C, D}(1) * int psi(t/T) (t/2pi)^{-sum U - sum V} dt.
/// When `components` is non-null every swap term is also reported there.
cplx ratios_rhs(const ExperimentConfig& cfg, std::size_t max_swap,
                std::vector<Component>* components = nullptr);

/// Truncated pair sum
///   T sum_{m,n <= X} I_{A,C}(m) I_{B,D}(n) (mn)^{-1/2} psi_hat((T/2pi) log(m/n)),
/// restricted to the band where the cached psi_hat is nonzero.
cplx truncated_lhs(const ExperimentConfig& cfg);

/// Prediction for the pair sum: diagonal T psi_hat(0) sum_{m<=X} I I / m plus
/// off-diagonal components, one per (ahat, bhat) in A x B.  Each component
/// replaces the coefficient correlation in the pair sum by its delta-method
/// value,
///   <I_{A,C}(m) I_{B,D}(m+h)> ~ sum_q r_q(h) P_{A,C}(q,m) P_{B,D}(q,m),
/// split over the residue pairs of P_{A,C} P_{B,D}:
///   T sum_{m<=X} sum_{h>=1} m^{-ahat-bhat} G(h)
///       (psi_hat(y) + psi_hat(-y)) / sqrt(m(m+h)),  y = (T/2pi) log(1+h/m),
/// with G(h) = sum_{q<=swap_qmax} r_q(h) f_ahat(q) f_bhat(q) built from the
/// per-residue factors of predicted_mean.  Closing the q-sum analytically
/// instead (the one-swap B-value form) diverges from the finite-T pair sum
/// by an amount of the same order as the off-diagonal itself, so the sum is
/// kept in delta-method form.  Components are reported separately; empirical
/// and the error fields are left for the caller to fill.
ComparisonReport truncated_rhs(const ExperimentConfig& cfg);

/// Exact shifted correlation sum_{n <= X} I_{A,C}(n) I_{B,D}(n+h), h >= 1.
cplx correlation_empirical(const ShiftSet& A, const ShiftSet& C,
                           const ShiftSet& B, const ShiftSet& D,
                           std::uint32_t X, std::uint32_t h);

struct ExpSumAverage {
    cplx empirical{};
    cplx predicted{};
};

/// Windowed mean of I_{A,C}(m) e(m/q) over m in [u, u(1+width)] against the
/// residue prediction
///   sum_{ahat in A} u^{-ahat} q^{ahat-1} E_{A,C}(1-ahat, q)
///     prod_{a in A'} zeta(1-ahat+a) / prod_{c in C} zeta(1-ahat+c).
ExpSumAverage exp_sum_average(const ShiftSet& A, const ShiftSet& C,
                              std::uint32_t q, double u, double width);

/// The predicted factor of exp_sum_average alone.
cplx predicted_mean(const ShiftSet& A, const ShiftSet& C, std::uint32_t q,
                    double u);

/// Delta-method prediction for the shifted correlation at scale u:
///   sum_{q <= q_max} r_q(h) predicted_mean_{A,C}(q,u) predicted_mean_{B,D}(q,u).
cplx correlation_predicted(const ShiftSet& A, const ShiftSet& C,
                           const ShiftSet& B, const ShiftSet& D, double u,
                           std::uint32_t h, std::uint32_t q_max);

}  // namespace zr
