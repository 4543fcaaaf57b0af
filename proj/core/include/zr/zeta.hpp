#pragma once

#include <utility>

#include "zr/shift_set.hpp"
#include "zr/test_function.hpp"

namespace zr {

/// log Gamma(z), principal-branch Lanczos approximation with reflection for
/// Re z < 1/2.  Accurate to ~1e-13 relative away from the poles.
cplx log_gamma(cplx z);

/// Stable log sin(z) for large |Im z| (any branch; intended for exp-of-sum use).
cplx log_sin(cplx z);

/// Riemann zeta and the functional-equation factor chi, evaluated by
/// Euler-Maclaurin summation.  Stateless apart from accuracy knobs.
class ZetaEvaluator {
  public:
    explicit ZetaEvaluator(double target_abs_error = 1e-10,
                           double max_height = 1e4)
        : target_abs_error_(target_abs_error), max_height_(max_height) {}

    /// zeta(s) via Euler-Maclaurin with N ~ max(20, 2|Im s|) terms and
    /// Bernoulli corrections through B_24.
    /// Throws PoleError at s = 1, RangeError above max_height.
    cplx zeta(cplx s) const;

    /// Same rule with an explicit cutoff N (tail-independence testing).
    cplx zeta_with_cutoff(cplx s, std::size_t N) const;

    /// chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s).
    /// Throws SingularityError near the integer points where the sine and
    /// gamma factors degenerate.
    cplx chi(cplx s) const;

    double max_height() const { return max_height_; }

  private:
    double target_abs_error_;
    double max_height_;
};

/// Two-sided Mellin check of the chi identity
///   int_0^inf (psi_hat(v) + psi_hat(-v)) v^A dv/v = chi(1-A) int psi(t) t^-A dt
/// for 0 < Re A < 1.  Returns (lhs, rhs), each by an independent quadrature.
/// The left side combines +-v, which for real psi is the even (cosine)
/// part of the transform -- the form in which the identity is exact.
std::pair<cplx, cplx> mellin_chi_check(const TestFunction& psi, cplx A);

}  // namespace zr
