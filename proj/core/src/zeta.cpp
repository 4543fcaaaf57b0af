#include "zr/zeta.hpp"

#include <array>
#include <cmath>

#include "zr/errors.hpp"
#include "zr/quadrature.hpp"

namespace zr {

namespace {

// B_{2k} / (2k)! for k = 1..12
constexpr std::array<double, 12> kBernoulliFactorial = {
    1.0 / 6 / 2,                     // B2/2!
    -1.0 / 30 / 24,                  // B4/4!
    1.0 / 42 / 720,                  // B6/6!
    -1.0 / 30 / 40320,               // B8/8!
    5.0 / 66 / 3628800,              // B10/10!
    -691.0 / 2730 / 479001600,       // B12/12!
    7.0 / 6 / 87178291200.,          // B14/14!
    -3617.0 / 510 / 20922789888000., // B16/16!
    43867.0 / 798 / 6402373705728000.,
    -174611.0 / 330 / 2432902008176640000.,
    854513.0 / 138 / 1.1240007277776077e21,
    -236364091.0 / 2730 / 6.204484017332394e23,
};

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

cplx log_gamma_core(cplx z) {
    // Lanczos for Re z >= 0.5
    z -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t +
           std::log(x);
}

bool near_integer(double x, double tol = 1e-10) {
    return std::abs(x - std::round(x)) < tol;
}

}  // namespace

cplx log_sin(cplx z) {
    if (z.imag() >= 0.0) {
        // sin z = (i/2) e^{-iz} (1 - e^{2iz})
        return std::log(cplx(0.0, 0.5)) - cplx(0.0, 1.0) * z +
               std::log(1.0 - std::exp(cplx(0.0, 2.0) * z));
    }
    return std::log(cplx(0.0, -0.5)) + cplx(0.0, 1.0) * z +
           std::log(1.0 - std::exp(cplx(0.0, -2.0) * z));
}

cplx log_gamma(cplx z) {
    if (z.real() >= 0.5) return log_gamma_core(z);
    if (z.imag() == 0.0 && near_integer(z.real()) && z.real() <= 0.5)
        throw SingularityError("log_gamma: pole at nonpositive integer");
    // reflection: log Gamma(z) = log(pi) - log sin(pi z) - log Gamma(1-z)
    return std::log(M_PI) - log_sin(M_PI * z) - log_gamma_core(1.0 - z);
}

cplx ZetaEvaluator::zeta_with_cutoff(cplx s, std::size_t N) const {
    if (std::abs(s - 1.0) < 1e-12)
        throw PoleError("zeta: pole at s = 1");
    cplx sum{};
    for (std::size_t n = 1; n < N; ++n)
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double logN = std::log(static_cast<double>(N));
    const cplx NmS = std::exp(-s * logN);  // N^{-s}
    sum += NmS * static_cast<double>(N) / (s - 1.0);
    sum += 0.5 * NmS;
    // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    cplx rising = s;                       // s ... (s+2k-2)
    cplx Npow = NmS / static_cast<double>(N);  // N^{-s-2k+1} at k=1
    for (std::size_t k = 0; k < kBernoulliFactorial.size(); ++k) {
        if (k > 0) {
            rising *= (s + static_cast<double>(2 * k - 1)) *
                      (s + static_cast<double>(2 * k));
            Npow /= static_cast<double>(N) * static_cast<double>(N);
        }
        sum += kBernoulliFactorial[k] * rising * Npow;
    }
    return sum;
}

cplx ZetaEvaluator::zeta(cplx s) const {
    if (std::abs(s.imag()) > max_height_)
        throw RangeError("zeta: |Im s| exceeds supported height");
    const auto N = static_cast<std::size_t>(
        std::max(20.0, 2.0 * std::abs(s.imag()) + 2.0));
    return zeta_with_cutoff(s, N);
}

cplx ZetaEvaluator::chi(cplx s) const {
    if (s.imag() == 0.0 && near_integer(s.real())) {
        const double r = std::round(s.real());
        if (r >= 1.0)
            throw SingularityError("chi: gamma-factor pole at positive integer");
        if (r <= 0.0 && near_integer(r / 2.0))
            throw SingularityError("chi: sine zero at nonpositive even integer");
    }
    // exp of summed logarithms; each term may sit on its own branch, the
    // exponential of the sum is still the product
    const cplx lg = log_gamma(1.0 - s);
    const cplx ls = log_sin(0.5 * M_PI * s);
    return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(M_PI) + ls + lg);
}

std::pair<cplx, cplx> mellin_chi_check(const TestFunction& psi, cplx A) {
    if (!(A.real() > 0.0 && A.real() < 1.0))
        throw RangeError("mellin_chi_check: need 0 < Re A < 1");

    // lhs: substitute v = e^u; the integrand decays like e^{u Re A} on the
    // left and super-exponentially on the right, so the trapezoid rule in u
    // converges geometrically
    const double re_a = A.real();
    const double u_min =
        std::min(-30.0, std::log(1e-13 * re_a) / re_a);
    const double u_max = std::log(psi.y_cutoff());
    const double h = 0.02;
    const auto steps = static_cast<std::size_t>((u_max - u_min) / h) + 1;
    cplx lhs{};
    for (std::size_t i = 0; i <= steps; ++i) {
        const double u = u_min + h * static_cast<double>(i);
        const double v = std::exp(u);
        const cplx even = psi.fourier(v) + psi.fourier(-v);
        const double trap = (i == 0 || i == steps) ? 0.5 : 1.0;
        lhs += trap * even * std::exp(u * A);
    }
    lhs *= h;

    // rhs: chi(1-A) times a direct Gauss-Legendre integral over the support
    ZetaEvaluator zeta_eval;
    GaussLegendre gl(256);
    const cplx tail = gl.integrate(psi.support_lo(), psi.support_hi(),
                                   [&](double t) -> cplx {
                                       return psi(t) * std::exp(-A * std::log(t));
                                   });
    return {lhs, zeta_eval.chi(1.0 - A) * tail};
}

}  // namespace zr
