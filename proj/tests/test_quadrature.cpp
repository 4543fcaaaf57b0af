#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zr/quadrature.hpp"

using namespace zr;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
    GaussLegendre gl(4);
    // degree 7 on [0, 1]: integral of x^7 = 1/8
    double v = gl.integrate(0.0, 1.0, [](double x) { return std::pow(x, 7); });
    CHECK(v == doctest::Approx(0.125).epsilon(1e-13));
    double w = gl.integrate(-2.0, 3.0, [](double x) {
        return 5 * x * x * x - x + 2;
    });
    CHECK(w == doctest::Approx(5 * (81 - 16) / 4.0 - (9 - 4) / 2.0 + 10)
                   .epsilon(1e-13));
}

TEST_CASE("weights sum to the interval length") {
    GaussLegendre gl(8);
    double s = 0;
    for (double w : gl.weights) s += w;
    CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("composite rule converges on an oscillatory integrand") {
    constexpr double pi = std::numbers::pi;
    // int_0^2pi e^{i 5 t} cos t dt = 0 precisely; with cos 5t kernel: pi
    cplx v = composite_gl(0.0, 2 * pi, 64, 8, [](double t) {
        return cplx{std::cos(5 * t) * std::cos(5 * t), std::sin(t)};
    });
    CHECK(std::abs(v.real() - pi) < 1e-12);
    CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("composite result independent of the panel count refinement") {
    auto f = [](double t) { return cplx{std::exp(-t) * std::sin(3 * t), 0}; };
    cplx a = composite_gl(0.0, 4.0, 16, 8, f);
    cplx b = composite_gl(0.0, 4.0, 64, 8, f);
    CHECK(std::abs(a - b) < 1e-12);
}
