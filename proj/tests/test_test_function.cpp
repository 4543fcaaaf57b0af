#include <doctest.h>

#include <cmath>

#include "zr/test_function.hpp"

using namespace zr;

TEST_CASE("psi is a unit-peak bump supported on (c1, c2)") {
    TestFunction psi;
    CHECK(psi(0.99) == 0.0);
    CHECK(psi(2.01) == 0.0);
    CHECK(psi(1.5) == doctest::Approx(1.0));
    CHECK(psi(1.2) > 0.0);
    CHECK(psi(1.2) < 1.0);
    CHECK(psi(1.3) == psi(1.7));  // symmetric about the midpoint
}

TEST_CASE("integral equals psi_hat(0)") {
    TestFunction psi;
    CHECK(psi.integral() == doctest::Approx(psi.fourier(0.0).real()));
    CHECK(psi.fourier(0.0).imag() == doctest::Approx(0.0));
    CHECK(psi.integral() > 0.3);
    CHECK(psi.integral() < 1.0);
}

TEST_CASE("cached transform matches direct quadrature") {
    TestFunction psi;
    for (double y : {0.0, 0.37, 1.0, 5.5, 12.25, 30.01, 50.0}) {
        cplx c = psi.fourier(y);
        cplx e = psi.fourier_exact(y);
        CHECK(std::abs(c - e) < 1e-7);
    }
}

TEST_CASE("transform conjugate symmetry for real psi") {
    TestFunction psi;
    cplx plus = psi.fourier(3.7), minus = psi.fourier(-3.7);
    CHECK(std::abs(plus - std::conj(minus)) < 1e-12);
}

TEST_CASE("tail beyond the cutoff is treated as zero") {
    TestFunction psi;
    double yc = psi.y_cutoff();
    CHECK(yc > 10.0);
    CHECK(psi.fourier(yc + 1.0) == cplx{});
    CHECK(std::abs(psi.fourier_exact(yc + 1.0)) < 1e-10 * psi.integral());
}

TEST_CASE("custom support window") {
    TestFunction psi(2.0, 5.0);
    CHECK(psi.support_lo() == 2.0);
    CHECK(psi.support_hi() == 5.0);
    CHECK(psi(3.5) == doctest::Approx(1.0));
    CHECK(psi(1.9) == 0.0);
    CHECK(std::abs(psi.fourier(0.5) - psi.fourier_exact(0.5)) < 1e-9);
}
