#include "zr/quadrature.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zr {

GaussLegendre::GaussLegendre(std::size_t n) {
    nodes.resize(n);
    weights.resize(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration from the Chebyshev-angle initial guess
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

cplx composite_gl(double a, double b, std::size_t panels, std::size_t nodes,
                  const std::function<cplx(double)>& f) {
    const GaussLegendre gl(nodes);
    std::vector<cplx> partial(panels);
    const double h = (b - a) / static_cast<double>(panels);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(panels); ++i) {
        const double lo = a + h * static_cast<double>(i);
        partial[i] = gl.integrate(lo, lo + h, f);
    }
    cplx sum{};
    for (const cplx& v : partial) sum += v;  // fixed order: deterministic
    return sum;
}

}  // namespace zr
