#pragma once

#include <functional>
#include <vector>

#include "zr/shift_set.hpp"

namespace zr {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(std::size_t n);

    /// Integrates f over [a, b].
    template <class F>
    auto integrate(double a, double b, F&& f) const {
        using R = decltype(f(a));
        R sum{};
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (std::size_t i = 0; i < nodes.size(); ++i)
            sum += weights[i] * f(mid + half * nodes[i]);
        return half * sum;
    }
};

/// Composite Gauss-Legendre over [a, b] split into `panels` equal panels.
/// Panel partials are accumulated in panel order so the result is
/// independent of any parallel execution of the panel evaluations.
cplx composite_gl(double a, double b, std::size_t panels, std::size_t nodes,
                  const std::function<cplx(double)>& f);

}  // namespace zr
