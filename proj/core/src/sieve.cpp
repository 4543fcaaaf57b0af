#include "zr/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace zr {

FactorizationSieve::FactorizationSieve(std::uint32_t limit) : limit_(limit) {
    spf_.assign(std::size_t{limit} + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i) {
                if (spf_[j] == 0) spf_[j] = i;
            }
        }
    }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>>
FactorizationSieve::factor(std::uint32_t n) const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> f;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    return f;
}

int FactorizationSieve::moebius(std::uint32_t n) const {
    int sign = 1;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t FactorizationSieve::euler_phi(std::uint32_t n) const {
    std::uint64_t phi = n;
    for (auto [p, e] : factor(n)) {
        (void)e;
        phi -= phi / p;
    }
    return phi;
}

namespace {

// trial-division factorisation, used by the sieve-free entry points
std::vector<std::pair<std::uint32_t, std::uint32_t>> factor_td(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> f;
    for (std::uint32_t p = 2; std::uint64_t{p} * p <= n; ++p) {
        if (n % p == 0) {
            std::uint32_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

cplx cpow_real_base(double base, cplx expo) {
    // base^expo for base > 0
    return std::exp(expo * std::log(base));
}

}  // namespace

int moebius(std::uint32_t n) {
    int sign = 1;
    for (auto [p, e] : factor_td(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t euler_phi(std::uint32_t n) {
    std::uint64_t phi = n;
    for (auto [p, e] : factor_td(n)) {
        (void)e;
        phi -= phi / p;
    }
    return phi;
}

LocalSeries local_series(const ShiftSet& A, const ShiftSet& C, std::uint64_t p,
                         std::size_t jmax) {
    {
        bool prime = p >= 2;
        for (std::uint64_t d = 2; prime && d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) throw std::invalid_argument("local_series: p is not prime");
    }
    LocalSeries out;
    out.prime = p;
    std::vector<cplx>& c = out.coeffs;
    c.assign(jmax + 1, cplx{});
    c[0] = 1.0;
    const double logp = std::log(static_cast<double>(p));
    // denominator shifts contribute degree-1 factors (1 - p^{-gamma} x)
    for (cplx gamma : C.elems) {
        const cplx y = std::exp(-gamma * logp);
        for (std::size_t j = jmax; j >= 1; --j) c[j] -= y * c[j - 1];
    }
    // numerator shifts contribute geometric factors (1 - p^{-alpha} x)^{-1}
    for (cplx alpha : A.elems) {
        const cplx y = std::exp(-alpha * logp);
        for (std::size_t j = 1; j <= jmax; ++j) c[j] += y * c[j - 1];
    }
    return out;
}

CoefficientTable sieve_coefficients(const ShiftSet& A, const ShiftSet& C,
                                    std::uint32_t X, std::size_t max_bytes) {
    if (X < 1) throw std::invalid_argument("sieve_coefficients: X >= 1 required");
    const std::size_t bytes = (std::size_t{X} + 1) * sizeof(cplx);
    if (bytes > max_bytes)
        throw std::length_error("sieve_coefficients: table of " +
                                std::to_string(bytes) +
                                " bytes exceeds memory budget");
    CoefficientTable t;
    t.A = A;
    t.C = C;
    t.X = X;
    t.values.assign(std::size_t{X} + 1, cplx{});
    t.values[1] = 1.0;
    if (X == 1) return t;

    FactorizationSieve sieve(X);
    const std::size_t jmax =
        static_cast<std::size_t>(std::log2(static_cast<double>(X))) + 1;
    std::unordered_map<std::uint32_t, LocalSeries> locals;
    locals.reserve(1 << 12);

    for (std::uint32_t n = 2; n <= X; ++n) {
        const std::uint32_t p = sieve.spf(n);
        std::uint32_t m = n, e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        auto it = locals.find(p);
        if (it == locals.end())
            it = locals.emplace(p, local_series(A, C, p, jmax)).first;
        t.values[n] = t.values[m] * it->second.coeffs[e];
    }
    return t;
}

cplx brute_force_coefficient(const ShiftSet& A, const ShiftSet& C,
                             std::uint32_t n) {
    // Sum over ordered factorisations of n into one part per shift, the
    // numerator parts weighted d^{-alpha}, the denominator parts
    // mu(d) d^{-gamma}.  Enumeration runs over per-prime exponent splits.
    struct Part {
        cplx shift;
        bool denom;
    };
    std::vector<Part> parts;
    for (cplx a : A.elems) parts.push_back({a, false});
    for (cplx c : C.elems) parts.push_back({c, true});
    if (parts.empty()) return n == 1 ? cplx{1.0} : cplx{};

    const auto fac = factor_td(n);
    const std::size_t r = fac.size();

    // pw[s][i][e] = p_i^{-e * shift_s}
    std::vector<std::vector<std::vector<cplx>>> pw(parts.size());
    for (std::size_t s = 0; s < parts.size(); ++s) {
        pw[s].resize(r);
        for (std::size_t i = 0; i < r; ++i) {
            const cplx base = cpow_real_base(static_cast<double>(fac[i].first),
                                             -parts[s].shift);
            pw[s][i].resize(fac[i].second + 1);
            pw[s][i][0] = 1.0;
            for (std::uint32_t e = 1; e <= fac[i].second; ++e)
                pw[s][i][e] = pw[s][i][e - 1] * base;
        }
    }

    std::vector<std::uint32_t> rem(r);
    for (std::size_t i = 0; i < r; ++i) rem[i] = fac[i].second;

    std::function<cplx(std::size_t)> rec_part = [&](std::size_t idx) -> cplx {
        if (idx == parts.size()) {
            for (std::uint32_t e : rem)
                if (e != 0) return cplx{};
            return cplx{1.0};
        }
        cplx total{};
        std::function<void(std::size_t, cplx, int)> choose =
            [&](std::size_t i, cplx w, int musign) {
                if (i == r) {
                    const cplx wt =
                        parts[idx].denom ? w * static_cast<double>(musign) : w;
                    total += wt * rec_part(idx + 1);
                    return;
                }
                const std::uint32_t cap =
                    parts[idx].denom ? std::min<std::uint32_t>(1, rem[i])
                                     : rem[i];
                for (std::uint32_t f = 0; f <= cap; ++f) {
                    rem[i] -= f;
                    choose(i + 1, w * pw[idx][i][f], f ? -musign : musign);
                    rem[i] += f;
                }
            };
        choose(0, cplx{1.0}, 1);
        return total;
    };
    return rec_part(0);
}

std::int64_t ramanujan_sum(std::uint32_t q, std::uint32_t h) {
    if (q < 1 || h < 1)
        throw std::invalid_argument("ramanujan_sum: q, h >= 1 required");
    const std::uint32_t g = std::gcd(q, h);
    std::int64_t sum = 0;
    for (std::uint32_t d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        sum += std::int64_t{d} * moebius(q / d);
    }
    return sum;
}

cplx phi_product(cplx x, std::uint32_t q) {
    if (q < 1) throw std::invalid_argument("phi_product: q >= 1 required");
    cplx prod = 1.0;
    for (auto [p, e] : factor_td(q)) {
        (void)e;
        prod *= 1.0 - std::exp(-x * std::log(static_cast<double>(p)));
    }
    return prod;
}

}  // namespace zr
