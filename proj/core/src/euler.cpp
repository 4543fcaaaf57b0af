#include "zr/euler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "zr/errors.hpp"
#include "zr/zeta.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zr {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<bool> comp(std::size_t{limit} + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            primes.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i)
                comp[j] = true;
        }
    }
    return primes;
}

namespace {

cplx pow_real(double base, cplx expo) { return std::exp(expo * std::log(base)); }

// ---------------------------------------------------------------------------
// Symbolic shift-sum algebra for the prefactor.
//
// A TermMap represents a finite sum  sum_k  coeff_k * p^{-sigma_k}  with the
// shift sums sigma_k as keys (independent of p).  A SymSeries is a power
// series in x = p^{-s} whose coefficients are TermMaps.
// ---------------------------------------------------------------------------

struct SigmaKey {
    long long re, im;
    bool operator<(const SigmaKey& o) const {
        return re != o.re ? re < o.re : im < o.im;
    }
};

SigmaKey key_of(cplx sigma) {
    return {llround(sigma.real() * 1e9), llround(sigma.imag() * 1e9)};
}

struct Term {
    cplx sigma;
    double coeff;
};

using TermMap = std::map<SigmaKey, Term>;

void add_term(TermMap& m, cplx sigma, double coeff) {
    if (coeff == 0.0) return;
    auto [it, inserted] = m.emplace(key_of(sigma), Term{sigma, coeff});
    if (!inserted) {
        it->second.coeff += coeff;
        if (std::abs(it->second.coeff) < 1e-14) m.erase(it);
    }
}

TermMap product(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ka, ta] : a)
        for (const auto& [kb, tb] : b)
            add_term(out, ta.sigma + tb.sigma, ta.coeff * tb.coeff);
    return out;
}

using SymSeries = std::vector<TermMap>;  // index = power of x

// Coefficients I_{A,C}(p^j) as term maps, j = 0..jmax.
SymSeries symbolic_local_coeffs(const ShiftSet& A, const ShiftSet& C,
                                std::size_t jmax) {
    SymSeries c(jmax + 1);
    add_term(c[0], cplx{}, 1.0);
    for (cplx gamma : C.elems) {
        for (std::size_t j = jmax; j >= 1; --j) {
            for (const auto& [k, t] : c[j - 1])
                add_term(c[j], t.sigma + gamma, -t.coeff);
        }
    }
    for (cplx alpha : A.elems) {
        for (std::size_t j = 1; j <= jmax; ++j) {
            for (const auto& [k, t] : c[j - 1])
                add_term(c[j], t.sigma + alpha, t.coeff);
        }
    }
    return c;
}

// log(1 + sum_{j>=1} c_j x^j) truncated at x^order.
SymSeries log_series(const SymSeries& c, std::size_t order) {
    SymSeries log_acc(order + 1);
    SymSeries upow(order + 1);  // u^m accumulator, u = sum_{j>=1} c_j x^j
    for (std::size_t j = 1; j <= order && j < c.size(); ++j) upow[j] = c[j];
    double sign = 1.0;
    SymSeries cur = upow;
    for (std::size_t m = 1; m <= order; ++m) {
        for (std::size_t j = m; j <= order; ++j)
            for (const auto& [k, t] : cur[j])
                add_term(log_acc[j], t.sigma, sign * t.coeff / static_cast<double>(m));
        // cur <- cur * u
        if (m < order) {
            SymSeries next(order + 1);
            for (std::size_t j1 = m; j1 <= order; ++j1)
                for (std::size_t j2 = 1; j1 + j2 <= order && j2 < c.size(); ++j2)
                    for (const auto& [k1, t1] : cur[j1])
                        for (const auto& [k2, t2] : c[j2])
                            add_term(next[j1 + j2], t1.sigma + t2.sigma,
                                     t1.coeff * t2.coeff);
            cur = std::move(next);
        }
        sign = -sign;
    }
    return log_acc;
}

// Prefactor exponents lambda_k[sigma] such that
//   log L_p(s) = sum_{k<=order} sum_sigma lambda_k[sigma] log-zeta-local
//                + O(p^{-(order+1) Re s + eps});
// residual_next receives the order+1 coefficient map (tail estimation).
std::vector<TermMap> extract_prefactor(const ShiftSet& A, const ShiftSet& B,
                                       const ShiftSet& C, const ShiftSet& D,
                                       std::size_t order, TermMap& residual_next) {
    const SymSeries ac = symbolic_local_coeffs(A, C, order + 1);
    const SymSeries bd = symbolic_local_coeffs(B, D, order + 1);
    SymSeries prod(order + 2);
    for (std::size_t j = 0; j <= order + 1; ++j) prod[j] = product(ac[j], bd[j]);
    SymSeries rem = log_series(prod, order + 1);

    std::vector<TermMap> lambda(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        lambda[k] = rem[k];
        // subtract log zeta(ks + sigma) expansions: p^{-m(ks+sigma)}/m
        for (std::size_t m = 1; m * k <= order + 1; ++m) {
            for (const auto& [key, t] : lambda[k])
                add_term(rem[m * k], static_cast<double>(m) * t.sigma,
                         -t.coeff / static_cast<double>(m));
        }
    }
    residual_next = rem[order + 1];
    return lambda;
}

cplx ipow(cplx z, long long n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cplx r = 1.0;
    while (n > 0) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

bool is_integral(double x) { return std::abs(x - std::round(x)) < 1e-9; }

// Estimated sum over primes > P of p^{-a}, a > 1.
double prime_tail(double a, double P) {
    if (a <= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(P, 1.0 - a) / ((a - 1.0) * std::log(P));
}

cplx truncated_local_sum(const LocalSeries& loc_a, const LocalSeries& loc_b,
                         cplx x, std::size_t jmax) {
    // sum_j a_j b_j x^j with relative stopping
    cplx sum{};
    cplx xp = 1.0;
    int quiet = 0;
    for (std::size_t j = 0; j <= jmax; ++j) {
        const cplx term = loc_a.at(j) * loc_b.at(j) * xp;
        sum += term;
        xp *= x;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw AccuracyError("local series did not converge within the term cap");
}

}  // namespace

cplx local_factor(const ShiftSet& A, const ShiftSet& B, const ShiftSet& C,
                  const ShiftSet& D, std::uint64_t p, cplx s, std::size_t jmax) {
    const LocalSeries la = local_series(A, C, p, jmax);
    const LocalSeries lb = local_series(B, D, p, jmax);
    const cplx x = pow_real(static_cast<double>(p), -s);
    if (std::abs(x) >= 1.0)
        throw AccuracyError("local_factor: |p^{-s}| >= 1");
    return truncated_local_sum(la, lb, x, jmax);
}

BValue B_value(const ShiftSet& A, const ShiftSet& B, const ShiftSet& C,
               const ShiftSet& D, cplx s, std::uint32_t prime_cutoff,
               int order) {
    if (order < 1) throw std::invalid_argument("B_value: order >= 1");
    if (prime_cutoff < 100)
        throw std::invalid_argument("B_value: prime cutoff >= 100 required");

    TermMap residual;
    const std::vector<TermMap> lambda = extract_prefactor(
        A, B, C, D, static_cast<std::size_t>(order), residual);

    ZetaEvaluator zeta_eval;
    cplx prefactor = 1.0;
    for (std::size_t k = 1; k < lambda.size(); ++k) {
        for (const auto& [key, t] : lambda[k]) {
            const cplx arg = static_cast<double>(k) * s + t.sigma;
            if (std::abs(arg - 1.0) < 1e-8)
                throw PoleError("B_value: zeta factor at its pole, shift sum (" +
                                std::to_string(t.sigma.real()) + "," +
                                std::to_string(t.sigma.imag()) + ")");
            const cplx zv = zeta_eval.zeta(arg);
            if (k == 1 && is_integral(t.coeff)) {
                prefactor *= ipow(zv, llround(t.coeff));
            } else {
                prefactor *= std::exp(t.coeff * std::log(zv));
            }
        }
    }

    const std::vector<std::uint32_t> primes = primes_up_to(prime_cutoff);
    std::vector<cplx> corrected(primes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(primes.size());
         ++i) {
        const double p = primes[static_cast<std::size_t>(i)];
        cplx f = local_factor(A, B, C, D, primes[static_cast<std::size_t>(i)], s);
        for (std::size_t k = 1; k < lambda.size(); ++k) {
            for (const auto& [key, t] : lambda[k]) {
                const cplx euler1 =
                    1.0 - pow_real(p, -(static_cast<double>(k) * s + t.sigma));
                if (k == 1 && is_integral(t.coeff)) {
                    f *= ipow(euler1, llround(t.coeff));
                } else {
                    f *= std::exp(t.coeff * std::log(euler1));
                }
            }
        }
        corrected[static_cast<std::size_t>(i)] = f;
    }

    BValue out;
    out.value = prefactor;
    for (const cplx& f : corrected) out.value *= f;  // fixed order

    const double next_order = static_cast<double>(order) + 1.0;
    double tail = 0.0;
    for (const auto& [key, t] : residual)
        tail += std::abs(t.coeff) *
                prime_tail(next_order * s.real() + t.sigma.real(),
                           static_cast<double>(prime_cutoff));
    out.tail_bound = 3.0 * tail;  // safety margin over the leading estimate
    return out;
}

cplx E_factor(const ShiftSet& A, const ShiftSet& C, cplx w, std::uint32_t r,
              std::size_t jmax) {
    if (r < 1) throw std::invalid_argument("E_factor: r >= 1 required");
    cplx prod = 1.0;
    std::uint32_t m = r;
    for (std::uint32_t p = 2; std::uint64_t{p} * p <= m || m > 1;
         p = (p == 2 ? 3 : p + 2)) {
        if (m == 1) break;
        std::uint32_t pp = p;
        if (std::uint64_t{p} * p > m) pp = m;  // remaining prime
        if (m % pp != 0) continue;
        std::size_t lam = 0;
        while (m % pp == 0) {
            m /= pp;
            ++lam;
        }
        const LocalSeries loc = local_series(A, C, pp, jmax + lam);
        const cplx x = pow_real(static_cast<double>(pp), -w);
        cplx num{}, den{};
        cplx xp = 1.0;
        int quiet = 0;
        for (std::size_t j = 0; j <= jmax; ++j) {
            const cplx tn = loc.at(j + lam) * xp;
            const cplx td = loc.at(j) * xp;
            num += tn;
            den += td;
            xp *= x;
            const double scale = std::abs(den) + std::abs(num);
            if (std::abs(tn) + std::abs(td) < 1e-16 * scale) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
        if (std::abs(den) < 1e-250)
            throw SingularityError("E_factor: vanishing denominator series");
        prod *= num / den;
    }
    return prod;
}

cplx script_E(const ShiftSet& A, const ShiftSet& C, cplx alpha_hat,
              std::uint32_t q, std::size_t jmax) {
    if (q < 1) throw std::invalid_argument("script_E: q >= 1 required");
    auto it = std::find(A.elems.begin(), A.elems.end(), alpha_hat);
    if (it == A.elems.end())
        throw std::invalid_argument("script_E: alpha_hat must belong to A");
    ShiftSet Aprime = A;
    Aprime.elems.erase(Aprime.elems.begin() + (it - A.elems.begin()));

    const cplx w = 1.0 - alpha_hat;
    cplx prod = 1.0;
    std::uint32_t m = q;
    for (std::uint32_t p = 2; m > 1; p = (p == 2 ? 3 : p + 2)) {
        std::uint32_t pp = p;
        if (std::uint64_t{p} * p > m) pp = m;
        if (m % pp != 0) continue;
        std::size_t bigJ = 0;
        while (m % pp == 0) {
            m /= pp;
            ++bigJ;
        }
        const double pd = pp;
        cplx factor = 1.0;
        for (cplx a : Aprime.elems) factor *= 1.0 - pow_real(pd, -(w + a));
        for (cplx c : C.elems) factor /= 1.0 - pow_real(pd, -(w + c));

        const LocalSeries loc = local_series(Aprime, C, pp, jmax + bigJ);
        const cplx x = pow_real(pd, -w);
        cplx sum{};
        cplx xp = 1.0;
        int quiet = 0;
        for (std::size_t j = 0; j <= jmax; ++j) {
            const cplx term = loc.at(j + bigJ) * xp;
            sum += term;
            xp *= x;
            if (std::abs(term) < 1e-16 * std::abs(sum)) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
        prod *= factor * sum;
    }
    return prod;
}

}  // namespace zr
