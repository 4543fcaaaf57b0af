#include "zr/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "zr/errors.hpp"
#include "zr/euler.hpp"
#include "zr/sieve.hpp"
#include "zr/zeta.hpp"

namespace zr {

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r(std::max(order(), o.order()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order() + o.order(), std::size_t{1} << 20));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == cplx{}) continue;
        for (std::size_t j = 0; j < o.coeffs.size(); ++j)
            r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(cplx scalar) const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs) c *= scalar;
    return r;
}

cplx TruncatedSeries::eval(cplx x) const {
    cplx v{};
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

cplx SequencePair::a_tilde(std::size_t l) const {
    cplx sum{};
    const std::size_t top = std::min(l, a_prime.size() - 1);
    for (std::size_t J = 0; J <= top && J < a_prime.size(); ++J)
        sum += std::pow(Z, static_cast<double>(J) - static_cast<double>(l)) *
               a_prime[J];
    return sum;
}

cplx SequencePair::b_tilde(std::size_t l) const {
    cplx sum{};
    const std::size_t top = std::min(l, b_prime.size() - 1);
    for (std::size_t K = 0; K <= top && K < b_prime.size(); ++K)
        sum += std::pow(Y, static_cast<double>(K) - static_cast<double>(l)) *
               b_prime[K];
    return sum;
}

double check_theorem3(const SequencePair& pair, cplx X, int rhs_order) {
    if (pair.a_prime.empty() || pair.b_prime.empty())
        throw std::invalid_argument("check_theorem3: sequences must be nonempty");
    const std::size_t La = pair.a_prime.size(), Lb = pair.b_prime.size();
    const cplx invY = 1.0 / pair.Y, invZ = 1.0 / pair.Z;

    // Left side: finite, assembled as truncated-series products in X at an
    // order that loses nothing (polynomial times polynomial).
    auto shifted = [](const std::vector<cplx>& seq, std::size_t m, cplx inv) {
        TruncatedSeries s(seq.size() > m ? seq.size() - 1 - m : 0);
        cplx ip = 1.0;
        for (std::size_t j = 0; j + m < seq.size(); ++j) {
            s.coeffs[j] = seq[j + m] * ip;
            ip *= inv;
        }
        return s;
    };
    if (rhs_order >= 0) {
        // consistent truncation: both sides kept as series through X-order N
        const auto N = static_cast<std::size_t>(rhs_order);
        TruncatedSeries lhs_s(N), rhs_s(N);
        for (std::size_t l = 0; l <= 1; ++l) {
            const cplx front = (l == 0) ? cplx{1.0} : -invY * invZ;
            for (std::size_t J = 0; 2 * l + J <= N && J + l < std::max(La, Lb);
                 ++J) {
                const TruncatedSeries prod =
                    shifted(pair.a_prime, J + l, invY) *
                    shifted(pair.b_prime, J + l, invZ);
                const std::size_t off = 2 * l + J;
                for (std::size_t j = 0; j + off <= N && j < prod.coeffs.size();
                     ++j)
                    lhs_s.coeffs[j + off] += front * prod.coeffs[j];
            }
        }
        for (std::size_t n = 0; n <= N; ++n) {
            rhs_s.coeffs[n] = pair.a_tilde(n) * pair.b_tilde(n);
            if (n >= 1)
                rhs_s.coeffs[n] -= pair.a_tilde(n - 1) * pair.b_tilde(n - 1) *
                                   invY * invZ;
        }
        return std::abs(lhs_s.eval(X) - rhs_s.eval(X));
    }

    cplx lhs{};
    for (std::size_t l = 0; l <= 1; ++l) {
        const cplx front = (l == 0) ? cplx{1.0} : -X * X * invY * invZ;
        cplx xj = 1.0;
        for (std::size_t J = 0; J + l < std::max(La, Lb); ++J) {
            const TruncatedSeries sa = shifted(pair.a_prime, J + l, invY);
            const TruncatedSeries sb = shifted(pair.b_prime, J + l, invZ);
            lhs += front * xj * (sa * sb).eval(X);
            xj *= X;
        }
    }

    // Right side: geometric-type tail, truncated adaptively.
    const cplx factor = 1.0 - X * invY * invZ;
    cplx rhs{};
    {
        if (std::abs(X * invY * invZ) >= 1.0)
            throw AccuracyError("check_theorem3: |X/(YZ)| >= 1, tail diverges");
        cplx xl = 1.0;
        int quiet = 0;
        std::size_t l = 0;
        for (; l < 100000; ++l) {
            const cplx term = pair.a_tilde(l) * pair.b_tilde(l) * xl;
            rhs += term;
            xl *= X;
            if (std::abs(term) < 1e-17 * std::abs(rhs)) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
        }
        if (l == 100000)
            throw AccuracyError("check_theorem3: tail truncation too short");
    }
    rhs *= factor;
    return std::abs(lhs - rhs);
}

namespace {

double growth_exponent(const ShiftSet& A, const ShiftSet& C) {
    // |I_{A,C}(p^j)| grows at most like poly(j) * p^{g j}
    double g = 0.0;
    for (cplx a : A.elems) g = std::max(g, -a.real());
    for (cplx c : C.elems) g = std::max(g, -c.real());
    return g;
}

ShiftSet erase_element(const ShiftSet& S, cplx v, const char* what) {
    auto it = std::find(S.elems.begin(), S.elems.end(), v);
    if (it == S.elems.end())
        throw std::invalid_argument(std::string(what) +
                                    ": element not found in its set");
    ShiftSet r = S;
    r.elems.erase(r.elems.begin() + (it - S.elems.begin()));
    return r;
}

}  // namespace

double check_local_theorem1(std::uint64_t p, const ShiftSet& A, const ShiftSet& B,
                            const ShiftSet& C, const ShiftSet& D, cplx alpha_hat,
                            cplx beta_hat, std::size_t jmax) {
    const ShiftSet Ap = erase_element(A, alpha_hat, "check_local_theorem1");
    const ShiftSet Bp = erase_element(B, beta_hat, "check_local_theorem1");
    const double logp = std::log(static_cast<double>(p));
    const double ga = growth_exponent(Ap, C), gb = growth_exponent(Bp, D);
    if (ga >= 1.0 - alpha_hat.real() || gb >= 1.0 - beta_hat.real() ||
        ga + gb >= 1.0)
        throw std::domain_error("check_local_theorem1: divergent configuration");

    const LocalSeries la = local_series(Ap, C, p, 2 * jmax + 2);
    const LocalSeries lb = local_series(Bp, D, p, 2 * jmax + 2);
    const cplx xa = std::exp(-(1.0 - alpha_hat) * logp);
    const cplx xb = std::exp(-(1.0 - beta_hat) * logp);

    auto inner = [&](const LocalSeries& loc, cplx x, std::size_t M) {
        cplx sum{};
        cplx xp = 1.0;
        for (std::size_t j = 0; j <= jmax; ++j) {
            sum += loc.at(j + M) * xp;
            xp *= x;
        }
        return sum;
    };

    cplx lhs{};
    for (std::size_t l = 0; l <= 1; ++l) {
        const double sign = (l == 0) ? 1.0 : -1.0;  // mu(p^l)
        const cplx front =
            sign * std::exp(-static_cast<double>(l) * (2.0 - alpha_hat - beta_hat) *
                            logp);
        cplx inv_pJ = 1.0;
        const double inv_p = 1.0 / static_cast<double>(p);
        cplx acc{};
        int quiet = 0;
        for (std::size_t J = 0; J <= jmax; ++J) {
            const cplx term = inv_pJ * inner(la, xa, l + J) * inner(lb, xb, l + J);
            acc += term;
            inv_pJ *= inv_p;
            if (std::abs(term) < 1e-17 * std::abs(acc)) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
        lhs += front * acc;
    }

    ShiftSet At = Ap;
    At.elems.push_back(-beta_hat);
    ShiftSet Bt = Bp;
    Bt.elems.push_back(-alpha_hat);
    const LocalSeries lat = local_series(At, C, p, jmax);
    const LocalSeries lbt = local_series(Bt, D, p, jmax);
    cplx rhs_sum{};
    double inv_pl = 1.0;
    int quiet = 0;
    for (std::size_t l = 0; l <= jmax; ++l) {
        const cplx term = lat.at(l) * lbt.at(l) * inv_pl;
        rhs_sum += term;
        inv_pl /= static_cast<double>(p);
        if (std::abs(term) < 1e-17 * std::abs(rhs_sum)) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    const cplx rhs =
        (1.0 - std::exp(-(1.0 - alpha_hat - beta_hat) * logp)) * rhs_sum;
    return std::abs(lhs - rhs);
}

RqSeriesCheck check_rq_series(std::uint32_t q, cplx A, std::uint64_t H) {
    if (A.real() <= 1.0)
        throw std::domain_error("check_rq_series: Re A > 1 required");
    if (H < q) throw std::invalid_argument("check_rq_series: H >= q required");

    // r_q(h) depends on h only through gcd(q, h)
    std::vector<std::pair<std::uint32_t, double>> r_by_gcd;
    std::uint32_t divisor_count = 0;
    for (std::uint32_t g = 1; g <= q; ++g) {
        if (q % g != 0) continue;
        ++divisor_count;
        r_by_gcd.emplace_back(
            g, static_cast<double>(ramanujan_sum(q, g)));
    }
    auto rq = [&](std::uint64_t h) {
        const auto g = static_cast<std::uint32_t>(
            std::gcd<std::uint64_t>(q, h));
        for (const auto& [d, v] : r_by_gcd)
            if (d == g) return v;
        return 0.0;  // unreachable
    };

    RqSeriesCheck out;
    cplx lhs{};
    for (std::uint64_t h = 1; h <= H; ++h) {
        const double r = rq(h);
        if (r != 0.0)
            lhs += r * std::exp(-A * std::log(static_cast<double>(h)));
    }
    out.lhs_partial = lhs;

    ZetaEvaluator zeta_eval;
    out.rhs = std::exp((1.0 - A) * std::log(static_cast<double>(q))) *
              phi_product(1.0 - A, q) * zeta_eval.zeta(A);
    out.tail_bound = static_cast<double>(divisor_count) *
                     std::pow(static_cast<double>(H), 1.0 - A.real()) /
                     (A.real() - 1.0);
    return out;
}

double check_recurrence(const ShiftSet& A, const ShiftSet& C, cplx alpha,
                        std::uint64_t p, std::size_t jmax) {
    const ShiftSet Ap = erase_element(A, alpha, "check_recurrence");
    const LocalSeries full = local_series(A, C, p, jmax);
    const LocalSeries drop = local_series(Ap, C, p, jmax);
    const cplx pa = std::exp(-alpha * std::log(static_cast<double>(p)));
    double worst = std::abs(full.at(0) - drop.at(0));  // J = 0 boundary
    for (std::size_t J = 1; J <= jmax; ++J)
        worst = std::max(worst,
                         std::abs(full.at(J) - drop.at(J) - pa * full.at(J - 1)));
    return worst;
}

double check_B_shift(const ShiftSet& A, const ShiftSet& B, const ShiftSet& C,
                     const ShiftSet& D, cplx s, std::uint32_t prime_cutoff) {
    const BValue translated =
        B_value(translate(A, s), B, translate(C, s), D, cplx{1.0}, prime_cutoff);
    const BValue direct = B_value(A, B, C, D, s + 1.0, prime_cutoff);
    const double scale = std::max(std::abs(direct.value), 1e-300);
    return std::abs(translated.value - direct.value) / scale;
}

}  // namespace zr
