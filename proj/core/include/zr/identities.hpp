#pragma once

#include <cstdint>
#include <vector>

#include "zr/shift_set.hpp"

namespace zr {

/// Power series truncated at a fixed order; arithmetic is exact truncation
/// algebra: (fg)_n = sum_{k<=n} f_k g_{n-k}.
struct TruncatedSeries {
    std::vector<cplx> coeffs;  // X^0 .. X^N

    explicit TruncatedSeries(std::size_t order = 0) : coeffs(order + 1) {}
    std::size_t order() const { return coeffs.size() - 1; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(cplx scalar) const;

    cplx eval(cplx x) const;
};

/// Sequences (a', b') together with the derived pair
///   a~_l = sum_{J<=l} Z^{J-l} a'_J,   b~_l = sum_{K<=l} Y^{K-l} b'_K.
/// a' and b' are treated as finitely supported.
struct SequencePair {
    std::vector<cplx> a_prime, b_prime;
    cplx Y, Z;

    cplx a_tilde(std::size_t l) const;
    cplx b_tilde(std::size_t l) const;
};

/// Residual |LHS - RHS| of the power-series identity
///   sum_J sum_{l=0,1} (-1)^l X^{2l+J} (YZ)^{-l}
///       (sum_j a'_{j+l+J} (X/Y)^j)(sum_k b'_{k+l+J} (X/Z)^k)
///     = (1 - X/(YZ)) sum_l a~_l b~_l X^l.
/// The left side is a finite sum; the right side is truncated at X-order
/// rhs_order, or adaptively when rhs_order < 0 (requires |X/(YZ)| < 1).
double check_theorem3(const SequencePair& pair, cplx X, int rhs_order = -1);

/// Residual of the per-prime identity behind the q-sum reduction:
///   sum_{l=0,1} mu(p^l) p^{-l(2-ahat-bhat)} sum_J p^{-J}
///       (sum_j I_{A',C}(p^{j+l+J}) p^{-j(1-ahat)})
///       (sum_k I_{B',D}(p^{k+l+J}) p^{-k(1-bhat)})
///   = (1 - p^{-(1-ahat-bhat)}) sum_l I_{A'u{-bhat},C}(p^l) I_{B'u{-ahat},D}(p^l) p^{-l}
/// with A' = A - {ahat}, B' = B - {bhat}.
double check_local_theorem1(std::uint64_t p, const ShiftSet& A, const ShiftSet& B,
                            const ShiftSet& C, const ShiftSet& D, cplx alpha_hat,
                            cplx beta_hat, std::size_t jmax = 200);

struct RqSeriesCheck {
    cplx lhs_partial;
    cplx rhs;
    double tail_bound;
};

/// Partial sum sum_{h<=H} r_q(h) h^{-A} against the closed form
/// q^{1-A} Phi(1-A, q) zeta(A); the tail bound is d(q) H^{1-Re A}/(Re A - 1).
RqSeriesCheck check_rq_series(std::uint32_t q, cplx A, std::uint64_t H);

/// Max residual over J <= jmax of the coefficient recurrence
///   I_{A,C}(p^J) = I_{A',C}(p^J) + p^{-alpha} I_{A,C}(p^{J-1}).
double check_recurrence(const ShiftSet& A, const ShiftSet& C, cplx alpha,
                        std::uint64_t p, std::size_t jmax);

/// Relative residual of B_{A_s,B,C_s,D}(1) = B_{A,B,C,D}(s+1), both sides
/// through the prefactored Euler product.
double check_B_shift(const ShiftSet& A, const ShiftSet& B, const ShiftSet& C,
                     const ShiftSet& D, cplx s, std::uint32_t prime_cutoff = 10000);

}  // namespace zr
