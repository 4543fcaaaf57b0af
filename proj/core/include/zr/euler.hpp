#pragma once

#include <cstdint>

#include "zr/shift_set.hpp"
#include "zr/sieve.hpp"

namespace zr {

/// Euler-product value with an estimate of the neglected prime tail
/// (a bound on |log value - log truth|, i.e. roughly relative).
struct BValue {
    cplx value;
    double tail_bound = 0.0;
};

/// Local Dirichlet series of the coefficient product,
///   L_p(s) = sum_j I_{A,C}(p^j) I_{B,D}(p^j) p^{-js},
/// truncated when the next term falls below 1e-16 of the running sum.
/// Throws AccuracyError if the cap is hit before convergence.
cplx local_factor(const ShiftSet& A, const ShiftSet& B, const ShiftSet& C,
                  const ShiftSet& D, std::uint64_t p, cplx s,
                  std::size_t jmax = 256);

/// Rankin-Selberg series B_{A,B,C,D}(s) = sum_n I_{A,C}(n) I_{B,D}(n) n^{-s},
/// evaluated as a zeta-prefactored Euler product over p <= prime_cutoff.
/// Prefactoring is carried to `order` (>= 1); order 3 keeps the corrected
/// product accurate to ~1e-9 with prime_cutoff 1e4 down to Re s = 1.
/// Throws PoleError when a first-order zeta factor sits at its pole.
BValue B_value(const ShiftSet& A, const ShiftSet& B, const ShiftSet& C,
               const ShiftSet& D, cplx s, std::uint32_t prime_cutoff = 10000,
               int order = 3);

/// E_{A,C}(w, r): finite product over p | r of the ratio of the shifted
/// local series, see the local-correction factor of the prediction formulas.
/// E(w, 1) = 1.
cplx E_factor(const ShiftSet& A, const ShiftSet& C, cplx w, std::uint32_t r,
              std::size_t jmax = 256);

/// Script-E correction factor in closed form: multiplicative in q with
///   E(1-ahat, p^J) = prod_{a in A'} (1 - p^{-(1-ahat+a)}) /
///                    prod_{c in C}  (1 - p^{-(1-ahat+c)})
///                    * sum_j I_{A',C}(p^{j+J}) p^{-j(1-ahat)},
/// where A' = A - {ahat}.  Throws std::invalid_argument if ahat is not an
/// element of A.
cplx script_E(const ShiftSet& A, const ShiftSet& C, cplx alpha_hat,
              std::uint32_t q, std::size_t jmax = 256);

/// Primes up to limit (inclusive).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

}  // namespace zr
