#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "zr/shift_set.hpp"

namespace zr {

/// Smallest-prime-factor table up to a limit.  Backs factorisation, Möbius,
/// Euler phi and the coefficient sieve.
class FactorizationSieve {
  public:
    explicit FactorizationSieve(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }
    bool is_prime(std::uint32_t n) const { return n >= 2 && spf_[n] == n; }

    /// (prime, exponent) pairs of n, increasing prime.
    std::vector<std::pair<std::uint32_t, std::uint32_t>>
    factor(std::uint32_t n) const;

    int moebius(std::uint32_t n) const;
    std::uint64_t euler_phi(std::uint32_t n) const;

  private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

/// Truncated local expansion: coeffs[j] holds the coefficient of x^j in
///   prod_{a in A} (1 - p^{-a} x)^{-1} * prod_{c in C} (1 - p^{-c} x),
/// i.e. the value I_{A,C}(p^j) with x = p^{-s}.
struct LocalSeries {
    std::uint64_t prime = 2;
    std::vector<cplx> coeffs;

    cplx at(std::size_t j) const { return j < coeffs.size() ? coeffs[j] : cplx{}; }
};

/// Local coefficients I_{A,C}(p^j) for 0 <= j <= jmax.
/// Throws std::invalid_argument if p is not prime.
LocalSeries local_series(const ShiftSet& A, const ShiftSet& C, std::uint64_t p,
                         std::size_t jmax);

/// Sieve-built table of I_{A,C}(n) for 1 <= n <= X (index 0 unused).
struct CoefficientTable {
    ShiftSet A, C;
    std::uint32_t X = 0;
    std::vector<cplx> values;  // size X+1, values[0] = 0

    cplx operator[](std::uint32_t n) const { return values[n]; }
};

/// Multiplicative fill from memoised local series; exact to floating
/// precision.  Throws std::length_error when the value array would exceed
/// max_bytes (default 2 GiB).
CoefficientTable sieve_coefficients(const ShiftSet& A, const ShiftSet& C,
                                    std::uint32_t X,
                                    std::size_t max_bytes = std::size_t{2} << 30);

/// I_{A,C}(n) by explicit Dirichlet convolution of the shifted n^{-alpha}
/// and mu(n) n^{-gamma} arrays.  Independent of the sieve path; intended as
/// an oracle for small n (<= 1e4 recommended).
cplx brute_force_coefficient(const ShiftSet& A, const ShiftSet& C,
                             std::uint32_t n);

/// Ramanujan sum r_q(h) = sum_{d | gcd(q,h)} d * mu(q/d).
std::int64_t ramanujan_sum(std::uint32_t q, std::uint32_t h);

/// Phi(x, q) = prod_{p | q} (1 - p^{-x}).
cplx phi_product(cplx x, std::uint32_t q);

int moebius(std::uint32_t n);
std::uint64_t euler_phi(std::uint32_t n);

}  // namespace zr
