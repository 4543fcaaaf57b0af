#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace zr {

using cplx = std::complex<double>;

/// Role of a shift set: A and B shift numerator zeta factors, C and D
/// denominator factors.  The role determines which strip constraint applies.
enum class Role { A, B, C, D };

inline bool is_numerator(Role r) { return r == Role::A || r == Role::B; }

const char* role_name(Role r);

/// Ordered set of complex shift parameters.  Value type with structural
/// equality; element order is preserved for reproducible output but carries
/// no meaning.
struct ShiftSet {
    std::vector<cplx> elems;
    Role role = Role::A;

    ShiftSet() = default;
    ShiftSet(std::vector<cplx> e, Role r) : elems(std::move(e)), role(r) {}

    std::size_t size() const { return elems.size(); }
    bool empty() const { return elems.empty(); }
    bool contains(cplx v) const;

    bool operator==(const ShiftSet&) const = default;
};

/// Subset pair (U, V) with U from A, V from B and |U| = |V|, identified by
/// element indices into the parent sets.
struct SwapSelection {
    std::vector<std::size_t> u_idx;  // indices into A
    std::vector<std::size_t> v_idx;  // indices into B
};

struct Violation {
    std::size_t index;  // offending element, or size() for set-level issues
    std::string message;
};

/// All strip-bound and distinctness violations; empty result means ok.
std::vector<Violation> validate(const ShiftSet& set);

/// Elementwise negation, order preserved.  The role tag is kept as-is; the
/// caller decides how the negated set is used.
ShiftSet negate(const ShiftSet& set);

/// Adds s to every element.
ShiftSet translate(const ShiftSet& set, cplx s);

/// The swap operation (A, B) -> (A-U+V^-, B-V+U^-): delete the selected
/// elements and insert the negatives of the opposite selection.
/// Throws std::invalid_argument on an out-of-range or mismatched selection.
std::pair<ShiftSet, ShiftSet> swap_sets(const ShiftSet& A, const ShiftSet& B,
                                        const SwapSelection& sel);

/// All subset pairs (U, V) with |U| = |V| <= max_size, the empty pair first.
/// Pairings are unordered subsets: count = sum_k C(|A|,k) * C(|B|,k).
std::vector<SwapSelection> enumerate_swaps(const ShiftSet& A, const ShiftSet& B,
                                           std::size_t max_size);

/// Replaces repeated elements by distinct perturbations of magnitude ~1e-6
/// so that downstream formulas stay pole-free.  Returns the number of
/// elements moved.
std::size_t perturb_duplicates(ShiftSet& set, double magnitude = 1e-6);

}  // namespace zr
