#include "zr/shift_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zr {

const char* role_name(Role r) {
    switch (r) {
        case Role::A: return "A";
        case Role::B: return "B";
        case Role::C: return "C";
        case Role::D: return "D";
    }
    return "?";
}

bool ShiftSet::contains(cplx v) const {
    return std::find(elems.begin(), elems.end(), v) != elems.end();
}

std::vector<Violation> validate(const ShiftSet& set) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < set.elems.size(); ++i) {
        const double re = set.elems[i].real();
        if (re >= 0.25) {
            out.push_back({i, std::string(role_name(set.role)) +
                                  ": real part must be < 1/4"});
        }
        if (!is_numerator(set.role) && re <= 0.0) {
            out.push_back({i, std::string(role_name(set.role)) +
                                  ": denominator shift needs positive real part"});
        }
    }
    for (std::size_t i = 0; i < set.elems.size(); ++i) {
        for (std::size_t j = i + 1; j < set.elems.size(); ++j) {
            if (set.elems[i] == set.elems[j]) {
                out.push_back({j, "repeated element"});
            }
        }
    }
    return out;
}

ShiftSet negate(const ShiftSet& set) {
    ShiftSet r = set;
    for (auto& z : r.elems) z = -z;
    return r;
}

ShiftSet translate(const ShiftSet& set, cplx s) {
    ShiftSet r = set;
    for (auto& z : r.elems) z += s;
    return r;
}

std::pair<ShiftSet, ShiftSet> swap_sets(const ShiftSet& A, const ShiftSet& B,
                                        const SwapSelection& sel) {
    if (sel.u_idx.size() != sel.v_idx.size())
        throw std::invalid_argument("swap selection needs |U| = |V|");
    auto check = [](const std::vector<std::size_t>& idx, std::size_t n) {
        for (std::size_t i : idx)
            if (i >= n) throw std::invalid_argument("swap index out of range");
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                if (idx[a] == idx[b])
                    throw std::invalid_argument("swap index repeated");
    };
    check(sel.u_idx, A.size());
    check(sel.v_idx, B.size());

    auto build = [](const ShiftSet& base, const std::vector<std::size_t>& del,
                    const ShiftSet& other, const std::vector<std::size_t>& ins) {
        ShiftSet r;
        r.role = base.role;
        for (std::size_t i = 0; i < base.elems.size(); ++i) {
            if (std::find(del.begin(), del.end(), i) == del.end())
                r.elems.push_back(base.elems[i]);
        }
        for (std::size_t i : ins) r.elems.push_back(-other.elems[i]);
        return r;
    };
    return {build(A, sel.u_idx, B, sel.v_idx), build(B, sel.v_idx, A, sel.u_idx)};
}

namespace {

void subsets_of_size(std::size_t n, std::size_t k,
                     std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    // iterative combination enumeration in lexicographic order
    std::vector<std::size_t> idx(k);
    if (k > n) return;
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        if (k == 0) return;
        // advance
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace

std::vector<SwapSelection> enumerate_swaps(const ShiftSet& A, const ShiftSet& B,
                                           std::size_t max_size) {
    std::vector<SwapSelection> out;
    const std::size_t kmax =
        std::min({max_size, A.size(), B.size()});
    for (std::size_t k = 0; k <= kmax; ++k) {
        std::vector<std::vector<std::size_t>> us, vs;
        subsets_of_size(A.size(), k, us);
        subsets_of_size(B.size(), k, vs);
        for (const auto& u : us)
            for (const auto& v : vs) out.push_back({u, v});
    }
    return out;
}

std::size_t perturb_duplicates(ShiftSet& set, double magnitude) {
    std::size_t moved = 0;
    for (std::size_t i = 0; i < set.elems.size(); ++i) {
        for (std::size_t j = i + 1; j < set.elems.size(); ++j) {
            if (set.elems[i] == set.elems[j]) {
                // distinct offsets per collision so triplicates also separate
                ++moved;
                set.elems[j] += magnitude * static_cast<double>(moved);
            }
        }
    }
    return moved;
}

}  // namespace zr
