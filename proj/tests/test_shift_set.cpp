#include <doctest.h>

#include <stdexcept>

#include "zr/shift_set.hpp"

using namespace zr;

TEST_CASE("validate flags out-of-strip and duplicate shifts") {
    ShiftSet ok({{0.1, 0.2}, {0.2, -0.1}}, Role::A);
    CHECK(validate(ok).empty());

    ShiftSet wide({{0.3, 0.0}}, Role::A);
    CHECK_FALSE(validate(wide).empty());  // real part must stay below 1/4

    ShiftSet neg_denom({{-0.1, 0.0}}, Role::C);
    CHECK_FALSE(validate(neg_denom).empty());

    ShiftSet dup({{0.1, 0.0}, {0.1, 0.0}}, Role::A);
    CHECK_FALSE(validate(dup).empty());
}

TEST_CASE("negate and translate are elementwise") {
    ShiftSet s({{0.1, 0.2}, {-0.3, 0.4}}, Role::C);
    ShiftSet n = negate(s);
    CHECK(n.elems[0] == cplx(-0.1, -0.2));
    CHECK(n.elems[1] == cplx(0.3, -0.4));
    ShiftSet t = translate(s, {1.0, -1.0});
    CHECK(t.elems[0] == cplx(1.1, -0.8));
    CHECK(t.role == Role::C);
}

TEST_CASE("swap_sets removes selected elements and inserts negated opposites") {
    ShiftSet A({{0.1, 0}, {0.2, 0}}, Role::A);
    ShiftSet B({{0.3, 0}, {0.4, 0}}, Role::B);
    SwapSelection sel{{0}, {1}};
    auto [A2, B2] = swap_sets(A, B, sel);
    CHECK(A2.size() == 2);
    CHECK(A2.contains({0.2, 0}));
    CHECK(A2.contains({-0.4, 0}));
    CHECK(B2.contains({0.3, 0}));
    CHECK(B2.contains({-0.1, 0}));
}

TEST_CASE("swap_sets rejects mismatched or out-of-range selections") {
    ShiftSet A({{0.1, 0}}, Role::A);
    ShiftSet B({{0.3, 0}}, Role::B);
    CHECK_THROWS_AS(swap_sets(A, B, SwapSelection{{0, 1}, {0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(swap_sets(A, B, SwapSelection{{3}, {0}}),
                    std::invalid_argument);
}

TEST_CASE("enumerate_swaps counts sum_k C(|A|,k) C(|B|,k)") {
    ShiftSet A({{0.1, 0}, {0.2, 0}}, Role::A);
    ShiftSet B({{0.3, 0}, {0.4, 0}, {0.5, 0}}, Role::B);
    auto all = enumerate_swaps(A, B, 2);
    // 1 + 2*3 + 1*3 = 10
    CHECK(all.size() == 10);
    CHECK(all.front().u_idx.empty());
    CHECK(all.front().v_idx.empty());
    CHECK(enumerate_swaps(A, B, 1).size() == 7);
}

TEST_CASE("perturb_duplicates separates repeated shifts") {
    ShiftSet s({{0.1, 0}, {0.1, 0}, {0.2, 0}}, Role::A);
    std::size_t moved = perturb_duplicates(s);
    CHECK(moved >= 1);
    CHECK(s.elems[0] != s.elems[1]);
    for (const auto& e : s.elems) CHECK(std::abs(e - cplx(0.15, 0)) < 0.06);
}
