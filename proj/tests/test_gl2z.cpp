#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>

#include "oracle.hpp"
#include "zbrace/errors.hpp"
#include "zbrace/gl2z.hpp"

using namespace zbrace;

namespace {

const Mat2 E = Mat2::identity();

std::vector<Mat2> unimodular_box(std::int64_t b) {
    std::vector<Mat2> out;
    for (std::int64_t a = -b; a <= b; ++a)
        for (std::int64_t c = -b; c <= b; ++c)
            for (std::int64_t d = -b; d <= b; ++d)
                for (std::int64_t e = -b; e <= b; ++e) {
                    const Mat2 m{a, c, d, e};
                    if (is_unimodular(m)) out.push_back(m);
                }
    return out;
}

oracle::M raw(const Mat2& m) { return {m.a11, m.a12, m.a21, m.a22}; }

}  // namespace

TEST_CASE("mat_mul examples") {
    const Mat2 a{2, 1, -1, 0};
    CHECK(mat_mul(E, a) == a);
    CHECK(mat_mul(a, a) == Mat2{3, 2, -2, -1});
    CHECK(raw(mat_mul(a, a)) == oracle::mul(raw(a), raw(a)));
    CHECK(mat_mul(Mat2{0, 1, 1, 0}, Mat2{0, 1, 1, 0}) == E);
}

TEST_CASE("mat_mul reports overflow instead of wrapping") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
    const Mat2 a{big, 0, 0, 1};
    CHECK_THROWS_AS(mat_mul(a, Mat2{2, 0, 0, 1}), OverflowError);
    CHECK_THROWS_AS(mat_pow(Mat2{2, 1, 1, 1}, 200), OverflowError);
    CHECK_THROWS_AS(mat_neg(Mat2{std::numeric_limits<std::int64_t>::min(), 0, 0, 1}), OverflowError);
}

TEST_CASE("mat_inv examples and errors") {
    CHECK(mat_inv(E) == E);
    CHECK(mat_inv(Mat2{2, 1, -1, 0}) == Mat2{0, -1, 1, 2});
    CHECK(mat_inv(Mat2{3, 2, 1, 1}) == Mat2{1, -2, -1, 3});
    // det -1 gives the negated adjugate
    CHECK(mat_inv(Mat2{1, 2, 0, -1}) == Mat2{1, 2, 0, -1});
    CHECK_THROWS_AS(mat_inv(Mat2{2, 0, 0, 1}), NotUnimodular);
    CHECK_THROWS_AS(mat_inv(Mat2{}), NotUnimodular);
}

TEST_CASE("mat_pow examples") {
    CHECK(mat_pow(Mat2{1, 1, 0, 1}, 3) == Mat2{1, 3, 0, 1});
    CHECK(mat_pow(Mat2{5, 7, 3, 4}, 0) == E);
    CHECK(mat_pow(Mat2{2, 1, -1, 0}, -1) == Mat2{0, -1, 1, 2});
    CHECK(mat_pow(Mat2{2, 0, 0, 1}, 3) == Mat2{8, 0, 0, 1});
    CHECK_THROWS_AS(mat_pow(Mat2{2, 0, 0, 1}, -1), NotUnimodular);
}

TEST_CASE("det and trace") {
    CHECK(mat_det(E) == 1);
    CHECK(mat_trace(E) == 2);
    CHECK(mat_det(Mat2{2, 1, -1, 0}) == 1);
    CHECK(mat_trace(Mat2{2, 1, -1, 0}) == 2);
    CHECK(mat_det(Mat2{1, 2, 0, -1}) == -1);
    CHECK(mat_trace(Mat2{1, 2, 0, -1}) == 0);
}

TEST_CASE("order examples") {
    CHECK(order_by_predicate(Mat2{0, -1, 1, 0}) == MatOrder::finite(4));
    CHECK(order_by_predicate(Mat2{0, 1, 1, 0}) == MatOrder::finite(2));
    CHECK(order_by_predicate(Mat2{1, 1, 0, 1}) == MatOrder::infinite());
    CHECK(order_by_predicate(-E) == MatOrder::finite(2));
    CHECK(order_by_predicate(Mat2{0, -1, 1, 1}) == MatOrder::finite(6));
    CHECK(order_by_iteration(E) == MatOrder::finite(1));
    CHECK(order_by_iteration(-E) == MatOrder::finite(2));
    CHECK(order_by_iteration(Mat2{0, -1, 1, -1}) == MatOrder::finite(3));
    CHECK(order_by_iteration(Mat2{1, 1, 0, 1}) == MatOrder::infinite());
    CHECK_THROWS_AS(order_by_predicate(Mat2{2, 0, 0, 2}), NotUnimodular);
    CHECK_THROWS_AS(order_by_iteration(Mat2{2, 0, 0, 2}), NotUnimodular);
    CHECK_THROWS_AS(MatOrder::finite(5), std::invalid_argument);
}

TEST_CASE("order predicate agrees with iteration on [-3,3]") {
    for (const Mat2& m : unimodular_box(3)) {
        INFO(to_string(m));
        CHECK(order_by_predicate(m) == order_by_iteration(m));
    }
}

TEST_CASE("commutes") {
    const Mat2 a{2, 1, -1, 0};
    CHECK(commutes(a, E));
    CHECK(commutes(a, a));
    CHECK_FALSE(commutes(Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1}));
}

TEST_CASE("centralizer_finite examples") {
    const Mat2 swap{0, 1, 1, 0};
    std::vector<Mat2> expected{E, -E, swap, -swap};
    std::sort(expected.begin(), expected.end());
    CHECK(centralizer_finite(swap) == expected);

    const Mat2 r3{0, -1, 1, -1};
    const auto c3 = centralizer_finite(r3);
    CHECK(c3.size() == 6);
    CHECK(std::count(c3.begin(), c3.end(), mat_inv(r3)) == 1);
    CHECK(std::count(c3.begin(), c3.end(), -mat_inv(r3)) == 1);

    CHECK_THROWS_AS(centralizer_finite(Mat2{1, 1, 0, 1}), UnsupportedOrder);
    CHECK_THROWS_AS(centralizer_finite(E), UnsupportedOrder);
    CHECK_THROWS_AS(centralizer_finite(-E), UnsupportedOrder);
}

TEST_CASE("centralizer_finite is exactly the commuting unimodular set on [-2,2]") {
    const auto box = unimodular_box(2);
    for (const Mat2& a : box) {
        const MatOrder o = order_by_predicate(a);
        if (!o.is_finite() || o.value() == 1 || a == -E) continue;
        const auto cent = centralizer_finite(a);
        for (const Mat2& c : cent) CHECK(commutes(c, a));
        for (const Mat2& b : box) {
            INFO(to_string(a), " ", to_string(b));
            CHECK(commutes(a, b) == std::binary_search(cent.begin(), cent.end(), b));
        }
    }
}

TEST_CASE("congruent_mod") {
    CHECK(congruent_mod(Mat2{4, 3, 0, 1}, E, 3));
    CHECK(congruent_mod(Mat2{1, 7, 0, 1}, Mat2{1, 0, 0, 1}, 3, {false, true, false, false}));
    CHECK_FALSE(congruent_mod(Mat2{1, 7, 0, 1}, Mat2{1, 0, 0, 1}, 3));
    CHECK_FALSE(congruent_mod(Mat2{1, 0, 1, 1}, E, 2));
    CHECK(congruent_mod(Mat2{-1, 0, 0, -1}, E, 2));
    CHECK_THROWS_AS(congruent_mod(E, E, 1), std::invalid_argument);
}

TEST_CASE("power laws on [-3,3], |k| <= 8") {
    for (const Mat2& a : unimodular_box(3)) {
        for (std::int64_t k = -8; k <= 8; ++k) {
            INFO(to_string(a), " k=", k);
            const Mat2 ak = mat_pow(a, k);
            CHECK(raw(ak) == oracle::power(raw(a), k));
            CHECK(mat_mul(ak, mat_pow(a, -k)) == E);
        }
        for (std::int64_t j = -4; j <= 4; ++j)
            for (std::int64_t k = -4; k <= 4; ++k) {
                CHECK(mat_pow(a, j + k) == mat_mul(mat_pow(a, j), mat_pow(a, k)));
            }
    }
}

TEST_CASE("det is multiplicative on random samples") {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::int64_t> entry(-50, 50);
    for (int i = 0; i < 2000; ++i) {
        const Mat2 a{entry(rng), entry(rng), entry(rng), entry(rng)};
        const Mat2 b{entry(rng), entry(rng), entry(rng), entry(rng)};
        CHECK(mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b));
    }
}
