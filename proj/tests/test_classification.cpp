#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "zbrace/classification.hpp"
#include "zbrace/errors.hpp"

using namespace zbrace;

namespace {

const Mat2 E = Mat2::identity();

std::vector<RowLabel> rows(std::initializer_list<RowLabel> l) { return l; }

oracle::M raw(const Mat2& m) { return {m.a11, m.a12, m.a21, m.a22}; }

}  // namespace

TEST_CASE("row names round-trip") {
    for (RowLabel r : kAllRows) CHECK(parse_row(row_name(r)) == r);
    CHECK_FALSE(parse_row("5.1").has_value());
    CHECK(row_name(RowLabel::R4_1) == "4.1");
    CHECK(row_block(RowLabel::R2_2) == std::pair{1, -1});
}

TEST_CASE("generate_row examples") {
    const BraceSpec r12 = generate_row(RowLabel::R1_2, {.m = 1, .p = 1, .q = 1});
    CHECK(r12.phi() == Mat2{2, 1, -1, 0});
    CHECK(r12.psi() == Mat2{2, 1, -1, 0});

    CHECK(generate_row(RowLabel::R1_1, {.sign1 = 1, .sign2 = 1}) == BraceSpec{E, E});
    CHECK(generate_row(RowLabel::R1_1, {.sign1 = -1, .sign2 = 1}) == BraceSpec{-E, E});

    const BraceSpec r41 = generate_row(RowLabel::R4_1, {.m = 0});
    CHECK(r41.phi() == Mat2{1, 2, 0, -1});
    CHECK(r41.psi() == Mat2{1, 2, 0, -1});

    const BraceSpec r31 = generate_row(RowLabel::R3_1, {.p = 0, .q = 5, .sign1 = 1});
    CHECK(r31.phi() == Mat2{1, 0, 5, -1});
    CHECK(r31.psi() == E);
    CHECK(mat_det(r31.phi()) == -1);
    CHECK(mat_trace(r31.phi()) == 0);
    CHECK(check_pair(r31).valid);

    const BraceSpec r14 = generate_row(RowLabel::R1_4, {.p = 1, .q = -1, .sign1 = 1});
    CHECK(r14.phi() == Mat2{1, 3, -1, -2});
    const BraceSpec r13 = generate_row(RowLabel::R1_3, {.p = 1, .q = -1, .sign1 = 1});
    CHECK(r13.psi() == Mat2{-2, -1, 3, 1});

    const BraceSpec r15 = generate_row(RowLabel::R1_5, {.m = 0, .n = 1});
    CHECK(r15.phi() == Mat2{2, 7, -1, -3});
    CHECK(r15.psi() == r15.phi());
}

TEST_CASE("right family equals the p-form of row 4.1") {
    for (std::int64_t m = -5; m <= 5; ++m) {
        CHECK(generate_row(RowLabel::R4_1, {.m = m}) ==
              generate_row(RowLabel::R4_1, {.p = 1 + m, .sign1 = 1}));
    }
}

TEST_CASE("generate_row errors") {
    CHECK_THROWS_AS(generate_row(RowLabel::R1_2, {.m = 1, .p = 2, .q = 4}), GcdError);
    CHECK_THROWS_AS(generate_row(RowLabel::R1_2, {.m = 1, .p = 0, .q = 0}), GcdError);
    CHECK_THROWS_AS(generate_row(RowLabel::R3_1, {.p = 1, .q = 1, .sign1 = 1}), IntegralityError);
    CHECK_THROWS_AS(generate_row(RowLabel::R1_4, {.p = 1, .q = 1, .sign1 = 1}), IntegralityError);
    CHECK_THROWS_AS(generate_row(RowLabel::R1_5, {.m = 1, .n = 1}), BadParams);
    CHECK_THROWS_AS(generate_row(RowLabel::R1_5, {.m = 0, .n = 3}), IntegralityError);
    CHECK_THROWS_AS(generate_row(RowLabel::R1_6, {.m = 0, .n = -1}), BadParams);
    CHECK_THROWS_AS(generate_row(RowLabel::R1_2, {.m = 1, .p = 1}), BadParams);
    CHECK_THROWS_AS(generate_row(RowLabel::R1_1, {.sign1 = 2, .sign2 = 1}), BadParams);
}

TEST_CASE("row_membership examples") {
    CHECK(row_membership(BraceSpec{E, E}) == rows({RowLabel::R1_1, RowLabel::R1_2}));
    const Mat2 b{2, 1, -1, 0};
    CHECK(row_membership(BraceSpec{b, b}) == rows({RowLabel::R1_2}));
    const Mat2 r{1, 2, 0, -1};
    CHECK(row_membership(BraceSpec{r, r}) == rows({RowLabel::R4_1}));
    CHECK(row_membership(BraceSpec{Mat2{1, 1, 0, 1}, E}).empty());
}

TEST_CASE("recover_row12 canonicalises parameters") {
    const auto p = recover_row12(generate_row(RowLabel::R1_2, {.m = -2, .p = -1, .q = -1}));
    REQUIRE(p.has_value());
    CHECK(*p == RowParams{.m = 2, .p = 1, .q = 1});

    const auto zero = recover_row12(BraceSpec{E, E});
    REQUIRE(zero.has_value());
    CHECK(*zero->m == 0);

    // phi = E, psi a shear: p = 0 branch
    const auto shear = recover_row12(BraceSpec{E, Mat2{1, 5, 0, 1}});
    REQUIRE(shear.has_value());
    CHECK(*shear == RowParams{.m = 5, .p = 0, .q = 1});

    const auto big = recover_row12(generate_row(RowLabel::R1_2, {.m = 3, .p = 2, .q = -3}));
    REQUIRE(big.has_value());
    CHECK(*big == RowParams{.m = 3, .p = 2, .q = -3});

    CHECK_FALSE(recover_row12(BraceSpec{Mat2{2, 1, 1, 1}, E}).has_value());
}

TEST_CASE("generators are sound on the radius-3 grid") {
    std::size_t produced = 0;
    for (RowLabel r : kAllRows) {
        std::size_t in_row = 0;
        for (const RowParams& params : row_parameter_grid(r, 3)) {
            BraceSpec spec{E, E};
            try {
                spec = generate_row(r, params);
            } catch (const IntegralityError&) {
                continue;
            } catch (const GcdError&) {
                continue;
            } catch (const BadParams&) {
                continue;
            }
            ++in_row;
            INFO("row ", row_name(r), " ", to_string(params));
            const Verdict v = check_pair(spec);
            CHECK(v.valid);
            CHECK(oracle::brace_pair(raw(spec.phi()), raw(spec.psi())));
            const auto members = row_membership(spec);
            CHECK(std::find(members.begin(), members.end(), r) != members.end());
            const auto [dphi, dpsi] = row_block(r);
            CHECK(mat_det(spec.phi()) == dphi);
            CHECK(mat_det(spec.psi()) == dpsi);
        }
        CHECK_MESSAGE(in_row > 0, "row ", row_name(r), " has no grid instance");
        produced += in_row;
    }
    CHECK(produced > 100);
}

TEST_CASE("representative picks a nontrivial small instance") {
    for (RowLabel r : kAllRows) {
        const auto [params, spec] = representative(r);
        CHECK(generate_row(r, params) == spec);
        CHECK_FALSE(spec == BraceSpec(E, E));
    }
    CHECK(representative(RowLabel::R1_2).second.phi().max_abs_entry() == 1);
}

TEST_CASE("enumerate_unimodular counts match a direct loop") {
    // frozen from oracle::count_unimodular, cross-checked with an independent script
    CHECK(oracle::count_unimodular(1) == 40);
    CHECK(oracle::count_unimodular(2) == 104);
    for (std::int64_t b : {1, 2, 3}) {
        const auto all = enumerate_unimodular(b);
        CHECK(static_cast<std::int64_t>(all.size()) == oracle::count_unimodular(b));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (const Mat2& m : all) CHECK(is_unimodular(m));
    }
    const auto one = enumerate_unimodular(1);
    for (const Mat2& m : {E, -E, Mat2{0, 1, 1, 0}, Mat2{1, 1, 0, 1}}) {
        CHECK(std::binary_search(one.begin(), one.end(), m));
    }
    CHECK_THROWS_AS(enumerate_unimodular(0), std::invalid_argument);
}

TEST_CASE("exhaustive_search at bound 1 agrees with the naive oracle") {
    const SearchReport rep = exhaustive_search(1);
    const auto all = enumerate_unimodular(1);

    std::uint64_t oracle_valid = 0;
    for (const Mat2& f : all)
        for (const Mat2& g : all) oracle_valid += oracle::brace_pair(raw(f), raw(g)) ? 1 : 0;

    CHECK(rep.candidates == 1600);
    CHECK(rep.valid_pairs == oracle_valid);
    CHECK(rep.valid_pairs == 34);
    CHECK(rep.unmatched_valid.empty());
    CHECK(rep.invalid_row_instances.empty());
    CHECK(rep.kernel_form_mismatches.empty());
    CHECK(rep.overflow_pairs.empty());
    CHECK(rep.classification_holds());
    CHECK(rep.row_histogram.size() == 12);
    CHECK(rep.row_histogram.at(RowLabel::R1_1) == 4);
    CHECK(rep.row_histogram.at(RowLabel::R1_2) == 5);
    CHECK(rep.row_histogram.at(RowLabel::R4_1) == 4);
    CHECK(rep.row_histogram.at(RowLabel::R1_3) == 0);
}

TEST_CASE("exhaustive_search at bound 2 matches frozen oracle counts") {
    const SearchReport rep = exhaustive_search(2);
    CHECK(rep.candidates == 104 * 104);
    CHECK(rep.valid_pairs == 90);
    CHECK(rep.classification_holds());
    const std::map<RowLabel, std::uint64_t> expected{
        {RowLabel::R1_1, 4},  {RowLabel::R1_2, 13}, {RowLabel::R1_3, 0},  {RowLabel::R1_4, 0},
        {RowLabel::R1_5, 2},  {RowLabel::R1_6, 2},  {RowLabel::R2_1, 14}, {RowLabel::R2_2, 10},
        {RowLabel::R3_1, 14}, {RowLabel::R3_2, 10}, {RowLabel::R4_1, 12}, {RowLabel::R4_2, 10}};
    CHECK(rep.row_histogram == expected);
}

TEST_CASE("every valid pair lies in its rows' determinant blocks") {
    const auto all = enumerate_unimodular(2);
    for (const Mat2& f : all)
        for (const Mat2& g : all) {
            const BraceSpec s{f, g};
            if (!check_pair(s).valid) continue;
            for (RowLabel r : row_membership(s)) {
                CHECK(row_block(r) == std::pair<int, int>(mat_det(f), mat_det(g)));
            }
        }
}

TEST_CASE("search result does not depend on the thread count") {
    const SearchReport a = exhaustive_search(2, 1);
    const SearchReport b = exhaustive_search(2, 3);
    CHECK(a.valid_pairs == b.valid_pairs);
    CHECK(a.row_histogram == b.row_histogram);
    CHECK(a.invalid_row_instances == b.invalid_row_instances);
    CHECK(a.generator_uncovered == b.generator_uncovered);
    CHECK(a.commuting_pairs == b.commuting_pairs);
}

TEST_CASE("orders_crosscheck") {
    const OrdersReport one = orders_crosscheck(1);
    CHECK(one.disagreements.empty());
    for (const char* o : {"1", "2", "3", "4", "6"}) CHECK(one.histogram.at(o) > 0);
    CHECK(order_by_predicate(Mat2{0, -1, 1, -1}) == MatOrder::finite(3));
    CHECK(order_by_predicate(Mat2{0, -1, 1, 0}) == MatOrder::finite(4));
    CHECK(order_by_predicate(Mat2{0, -1, 1, 1}) == MatOrder::finite(6));
    CHECK(orders_crosscheck(3).disagreements.empty());
}
