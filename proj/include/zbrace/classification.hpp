#pragma once

// The twelve families of pairs (phi, psi) that give λ-homomorphic braces on Z^2,
// grouped into four determinant blocks (det phi, det psi):
//
//   block 1 (+1,+1): 1.1 phi, psi in {E, -E}
//                    1.2 phi = E + m p N, psi = E + m q N, N = [[pq, q^2], [-p^2, -pq]], gcd(p,q) = 1
//                    1.3 phi = E, psi ≡3 [[1,*],[0,1]], tr psi = -1
//                    1.4 phi ≡3 [[1,0],[*,1]], tr phi = -1, psi = E
//                    1.5 phi ≡3 [[0,2],[1,2]] | [[2,1],[2,0]] | E, tr phi = -1, psi = phi
//                    1.6 phi ≡3 [[0,1],[2,2]] | [[2,2],[1,0]] | E, tr phi = -1, psi = phi^-1
//   block 2 (+1,-1): 2.1 phi = E,  psi ≡2 [[1,*],[0,1]], tr psi = 0
//                    2.2 phi = -E, psi ≡2 E, tr psi = 0
//   block 3 (-1,+1): 3.1 phi ≡2 [[1,0],[*,1]], tr phi = 0, psi = E
//                    3.2 phi ≡2 E, tr phi = 0, psi = -E
//   block 4 (-1,-1): 4.1 phi ≡2 E | [[0,1],[1,0]], tr phi = 0, psi = phi
//                    4.2 phi ≡2 E, tr phi = 0, psi = -phi

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zbrace/brace.hpp"
#include "zbrace/gl2z.hpp"

namespace zbrace {

enum class RowLabel { R1_1, R1_2, R1_3, R1_4, R1_5, R1_6, R2_1, R2_2, R3_1, R3_2, R4_1, R4_2 };

inline constexpr std::array<RowLabel, 12> kAllRows{
    RowLabel::R1_1, RowLabel::R1_2, RowLabel::R1_3, RowLabel::R1_4, RowLabel::R1_5, RowLabel::R1_6,
    RowLabel::R2_1, RowLabel::R2_2, RowLabel::R3_1, RowLabel::R3_2, RowLabel::R4_1, RowLabel::R4_2};

// "1.1" .. "4.2"
std::string_view row_name(RowLabel label);
std::optional<RowLabel> parse_row(std::string_view name);

// (det phi, det psi) required by the row's block.
std::pair<int, int> row_block(RowLabel label);

// Integer parameters of a row family. Which fields are read depends on the row:
//
//   1.1        sign1, sign2                  phi = sign1 E, psi = sign2 E
//   1.2        m, p, q                       gcd(p, q) = 1
//   1.3, 1.4   p, q, sign1                   s = sqrt(-3 - 12pq); 1.4: phi = [[(-1+εs)/2, 3p], [q, (-1-εs)/2]],
//                                            1.3: psi = [[(-1-εs)/2, q], [3p, (-1+εs)/2]]
//   1.5        m, n (n != m)                 phi11 = (1+n+2m+3mn)/(n-m),
//                                            phi = [[phi11, 2+3n+phi11], [1+3m-phi11, -1-phi11]]
//   1.6        m, n (1+m+n != 0)             phi11 = (3mn+m+n)/(1+m+n),
//                                            phi = [[phi11, 1+3n-phi11], [-1-3m+phi11, -1-phi11]]
//   2.1, 3.1   p, q, sign1                   s = sqrt(1 - 2pq); 3.1: phi = [[εs, 2p], [q, -εs]],
//                                            2.1: psi = [[εs, q], [2p, -εs]]
//   2.2, 3.2   p, q, sign1                   s = sqrt(1 - 4pq); matrix [[εs, 2p], [2q, -εs]]
//   4.1        m alone                       phi = [[1+m, 2+m], [-m, -1-m]]
//              p, sign1                      phi = [[p, p+ε], [ε-p, -p]]
//              m, n (n != m)                 phi = [[m+n+2mn, 2n(1+n)], [-2m(1+m), -m-n-2mn]] / (n-m)
//   4.2        m, p, sign1                   s = sqrt(1 - 4mp); phi = [[εs, 2m], [2p, -εs]], psi = -phi
//
// ε is sign1. Square roots and divisions must be exact.
struct RowParams {
    std::optional<std::int64_t> m, p, q, n;
    std::optional<int> sign1, sign2;

    bool operator==(const RowParams&) const = default;
};

std::string to_string(const RowParams& params);

// Builds the pair for a row family. Throws BadParams, GcdError or IntegralityError.
BraceSpec generate_row(RowLabel label, const RowParams& params);

// Parameter tuples for `label` with every integer in [-radius, radius] and both
// signs; the tuples are not filtered for integrality.
std::vector<RowParams> row_parameter_grid(RowLabel label, std::int64_t radius);

// Family 1.2 parameters (m, p, q) reproducing spec exactly, canonicalised to
// p > 0 or (p = 0, q > 0). (E, E) yields m = 0, p = 1, q = 0.
std::optional<RowParams> recover_row12(const BraceSpec& spec);

bool row_matches(RowLabel label, const BraceSpec& spec);

// Every row whose condition spec satisfies, in table order. Rows may overlap.
std::vector<RowLabel> row_membership(const BraceSpec& spec);

// Smallest nontrivial instance of a row (least max |entry|, then lexicographic)
// among grid parameters of radius 3.
std::pair<RowParams, BraceSpec> representative(RowLabel label);

// All matrices with entries in [-bound, bound] and det = +-1, lexicographic.
std::vector<Mat2> enumerate_unimodular(std::int64_t bound);

struct RowInstance {
    RowLabel label;
    BraceSpec spec;

    bool operator==(const RowInstance&) const = default;
    auto operator<=>(const RowInstance&) const = default;
};

struct SearchReport {
    std::int64_t bound = 0;
    std::uint64_t candidates = 0;            // ordered pairs examined
    std::uint64_t valid_pairs = 0;
    std::map<RowLabel, std::uint64_t> row_histogram;  // over valid pairs; all twelve keys
    std::vector<BraceSpec> unmatched_valid;           // valid but in no row
    std::vector<RowInstance> invalid_row_instances;   // in a row (predicate or generator) but invalid
    std::uint64_t generator_instances = 0;   // distinct generated pairs inside the box
    std::vector<RowInstance> generator_uncovered;     // valid row members no grid instance reached
    std::uint64_t commuting_pairs = 0;
    std::vector<BraceSpec> kernel_form_mismatches;         // commuting, eq4 and kernel forms disagree
    std::vector<BraceSpec> overflow_pairs;

    bool classification_holds() const { return unmatched_valid.empty() && invalid_row_instances.empty(); }
};

// Exhaustive check of the classification over all ordered pairs from
// enumerate_unimodular(bound)^2. threads = 0 picks the hardware concurrency.
// The result does not depend on the thread count.
SearchReport exhaustive_search(std::int64_t bound, unsigned threads = 1);

struct OrderDisagreement {
    Mat2 matrix;
    std::string by_predicate;
    std::string by_iteration;  // "overflow" when iteration overflowed
};

struct OrdersReport {
    std::int64_t bound = 0;
    std::uint64_t examined = 0;
    std::map<std::string, std::uint64_t> histogram;  // predicate order -> count
    std::vector<OrderDisagreement> disagreements;
};

OrdersReport orders_crosscheck(std::int64_t bound);

}  // namespace zbrace
