#pragma once

// Exact 2x2 integer matrices and the parts of GL2(Z) theory the rest of the
// library leans on: orders of finite-order elements and their centralizers.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace zbrace {

// [[a11, a12], [a21, a22]]; ordered lexicographically by (a11, a12, a21, a22).
struct Mat2 {
    std::int64_t a11 = 0, a12 = 0, a21 = 0, a22 = 0;

    static constexpr Mat2 identity() { return {1, 0, 0, 1}; }

    constexpr bool operator==(const Mat2&) const = default;
    constexpr auto operator<=>(const Mat2&) const = default;

    std::int64_t max_abs_entry() const;
};

// Per-entry "don't care" flags in the order a11, a12, a21, a22.
using WildcardMask = std::array<bool, 4>;
inline constexpr WildcardMask kNoWildcards{false, false, false, false};

// Multiplicative order of an element of GL2(Z): 1, 2, 3, 4, 6 or infinite.
class MatOrder {
public:
    static MatOrder finite(int n);
    static constexpr MatOrder infinite() { return MatOrder{0}; }

    constexpr bool is_finite() const { return n_ != 0; }
    // Only meaningful when is_finite().
    constexpr int value() const { return n_; }

    std::string to_string() const;  // "1".."6" or "inf"

    constexpr bool operator==(const MatOrder&) const = default;

private:
    constexpr explicit MatOrder(int n) : n_(n) {}
    int n_;
};

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_neg(const Mat2& a);
Mat2 mat_sub(const Mat2& a, const Mat2& b);

std::int64_t mat_det(const Mat2& a);
std::int64_t mat_trace(const Mat2& a);
bool is_unimodular(const Mat2& a);

// Inverse in GL2(Z). Throws NotUnimodular when |det| != 1.
Mat2 mat_inv(const Mat2& a);

// Signed power by binary exponentiation; k < 0 requires |det| = 1.
Mat2 mat_pow(const Mat2& a, std::int64_t k);

inline Mat2 operator*(const Mat2& a, const Mat2& b) { return mat_mul(a, b); }
inline Mat2 operator-(const Mat2& a) { return mat_neg(a); }

bool commutes(const Mat2& a, const Mat2& b);

// Order from det/trace alone (|A| = 2 iff A = -E or det -1 and tr 0, etc.).
MatOrder order_by_predicate(const Mat2& a);

// Order by repeated multiplication up to `cutoff`; used as an oracle for the above.
MatOrder order_by_iteration(const Mat2& a, int cutoff = 12);

// Full centralizer in GL2(Z) of a finite-order A other than +-E, sorted.
// {+-E, +-A} for orders 2 and 4; additionally +-A^-1 for orders 3 and 6.
std::vector<Mat2> centralizer_finite(const Mat2& a);

// True iff every non-wildcard entry of A - B is divisible by k (k >= 2).
bool congruent_mod(const Mat2& a, const Mat2& b, std::int64_t k,
                   const WildcardMask& wildcards = kNoWildcards);

std::string to_string(const Mat2& a);

}  // namespace zbrace
