#include "zbrace/gl2z.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "zbrace/checked.hpp"
#include "zbrace/errors.hpp"

namespace zbrace {

namespace ck = checked;

std::int64_t Mat2::max_abs_entry() const {
    auto mag = [](std::int64_t v) { return v < 0 ? ck::neg(v) : v; };
    return std::max({mag(a11), mag(a12), mag(a21), mag(a22)});
}

MatOrder MatOrder::finite(int n) {
    switch (n) {
        case 1: case 2: case 3: case 4: case 6:
            return MatOrder{n};
        default:
            throw std::invalid_argument("finite orders in GL2(Z) are 1, 2, 3, 4 or 6, got " +
                                        std::to_string(n));
    }
}

std::string MatOrder::to_string() const { return is_finite() ? std::to_string(n_) : "inf"; }

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {ck::dot(a.a11, a.a12, b.a11, b.a21), ck::dot(a.a11, a.a12, b.a12, b.a22),
            ck::dot(a.a21, a.a22, b.a11, b.a21), ck::dot(a.a21, a.a22, b.a12, b.a22)};
}

Mat2 mat_neg(const Mat2& a) {
    return {ck::neg(a.a11), ck::neg(a.a12), ck::neg(a.a21), ck::neg(a.a22)};
}

Mat2 mat_sub(const Mat2& a, const Mat2& b) {
    return {ck::sub(a.a11, b.a11), ck::sub(a.a12, b.a12), ck::sub(a.a21, b.a21),
            ck::sub(a.a22, b.a22)};
}

std::int64_t mat_det(const Mat2& a) { return ck::cross(a.a11, a.a22, a.a12, a.a21); }

std::int64_t mat_trace(const Mat2& a) { return ck::add(a.a11, a.a22); }

bool is_unimodular(const Mat2& a) {
    const auto d = mat_det(a);
    return d == 1 || d == -1;
}

namespace {

std::int64_t require_unimodular(const Mat2& a) {
    const auto d = mat_det(a);
    if (d != 1 && d != -1) {
        throw NotUnimodular("matrix " + to_string(a) + " has determinant " + std::to_string(d));
    }
    return d;
}

}  // namespace

Mat2 mat_inv(const Mat2& a) {
    const auto d = require_unimodular(a);
    // adjugate times det, since 1/det = det for det = +-1
    return {ck::mul(d, a.a22), ck::mul(d, ck::neg(a.a12)), ck::mul(d, ck::neg(a.a21)),
            ck::mul(d, a.a11)};
}

Mat2 mat_pow(const Mat2& a, std::int64_t k) {
    Mat2 base = a;
    std::uint64_t e;
    if (k < 0) {
        base = mat_inv(a);
        e = static_cast<std::uint64_t>(-(k + 1)) + 1;
    } else {
        e = static_cast<std::uint64_t>(k);
    }
    Mat2 result = Mat2::identity();
    while (e != 0) {
        if (e & 1u) result = mat_mul(result, base);
        e >>= 1;
        // skip the final squaring; it is never used and may overflow
        if (e != 0) base = mat_mul(base, base);
    }
    return result;
}

bool commutes(const Mat2& a, const Mat2& b) { return mat_mul(a, b) == mat_mul(b, a); }

MatOrder order_by_predicate(const Mat2& a) {
    const auto d = require_unimodular(a);
    const auto t = mat_trace(a);
    const Mat2 e = Mat2::identity();
    if (a == e) return MatOrder::finite(1);
    if (a == -e || (d == -1 && t == 0)) return MatOrder::finite(2);
    if (d == 1) {
        if (t == -1) return MatOrder::finite(3);
        if (t == 0) return MatOrder::finite(4);
        if (t == 1) return MatOrder::finite(6);
    }
    return MatOrder::infinite();
}

MatOrder order_by_iteration(const Mat2& a, int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("order iteration cutoff must be positive");
    require_unimodular(a);
    Mat2 power = a;
    for (int n = 1; n <= cutoff; ++n) {
        if (power == Mat2::identity()) return MatOrder::finite(n);
        if (n < cutoff) power = mat_mul(power, a);
    }
    return MatOrder::infinite();
}

std::vector<Mat2> centralizer_finite(const Mat2& a) {
    const MatOrder order = order_by_predicate(a);
    if (!order.is_finite() || order.value() == 1 || a == -Mat2::identity()) {
        throw UnsupportedOrder("centralizer_finite needs a finite-order matrix other than +-E, got " +
                               to_string(a) + " of order " + order.to_string());
    }
    const Mat2 e = Mat2::identity();
    std::vector<Mat2> out{e, -e, a, -a};
    if (order.value() == 3 || order.value() == 6) {
        const Mat2 inv = mat_inv(a);
        out.push_back(inv);
        out.push_back(-inv);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool congruent_mod(const Mat2& a, const Mat2& b, std::int64_t k, const WildcardMask& wildcards) {
    if (k < 2) throw std::invalid_argument("congruence modulus must be at least 2");
    const Mat2 diff = mat_sub(a, b);
    const std::array<std::int64_t, 4> entries{diff.a11, diff.a12, diff.a21, diff.a22};
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!wildcards[i] && entries[i] % k != 0) return false;
    }
    return true;
}

std::string to_string(const Mat2& a) {
    std::ostringstream os;
    os << "[[" << a.a11 << "," << a.a12 << "],[" << a.a21 << "," << a.a22 << "]]";
    return os.str();
}

}  // namespace zbrace
