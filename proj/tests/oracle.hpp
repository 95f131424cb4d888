#pragma once

// Naive reimplementations used as independent oracles in tests. Nothing here
// calls into the library: plain arrays, repeated multiplication, no overflow checks.

#include <array>
#include <cstdint>

namespace oracle {

using M = std::array<std::int64_t, 4>;  // a11, a12, a21, a22

inline constexpr M kId{1, 0, 0, 1};

inline M mul(const M& a, const M& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline std::int64_t det(const M& a) { return a[0] * a[3] - a[1] * a[2]; }

inline M inverse(const M& a) {
    const auto d = det(a);
    return {d * a[3], -d * a[1], -d * a[2], d * a[0]};
}

// repeated multiplication, k may be negative
inline M power(const M& a, std::int64_t k) {
    const M base = k < 0 ? inverse(a) : a;
    M r = kId;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, base);
    return r;
}

inline bool brace_pair(const M& f, const M& s) {
    if (mul(f, s) != mul(s, f)) return false;
    const std::array<std::array<std::int64_t, 2>, 4> exps{{
        {f[0] - 1, f[2]}, {f[1], f[3] - 1}, {s[0] - 1, s[2]}, {s[1], s[3] - 1}}};
    for (const auto& e : exps) {
        if (mul(power(f, e[0]), power(s, e[1])) != kId) return false;
    }
    return true;
}

// count of integer matrices with entries in [-b, b] and |det| = 1
inline std::int64_t count_unimodular(std::int64_t b) {
    std::int64_t n = 0;
    for (std::int64_t a = -b; a <= b; ++a)
        for (std::int64_t c = -b; c <= b; ++c)
            for (std::int64_t d = -b; d <= b; ++d)
                for (std::int64_t e = -b; e <= b; ++e) {
                    const auto dt = a * e - c * d;
                    if (dt == 1 || dt == -1) ++n;
                }
    return n;
}

}  // namespace oracle
