#pragma once

// λ-homomorphic braces on Z^2.
//
// A pair (phi, psi) in GL2(Z) assigns λ_x = phi, λ_y = psi to the generators of
// Z^2 and extends homomorphically: λ_(a1,a2) = phi^a1 psi^a2. The multiplication
// is a ⊙ b = a + λ_a(b). Such a pair gives a brace iff phi and psi commute and
// the four power identities phi^(phi11-1) psi^phi21 = E, phi^phi12 psi^(phi22-1) = E,
// phi^(psi11-1) psi^psi21 = E, phi^psi12 psi^(psi22-1) = E hold.
//
// Regularity of H_λ = {(a, λ_a)} inside Hol(Z^2) quantifies over all of Z^2 and
// is not checked directly. h_lambda_closed checks closure of H_λ pointwise;
// regularity then follows from closure for homomorphic λ.

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "zbrace/gl2z.hpp"

namespace zbrace {

// Element of the additive group Z^2 in coordinates w.r.t. the generators x, y.
struct Vec2 {
    std::int64_t x1 = 0, x2 = 0;

    constexpr bool operator==(const Vec2&) const = default;
    constexpr auto operator<=>(const Vec2&) const = default;
};

std::string to_string(const Vec2& v);

Vec2 oplus(const Vec2& a, const Vec2& b);
Vec2 ominus(const Vec2& a);
Vec2 apply(const Mat2& m, const Vec2& v);

// Candidate pair; both matrices are checked to lie in GL2(Z) on construction.
class BraceSpec {
public:
    BraceSpec(const Mat2& phi, const Mat2& psi);

    const Mat2& phi() const { return phi_; }
    const Mat2& psi() const { return psi_; }

    bool operator==(const BraceSpec&) const = default;
    auto operator<=>(const BraceSpec&) const = default;

private:
    Mat2 phi_;
    Mat2 psi_;
};

struct Verdict {
    bool valid = false;
    bool commuting = false;
    // The four power identities, in the order listed at the top of this header.
    std::array<bool, 4> eq4_results{};
    // ⊖u ⊕ λ_w(u) ∈ Ker λ for (u,w) = (x,x), (y,x), (x,y), (y,y).
    std::array<bool, 4> kernel_results{};

    bool all_eq4() const;
    bool all_kernel() const;
};

struct HolElement {
    Vec2 g;
    Mat2 f = Mat2::identity();

    bool operator==(const HolElement&) const = default;
};

Mat2 lambda_of(const BraceSpec& spec, const Vec2& a);
Vec2 odot(const BraceSpec& spec, const Vec2& a, const Vec2& b);
// Inverse of a in (Z^2, ⊙): ⊖ λ_a^-1(a).
Vec2 odot_inverse(const BraceSpec& spec, const Vec2& a);
bool in_lambda_kernel(const BraceSpec& spec, const Vec2& v);

Verdict check_pair(const BraceSpec& spec);

// a ⊙ (b ⊕ c) == (a ⊙ b) ⊕ (⊖a) ⊕ (a ⊙ c)
bool brace_axiom_holds(const BraceSpec& spec, const Vec2& a, const Vec2& b, const Vec2& c);
bool odot_associative(const BraceSpec& spec, const Vec2& a, const Vec2& b, const Vec2& c);

// Semidirect product law of Hol(Z^2): (g1, f1)(g2, f2) = (g1 + f1(g2), f1 f2).
HolElement hol_mul(const HolElement& h1, const HolElement& h2);
inline const Vec2& hol_project(const HolElement& h) { return h.g; }

// (a, λ_a)(b, λ_b) == (a ⊙ b, λ_(a⊙b))
bool h_lambda_closed(const BraceSpec& spec, const Vec2& a, const Vec2& b);

// A BraceSpec known to satisfy check_pair(...).valid.
class ValidBrace {
public:
    // Throws InvalidSpec when the pair is not a brace.
    explicit ValidBrace(const BraceSpec& spec);

    const BraceSpec& spec() const { return spec_; }

private:
    BraceSpec spec_;
};

}  // namespace zbrace
