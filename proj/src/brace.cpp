#include "zbrace/brace.hpp"

#include <algorithm>
#include <sstream>

#include "zbrace/checked.hpp"
#include "zbrace/errors.hpp"

namespace zbrace {

namespace ck = checked;

std::string to_string(const Vec2& v) {
    std::ostringstream os;
    os << "(" << v.x1 << "," << v.x2 << ")";
    return os.str();
}

Vec2 oplus(const Vec2& a, const Vec2& b) { return {ck::add(a.x1, b.x1), ck::add(a.x2, b.x2)}; }

Vec2 ominus(const Vec2& a) { return {ck::neg(a.x1), ck::neg(a.x2)}; }

Vec2 apply(const Mat2& m, const Vec2& v) {
    return {ck::dot(m.a11, m.a12, v.x1, v.x2), ck::dot(m.a21, m.a22, v.x1, v.x2)};
}

BraceSpec::BraceSpec(const Mat2& phi, const Mat2& psi) : phi_(phi), psi_(psi) {
    if (!is_unimodular(phi_)) throw NotUnimodular("phi " + to_string(phi_) + " is not in GL2(Z)");
    if (!is_unimodular(psi_)) throw NotUnimodular("psi " + to_string(psi_) + " is not in GL2(Z)");
}

bool Verdict::all_eq4() const {
    return std::all_of(eq4_results.begin(), eq4_results.end(), [](bool b) { return b; });
}

bool Verdict::all_kernel() const {
    return std::all_of(kernel_results.begin(), kernel_results.end(), [](bool b) { return b; });
}

Mat2 lambda_of(const BraceSpec& spec, const Vec2& a) {
    return mat_mul(mat_pow(spec.phi(), a.x1), mat_pow(spec.psi(), a.x2));
}

Vec2 odot(const BraceSpec& spec, const Vec2& a, const Vec2& b) {
    return oplus(a, apply(lambda_of(spec, a), b));
}

Vec2 odot_inverse(const BraceSpec& spec, const Vec2& a) {
    return ominus(apply(mat_inv(lambda_of(spec, a)), a));
}

bool in_lambda_kernel(const BraceSpec& spec, const Vec2& v) {
    return lambda_of(spec, v) == Mat2::identity();
}

namespace {

bool powers_trivial(const BraceSpec& spec, std::int64_t phi_exp, std::int64_t psi_exp) {
    return mat_mul(mat_pow(spec.phi(), phi_exp), mat_pow(spec.psi(), psi_exp)) == Mat2::identity();
}

}  // namespace

Verdict check_pair(const BraceSpec& spec) {
    const Mat2& f = spec.phi();
    const Mat2& s = spec.psi();
    Verdict v;
    v.commuting = commutes(f, s);

    // exponents are read straight off the matrix entries
    v.eq4_results = {
        powers_trivial(spec, ck::sub(f.a11, 1), f.a21),
        powers_trivial(spec, f.a12, ck::sub(f.a22, 1)),
        powers_trivial(spec, ck::sub(s.a11, 1), s.a21),
        powers_trivial(spec, s.a12, ck::sub(s.a22, 1)),
    };

    // Same conditions, routed through the group: ⊖u ⊕ λ_w(u) for generators u, w.
    const Vec2 x{1, 0};
    const Vec2 y{0, 1};
    const std::array<std::pair<Vec2, const Mat2*>, 4> cases{{{x, &f}, {y, &f}, {x, &s}, {y, &s}}};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [u, lam] = cases[i];
        v.kernel_results[i] = in_lambda_kernel(spec, oplus(ominus(u), apply(*lam, u)));
    }

    v.valid = v.commuting && v.all_eq4();
    return v;
}

bool brace_axiom_holds(const BraceSpec& spec, const Vec2& a, const Vec2& b, const Vec2& c) {
    const Vec2 lhs = odot(spec, a, oplus(b, c));
    const Vec2 rhs = oplus(oplus(odot(spec, a, b), ominus(a)), odot(spec, a, c));
    return lhs == rhs;
}

bool odot_associative(const BraceSpec& spec, const Vec2& a, const Vec2& b, const Vec2& c) {
    return odot(spec, a, odot(spec, b, c)) == odot(spec, odot(spec, a, b), c);
}

HolElement hol_mul(const HolElement& h1, const HolElement& h2) {
    return {oplus(h1.g, apply(h1.f, h2.g)), mat_mul(h1.f, h2.f)};
}

bool h_lambda_closed(const BraceSpec& spec, const Vec2& a, const Vec2& b) {
    const HolElement product = hol_mul({a, lambda_of(spec, a)}, {b, lambda_of(spec, b)});
    const Vec2 ab = odot(spec, a, b);
    return product == HolElement{ab, lambda_of(spec, ab)};
}

ValidBrace::ValidBrace(const BraceSpec& spec) : spec_(spec) {
    if (!check_pair(spec_).valid) {
        throw InvalidSpec("(phi, psi) = (" + to_string(spec_.phi()) + ", " + to_string(spec_.psi()) +
                          ") does not define a brace");
    }
}

}  // namespace zbrace
