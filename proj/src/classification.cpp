#include "zbrace/classification.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "zbrace/checked.hpp"
#include "zbrace/errors.hpp"

namespace zbrace {

namespace ck = checked;

namespace {

constexpr Mat2 kE = Mat2::identity();
constexpr Mat2 kMinusE{-1, 0, 0, -1};

struct RowInfo {
    RowLabel label;
    std::string_view name;
    int det_phi;
    int det_psi;
};

constexpr std::array<RowInfo, 12> kRowInfo{{
    {RowLabel::R1_1, "1.1", 1, 1},   {RowLabel::R1_2, "1.2", 1, 1},
    {RowLabel::R1_3, "1.3", 1, 1},   {RowLabel::R1_4, "1.4", 1, 1},
    {RowLabel::R1_5, "1.5", 1, 1},   {RowLabel::R1_6, "1.6", 1, 1},
    {RowLabel::R2_1, "2.1", 1, -1},  {RowLabel::R2_2, "2.2", 1, -1},
    {RowLabel::R3_1, "3.1", -1, 1},  {RowLabel::R3_2, "3.2", -1, 1},
    {RowLabel::R4_1, "4.1", -1, -1}, {RowLabel::R4_2, "4.2", -1, -1},
}};

const RowInfo& info(RowLabel label) { return kRowInfo[static_cast<std::size_t>(label)]; }

std::int64_t need(const std::optional<std::int64_t>& v, const char* name, RowLabel label) {
    if (!v) throw BadParams(std::string("row ") + std::string(row_name(label)) + " needs parameter " + name);
    return *v;
}

int need_sign(const std::optional<int>& v, const char* name, RowLabel label) {
    if (!v) throw BadParams(std::string("row ") + std::string(row_name(label)) + " needs parameter " + name);
    if (*v != 1 && *v != -1) throw BadParams(std::string(name) + " must be +1 or -1");
    return *v;
}

std::int64_t exact_sqrt(std::int64_t radicand) {
    if (radicand < 0) {
        throw IntegralityError("radicand " + std::to_string(radicand) + " is negative");
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(radicand)));
    while (r > 0 && r * r > radicand) --r;
    while ((r + 1) * (r + 1) <= radicand) ++r;
    if (r * r != radicand) {
        throw IntegralityError("radicand " + std::to_string(radicand) + " is not a perfect square");
    }
    return r;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
    if (den == 0) throw BadParams("zero denominator");
    if (num % den != 0) {
        throw IntegralityError(std::to_string(num) + "/" + std::to_string(den) + " is not an integer");
    }
    return num / den;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

// Order-3 matrix with the given off-diagonal entries, trace -1, diagonal (-1±s)/2.
// With top = true the +s lands top-left.
Mat2 order3_with(std::int64_t off12, std::int64_t off21, std::int64_t pq, int eps, bool top) {
    const std::int64_t s = exact_sqrt(ck::sub(-3, ck::mul(12, pq)));
    const std::int64_t plus = exact_div(ck::add(-1, ck::mul(eps, s)), 2);
    const std::int64_t minus = exact_div(ck::sub(-1, ck::mul(eps, s)), 2);
    return top ? Mat2{plus, off12, off21, minus} : Mat2{minus, off12, off21, plus};
}

// [[εs, off12], [off21, -εs]] with s^2 = 1 - off12*off21, i.e. det -1, trace 0.
Mat2 involution_with(std::int64_t off12, std::int64_t off21, int eps) {
    const std::int64_t s = exact_sqrt(ck::sub(1, ck::mul(off12, off21)));
    const std::int64_t d = ck::mul(eps, s);
    return {d, off12, off21, ck::neg(d)};
}

BraceSpec generate_unchecked(RowLabel label, const RowParams& pr) {
    switch (label) {
        case RowLabel::R1_1: {
            const int s1 = need_sign(pr.sign1, "sign1", label);
            const int s2 = need_sign(pr.sign2, "sign2", label);
            return {s1 == 1 ? kE : kMinusE, s2 == 1 ? kE : kMinusE};
        }
        case RowLabel::R1_2: {
            const auto m = need(pr.m, "m", label);
            const auto p = need(pr.p, "p", label);
            const auto q = need(pr.q, "q", label);
            if (gcd64(p, q) != 1) {
                throw GcdError("row 1.2 needs gcd(p, q) = 1, got p=" + std::to_string(p) +
                               " q=" + std::to_string(q));
            }
            const auto mpq = ck::mul(ck::mul(m, p), q);
            const auto mp2q = ck::mul(mpq, p);
            const auto mpq2 = ck::mul(mpq, q);
            const auto mp3 = ck::mul(ck::mul(ck::mul(m, p), p), p);
            const auto mq3 = ck::mul(ck::mul(ck::mul(m, q), q), q);
            return {Mat2{ck::add(1, mp2q), mpq2, ck::neg(mp3), ck::sub(1, mp2q)},
                    Mat2{ck::add(1, mpq2), mq3, ck::neg(mp2q), ck::sub(1, mpq2)}};
        }
        case RowLabel::R1_3: {
            const auto p = need(pr.p, "p", label);
            const auto q = need(pr.q, "q", label);
            const int eps = need_sign(pr.sign1, "sign1", label);
            return {kE, order3_with(q, ck::mul(3, p), ck::mul(p, q), eps, false)};
        }
        case RowLabel::R1_4: {
            const auto p = need(pr.p, "p", label);
            const auto q = need(pr.q, "q", label);
            const int eps = need_sign(pr.sign1, "sign1", label);
            return {order3_with(ck::mul(3, p), q, ck::mul(p, q), eps, true), kE};
        }
        case RowLabel::R1_5: {
            const auto m = need(pr.m, "m", label);
            const auto n = need(pr.n, "n", label);
            if (n == m) throw BadParams("row 1.5 needs n != m");
            const auto num = ck::add(ck::add(ck::add(1, n), ck::mul(2, m)), ck::mul(3, ck::mul(m, n)));
            const auto f11 = exact_div(num, ck::sub(n, m));
            const Mat2 phi{f11, ck::add(ck::add(2, ck::mul(3, n)), f11),
                           ck::sub(ck::add(1, ck::mul(3, m)), f11), ck::sub(-1, f11)};
            return {phi, phi};
        }
        case RowLabel::R1_6: {
            const auto m = need(pr.m, "m", label);
            const auto n = need(pr.n, "n", label);
            const auto den = ck::add(ck::add(1, m), n);
            if (den == 0) throw BadParams("row 1.6 needs 1 + m + n != 0");
            const auto num = ck::add(ck::add(ck::mul(3, ck::mul(m, n)), m), n);
            const auto f11 = exact_div(num, den);
            const Mat2 phi{f11, ck::sub(ck::add(1, ck::mul(3, n)), f11),
                           ck::add(ck::sub(-1, ck::mul(3, m)), f11), ck::sub(-1, f11)};
            if (!is_unimodular(phi)) throw IntegralityError("row 1.6 parameters give det != 1");
            return {phi, mat_inv(phi)};
        }
        case RowLabel::R2_1: {
            const auto p = need(pr.p, "p", label);
            const auto q = need(pr.q, "q", label);
            const int eps = need_sign(pr.sign1, "sign1", label);
            return {kE, involution_with(q, ck::mul(2, p), eps)};
        }
        case RowLabel::R2_2: {
            const auto p = need(pr.p, "p", label);
            const auto q = need(pr.q, "q", label);
            const int eps = need_sign(pr.sign1, "sign1", label);
            return {kMinusE, involution_with(ck::mul(2, p), ck::mul(2, q), eps)};
        }
        case RowLabel::R3_1: {
            const auto p = need(pr.p, "p", label);
            const auto q = need(pr.q, "q", label);
            const int eps = need_sign(pr.sign1, "sign1", label);
            return {involution_with(ck::mul(2, p), q, eps), kE};
        }
        case RowLabel::R3_2: {
            const auto p = need(pr.p, "p", label);
            const auto q = need(pr.q, "q", label);
            const int eps = need_sign(pr.sign1, "sign1", label);
            return {involution_with(ck::mul(2, p), ck::mul(2, q), eps), kMinusE};
        }
        case RowLabel::R4_1: {
            Mat2 phi;
            if (pr.n) {
                const auto m = need(pr.m, "m", label);
                const auto n = *pr.n;
                if (n == m) throw BadParams("row 4.1 with (m, n) needs n != m");
                const auto den = ck::sub(n, m);
                const auto mn2 = ck::mul(2, ck::mul(m, n));
                const auto f11 = exact_div(ck::add(ck::add(m, n), mn2), den);
                phi = {f11, exact_div(ck::mul(ck::mul(2, n), ck::add(1, n)), den),
                       exact_div(ck::mul(ck::mul(-2, m), ck::add(1, m)), den), ck::neg(f11)};
            } else if (pr.p) {
                const auto p = *pr.p;
                const int eps = need_sign(pr.sign1, "sign1", label);
                phi = {p, ck::add(p, eps), ck::sub(eps, p), ck::neg(p)};
            } else {
                const auto m = need(pr.m, "m", label);
                phi = {ck::add(1, m), ck::add(2, m), ck::neg(m), ck::sub(-1, m)};
            }
            if (!is_unimodular(phi)) throw IntegralityError("row 4.1 parameters give |det| != 1");
            return {phi, phi};
        }
        case RowLabel::R4_2: {
            const auto m = need(pr.m, "m", label);
            const auto p = need(pr.p, "p", label);
            const int eps = need_sign(pr.sign1, "sign1", label);
            const Mat2 phi = involution_with(ck::mul(2, m), ck::mul(2, p), eps);
            return {phi, mat_neg(phi)};
        }
    }
    throw BadParams("unknown row");
}

bool in_block(RowLabel label, const BraceSpec& spec) {
    const auto& ri = info(label);
    return mat_det(spec.phi()) == ri.det_phi && mat_det(spec.psi()) == ri.det_psi;
}

bool congruent_any(const Mat2& a, std::int64_t k, std::initializer_list<Mat2> targets) {
    return std::any_of(targets.begin(), targets.end(),
                       [&](const Mat2& t) { return congruent_mod(a, t, k); });
}

}  // namespace

std::string_view row_name(RowLabel label) { return info(label).name; }

std::optional<RowLabel> parse_row(std::string_view name) {
    for (const auto& ri : kRowInfo) {
        if (ri.name == name) return ri.label;
    }
    return std::nullopt;
}

std::pair<int, int> row_block(RowLabel label) { return {info(label).det_phi, info(label).det_psi}; }

std::string to_string(const RowParams& pr) {
    std::ostringstream os;
    const char* sep = "";
    auto put = [&](const char* name, const auto& v) {
        if (v) {
            os << sep << name << "=" << *v;
            sep = " ";
        }
    };
    put("m", pr.m);
    put("p", pr.p);
    put("q", pr.q);
    put("n", pr.n);
    put("sign1", pr.sign1);
    put("sign2", pr.sign2);
    return os.str();
}

BraceSpec generate_row(RowLabel label, const RowParams& params) {
    BraceSpec spec = generate_unchecked(label, params);
    assert(check_pair(spec).valid);
    return spec;
}

std::vector<RowParams> row_parameter_grid(RowLabel label, std::int64_t radius) {
    std::vector<RowParams> out;
    const std::array<int, 2> signs{1, -1};
    auto range = [&](auto&& fn) {
        for (std::int64_t v = -radius; v <= radius; ++v) fn(v);
    };
    switch (label) {
        case RowLabel::R1_1:
            for (int s1 : signs)
                for (int s2 : signs) out.push_back({.sign1 = s1, .sign2 = s2});
            break;
        case RowLabel::R1_2:
            range([&](auto m) { range([&](auto p) { range([&](auto q) {
                out.push_back({.m = m, .p = p, .q = q});
            }); }); });
            break;
        case RowLabel::R1_3: case RowLabel::R1_4: case RowLabel::R2_1: case RowLabel::R2_2:
        case RowLabel::R3_1: case RowLabel::R3_2:
            range([&](auto p) { range([&](auto q) {
                for (int s : signs) out.push_back({.p = p, .q = q, .sign1 = s});
            }); });
            break;
        case RowLabel::R1_5: case RowLabel::R1_6:
            range([&](auto m) { range([&](auto n) { out.push_back({.m = m, .n = n}); }); });
            break;
        case RowLabel::R4_1:
            range([&](auto m) { out.push_back({.m = m}); });
            range([&](auto p) {
                for (int s : signs) out.push_back({.p = p, .sign1 = s});
            });
            range([&](auto m) { range([&](auto n) { out.push_back({.m = m, .n = n}); }); });
            break;
        case RowLabel::R4_2:
            range([&](auto m) { range([&](auto p) {
                for (int s : signs) out.push_back({.m = m, .p = p, .sign1 = s});
            }); });
            break;
    }
    return out;
}

std::optional<RowParams> recover_row12(const BraceSpec& spec) {
    const Mat2& phi = spec.phi();
    const Mat2& psi = spec.psi();
    if (phi == kE && psi == kE) return RowParams{.m = 0, .p = 1, .q = 0};
    if (mat_det(phi) != 1 || mat_det(psi) != 1) return std::nullopt;

    // m != 0 here, and |m| max(|p|,|q|)^3 is one of the entries mp^3, mq^3.
    const std::int64_t bound = ck::add(std::max(phi.max_abs_entry(), psi.max_abs_entry()), 1);
    std::int64_t reach = 0;
    while (ck::mul(ck::mul(reach + 1, reach + 1), reach + 1) <= bound) ++reach;

    for (std::int64_t p = 0; p <= reach; ++p) {
        for (std::int64_t q = -reach; q <= reach; ++q) {
            if (p == 0 && q <= 0) continue;
            if (gcd64(p, q) != 1) continue;
            // phi21 = -m p^3, psi12 = m q^3
            const std::int64_t cube = p != 0 ? p * p * p : q * q * q;
            const std::int64_t entry = p != 0 ? ck::neg(phi.a21) : psi.a12;
            if (entry == 0 || entry % cube != 0) continue;
            const RowParams candidate{.m = entry / cube, .p = p, .q = q};
            try {
                if (generate_unchecked(RowLabel::R1_2, candidate) == spec) return candidate;
            } catch (const OverflowError&) {
            }
        }
    }
    return std::nullopt;
}

bool row_matches(RowLabel label, const BraceSpec& spec) {
    if (!in_block(label, spec)) return false;
    const Mat2& phi = spec.phi();
    const Mat2& psi = spec.psi();
    switch (label) {
        case RowLabel::R1_1:
            return (phi == kE || phi == kMinusE) && (psi == kE || psi == kMinusE);
        case RowLabel::R1_2:
            return recover_row12(spec).has_value();
        case RowLabel::R1_3:
            return phi == kE && congruent_mod(psi, kE, 3, {false, true, false, false}) &&
                   mat_trace(psi) == -1;
        case RowLabel::R1_4:
            return psi == kE && congruent_mod(phi, kE, 3, {false, false, true, false}) &&
                   mat_trace(phi) == -1;
        case RowLabel::R1_5:
            return psi == phi && mat_trace(phi) == -1 &&
                   congruent_any(phi, 3, {Mat2{0, 2, 1, 2}, Mat2{2, 1, 2, 0}, kE});
        case RowLabel::R1_6:
            return psi == mat_inv(phi) && mat_trace(phi) == -1 &&
                   congruent_any(phi, 3, {Mat2{0, 1, 2, 2}, Mat2{2, 2, 1, 0}, kE});
        case RowLabel::R2_1:
            return phi == kE && congruent_mod(psi, kE, 2, {false, true, false, false}) &&
                   mat_trace(psi) == 0;
        case RowLabel::R2_2:
            return phi == kMinusE && congruent_mod(psi, kE, 2) && mat_trace(psi) == 0;
        case RowLabel::R3_1:
            return psi == kE && congruent_mod(phi, kE, 2, {false, false, true, false}) &&
                   mat_trace(phi) == 0;
        case RowLabel::R3_2:
            return psi == kMinusE && congruent_mod(phi, kE, 2) && mat_trace(phi) == 0;
        case RowLabel::R4_1:
            return psi == phi && mat_trace(phi) == 0 && congruent_any(phi, 2, {kE, Mat2{0, 1, 1, 0}});
        case RowLabel::R4_2:
            return psi == mat_neg(phi) && mat_trace(phi) == 0 && congruent_mod(phi, kE, 2);
    }
    return false;
}

std::vector<RowLabel> row_membership(const BraceSpec& spec) {
    std::vector<RowLabel> out;
    for (RowLabel label : kAllRows) {
        if (row_matches(label, spec)) out.push_back(label);
    }
    return out;
}

std::pair<RowParams, BraceSpec> representative(RowLabel label) {
    const BraceSpec trivial{kE, kE};
    std::optional<std::pair<RowParams, BraceSpec>> best;
    auto key = [](const BraceSpec& s) {
        return std::make_pair(std::max(s.phi().max_abs_entry(), s.psi().max_abs_entry()), s);
    };
    for (const RowParams& params : row_parameter_grid(label, 3)) {
        try {
            BraceSpec spec = generate_row(label, params);
            if (spec == trivial) continue;
            if (!best || key(spec) < key(best->second)) best.emplace(params, spec);
        } catch (const Error&) {
        }
    }
    if (!best) throw BadParams("no instance of row " + std::string(row_name(label)) + " in the grid");
    return *best;
}

std::vector<Mat2> enumerate_unimodular(std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("bound must be at least 1");
    std::vector<Mat2> out;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            for (std::int64_t c = -bound; c <= bound; ++c)
                for (std::int64_t d = -bound; d <= bound; ++d) {
                    const Mat2 m{a, b, c, d};
                    if (is_unimodular(m)) out.push_back(m);
                }
    return out;
}

namespace {

struct PhiSlice {
    std::uint64_t valid = 0;
    std::uint64_t commuting = 0;
    std::vector<std::pair<BraceSpec, std::vector<RowLabel>>> valid_members;
    std::vector<BraceSpec> unmatched;
    std::vector<RowInstance> invalid_rows;
    std::vector<BraceSpec> kernel_form;
    std::vector<BraceSpec> overflow;
};

PhiSlice scan_phi(const Mat2& phi, const std::vector<Mat2>& all) {
    PhiSlice slice;
    for (const Mat2& psi : all) {
        const BraceSpec spec{phi, psi};
        try {
            const Verdict v = check_pair(spec);
            if (v.commuting) {
                ++slice.commuting;
                if (v.all_eq4() != v.all_kernel()) slice.kernel_form.push_back(spec);
            }
            std::vector<RowLabel> rows = row_membership(spec);
            if (v.valid) {
                ++slice.valid;
                if (rows.empty()) slice.unmatched.push_back(spec);
                slice.valid_members.emplace_back(spec, std::move(rows));
            } else {
                for (RowLabel r : rows) slice.invalid_rows.push_back({r, spec});
            }
        } catch (const OverflowError&) {
            slice.overflow.push_back(spec);
        }
    }
    return slice;
}

}  // namespace

SearchReport exhaustive_search(std::int64_t bound, unsigned threads) {
    const std::vector<Mat2> all = enumerate_unimodular(bound);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(all.size()));

    std::vector<PhiSlice> slices(all.size());
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < all.size(); i += threads) slices[i] = scan_phi(all[i], all);
            });
        }
    }

    SearchReport report;
    report.bound = bound;
    report.candidates = static_cast<std::uint64_t>(all.size()) * all.size();
    for (RowLabel r : kAllRows) report.row_histogram[r] = 0;

    std::set<RowInstance> invalid;
    std::vector<std::pair<BraceSpec, std::vector<RowLabel>>> members;
    for (PhiSlice& s : slices) {
        report.valid_pairs += s.valid;
        report.commuting_pairs += s.commuting;
        for (auto& vm : s.valid_members) {
            for (RowLabel r : vm.second) ++report.row_histogram[r];
            members.push_back(std::move(vm));
        }
        report.unmatched_valid.insert(report.unmatched_valid.end(), s.unmatched.begin(), s.unmatched.end());
        invalid.insert(s.invalid_rows.begin(), s.invalid_rows.end());
        report.kernel_form_mismatches.insert(report.kernel_form_mismatches.end(), s.kernel_form.begin(), s.kernel_form.end());
        report.overflow_pairs.insert(report.overflow_pairs.end(), s.overflow.begin(), s.overflow.end());
    }

    // Generator side: every family instance that lands in the box must be valid.
    // Rational families need m, n up to about 2*bound+1 to reach every small output.
    const std::int64_t radius = 2 * bound + 2;
    std::set<RowInstance> generated;
    for (RowLabel label : kAllRows) {
        for (const RowParams& params : row_parameter_grid(label, radius)) {
            std::optional<BraceSpec> spec;
            try {
                spec = generate_unchecked(label, params);
            } catch (const Error&) {
                continue;
            }
            if (std::max(spec->phi().max_abs_entry(), spec->psi().max_abs_entry()) > bound) continue;
            if (!generated.insert({label, *spec}).second) continue;
            bool valid = false;
            try {
                valid = check_pair(*spec).valid;
            } catch (const OverflowError&) {
            }
            if (!valid) invalid.insert({label, *spec});
        }
    }
    report.generator_instances = generated.size();
    report.invalid_row_instances.assign(invalid.begin(), invalid.end());

    for (const auto& [spec, rows] : members) {
        for (RowLabel r : rows) {
            if (!generated.contains({r, spec})) report.generator_uncovered.push_back({r, spec});
        }
    }
    std::sort(report.generator_uncovered.begin(), report.generator_uncovered.end());
    return report;
}

OrdersReport orders_crosscheck(std::int64_t bound) {
    OrdersReport report;
    report.bound = bound;
    for (const Mat2& m : enumerate_unimodular(bound)) {
        ++report.examined;
        const MatOrder predicted = order_by_predicate(m);
        ++report.histogram[predicted.to_string()];
        std::string iterated;
        try {
            iterated = order_by_iteration(m).to_string();
        } catch (const OverflowError&) {
            iterated = "overflow";
        }
        if (iterated != predicted.to_string()) {
            report.disagreements.push_back({m, predicted.to_string(), iterated});
        }
    }
    return report;
}

}  // namespace zbrace
