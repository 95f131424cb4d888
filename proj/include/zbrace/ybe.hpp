#pragma once

// Set-theoretic Yang-Baxter solutions built from a brace:
//   r(x, y) = (⊖x ⊕ (x ⊙ y), (⊖x ⊕ (x ⊙ y))^-1 ⊙ x ⊙ y)
// with the inverse taken in (Z^2, ⊙).

#include <array>
#include <cstdint>
#include <vector>

#include "zbrace/brace.hpp"

namespace zbrace {

struct PairZ2 {
    Vec2 first;
    Vec2 second;

    bool operator==(const PairZ2&) const = default;
};

using Triple = std::array<Vec2, 3>;

PairZ2 r_map(const ValidBrace& brace, const Vec2& x, const Vec2& y);

// (r×id)(id×r)(r×id) == (id×r)(r×id)(id×r) on (x, y, z)
bool ybe_holds(const ValidBrace& brace, const Vec2& x, const Vec2& y, const Vec2& z);

// r(r(x, y)) == (x, y)
bool involutive_at(const ValidBrace& brace, const Vec2& x, const Vec2& y);

// Left half: v -> first(r(x, v)) equals λ_x, inverted explicitly and round-tripped at y.
// Right half: w -> second(r(w, y)) has no collision with w = x among all w in [-box, box]^2.
bool nondegenerate_at(const ValidBrace& brace, const Vec2& x, const Vec2& y, std::int64_t box = 4);

// Deterministic triples with coordinates in [-box, box], drawn from mt19937_64(seed).
std::vector<Triple> sample_triples(std::uint64_t seed, std::int64_t box, std::size_t count);

struct YbeReport {
    BraceSpec spec;
    std::uint64_t seed = 0;
    std::int64_t box = 0;
    std::size_t samples = 0;
    std::vector<Triple> ybe_failures;
    std::vector<PairZ2> involutivity_failures;
    std::vector<PairZ2> nondegeneracy_failures;

    bool passed() const {
        return ybe_failures.empty() && involutivity_failures.empty() && nondegeneracy_failures.empty();
    }
};

// Runs all three checks on `samples` seeded triples; involutivity and
// non-degeneracy use the (x, y) part of each triple. Overflow counts as a failure.
YbeReport run_ybe_suite(const ValidBrace& brace, std::size_t samples, std::uint64_t seed,
                        std::int64_t box);

}  // namespace zbrace
