#pragma once

#include <vector>

#include "pathft/lattice.hpp"

namespace pathft {

// The finite path space X = {a : L → L′}. The domain is the level-1 site
// lattice (H² sites); the codomain is a level-2 lattice whose kind selects
// the transform variant (type I: plain pairing, type II: ε-weighted).
struct PathSpace {
    LatticeSpec domain;
    LatticeSpec codomain;

    i64 sites() const { return domain.count; }
    // Digits per site; also the kernel period of exp(-2πi·pairing) in the
    // integer accumulator for both variants.
    i64 period() const { return codomain.count; }
    bool type2() const { return codomain.kind == LatticeKind::Level2TypeII; }

    bool operator==(const PathSpace&) const = default;
};

PathSpace make_path_space(LatticeKind variant, i64 H, i64 Hp);

// Element of X stored as one codomain digit z′ per site, each wrapped into
// [-period/2, period/2); the value at site k is ε′·digits[k].
struct PathFunction {
    PathSpace space;
    std::vector<i64> digits;
};

// Direction function with raw (unwrapped) integer digits; ε′b ∈ X.
struct IntegerPath {
    PathSpace space;
    std::vector<i64> digits;
};

// Wraps digits on construction. Throws SpaceMismatch on wrong digit count.
PathFunction make_path(const PathSpace& space, std::vector<i64> digits);
PathFunction zero_path(const PathSpace& space);
IntegerPath make_direction(const PathSpace& space, std::vector<i64> digits);

bool is_zero(const PathFunction& a);

// |X| = period^sites. Throws Overflow if the result exceeds 2^63-1.
i64 path_count(const PathSpace& space);

// Mixed-radix bijection onto [0, path_count): site 0 least significant,
// digit offset +period/2.
i64 rank(const PathFunction& a);
PathFunction unrank(i64 r, const PathSpace& space);

PathFunction path_add(const PathFunction& a, const PathFunction& b);
PathFunction path_sub(const PathFunction& a, const PathFunction& b);
PathFunction path_negate(const PathFunction& a);

// The element ε′b of X: b's digits wrapped into the legal range.
PathFunction path_scale_dir(const IntegerPath& b);

// Bilinear pairing entering the transform kernel, as an exact real:
//   type I:  Σ_k a(k)b(k)        = S / Hp²
//   type II: ε Σ_k a(k)b(k)      = S / (H·Hp²)
// with the integer accumulator S = Σ_k z′ᵃ(k) z′ᵇ(k). In both variants the
// value equals S / period.
double pairing(const PathFunction& a, const PathFunction& b);

// S mod period in [0, period): the exact kernel phase index, invariant
// under the digit wrap.
i64 pairing_phase(const PathFunction& a, const PathFunction& b);

// Same accumulator against a raw direction: S = Σ_k z′ᵃ(k)·b(k). This is the
// phase index of exp(2πi ε′⟨a,b⟩) appearing in the transform shift step.
i64 pairing_phase(const PathFunction& a, const IntegerPath& b);

}  // namespace pathft
