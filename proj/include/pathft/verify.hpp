#pragma once

#include "pathft/level2.hpp"
#include "pathft/report.hpp"

namespace pathft {

struct VerifyOptions {
    std::uint64_t seed = 42;
    int trials = 100;        // random functions per level-1 identity
    int pairs = 20;          // (f,g) or (f,b) pairs for the level-2 suites
    double tol_rel = 1e-9;   // identity tolerance (relative, 1-floored)
    i64 guard = 1'000'000;
    int threads = 0;
};

// The level-1 identity list: delta = F1 = conjF1, unitarity, F^4 = 1,
// conjF F = F conjF = 1, the delta/commutativity/convolution-theorem
// identities, plus F(delta^l) = H^(l-1) (checked at 1e-12).
VerificationReport verify_level1(i64 H, const VerifyOptions& opts = {});

// Mixed two-variable transform identity at level 1.
VerificationReport verify_mixed1(i64 H, const VerifyOptions& opts = {});

// Functional-transform identity suite (delta/unitarity/inversion/convolution
// theorems and F(delta^l) = delta(0)^(l-1)) on one path space.
VerificationReport verify_level2(const PathSpace& space, const VerifyOptions& opts = {});

// Divided-difference identities: eigenfactor relations for D± and λ_b, the
// polar form of λ_b, and the summation-by-parts adjoint. The printed-variant
// adjoint sign is evaluated and reported as informational only.
VerificationReport verify_diff2(const PathSpace& space, const VerifyOptions& opts = {});

// Mixed transform identity on a type-II space with delta, ones and random
// separable kernels.
VerificationReport verify_mixed2(const PathSpace& space, const VerifyOptions& opts = {});

}  // namespace pathft
