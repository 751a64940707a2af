#pragma once

#include <string>

#include "pathft/level2.hpp"

namespace pathft {

// Product-form chirp f(a) = exp(iπ ε Σ_k a²(k)) on a type-II space:
// site vector u[z′] = exp(iπ z′² / (H·Hp²)), phase reduced mod 2M.
Functional chirp_functional(const PathSpace& space);

// Product-form Gaussian g(a) = exp(-π ε Σ_k a²(k)) on a type-II space.
Functional gaussian_functional(const PathSpace& space);

// C₁ = Σ_a ε₀ exp(iπ ε Σ a²(k)) computed per site: C₁ = s^(H²) with
// s = ω Σ_{z′} exp(iπ z′²/M). Equals (-1)^(H/2) on every even lattice.
Complex chirp_constant(i64 H, i64 Hp);

// Eigenrelation (Ff)(b) = C₁·conj(f(b)) for the chirp functional, verified
// against the dense transform for every b (exhaustive; brute-force sized
// spaces only), plus the shift-invariance of the quadratic sum.
struct ChirpCheck2 {
    Complex c1;                // per-site product value
    double c1_brute_dev;       // |C₁(product) - C₁(dense enumeration)|
    double max_rel_dev;        // eigenrelation, max over all b
    double shift_invariance_dev;  // max_b |Σ_a exp(iπεΣ(a-b)²)·ε₀ - C₁|
};

ChirpCheck2 chirp_transform_check(i64 H, i64 Hp, std::uint64_t seed = 42,
                                  const TransformOptions& opts = {});

// Per-site Gaussian factor s(β) = Σ_{z′} step·exp(-π(step·z′ + i√ε·β)²),
// step = 1/(√H·Hp). β must be a multiple of ε′ = 1/Hp inside the type-II
// window. s(β) → 1 as H, Hp grow.
Complex gaussian_site_factor(i64 H, i64 Hp, double beta);

// C₂(b) = Π_k s(b(k)) for a type-II path b.
Complex gaussian_constant2(const PathFunction& b);

// Direct enumeration Σ_a ε₀ exp(-π ε Σ(a(k)+i b(k))²) for cross-checking.
Complex gaussian_constant2_brute(const PathFunction& b, i64 guard = 1'000'000);

enum class SweepQuantity { C1, C2Site, C2Full, CLevel1 };

std::string sweep_quantity_name(SweepQuantity q);

struct SweepRow {
    i64 H{0};
    i64 Hp{0};  // 0 for CLevel1 rows
    SweepQuantity quantity{SweepQuantity::C1};
    std::string b_spec;
    Complex value;
    double deviation{0.0};  // distance to the limit: (-1)^(H/2) for C1, 1 otherwise
};

// Finite-scale stand-in for the limit claims: evaluates the quantity on the
// (H, Hp) grid and reports the deviation from its limit. Rows are ordered by
// (H, Hp). For C2Site/C2Full, beta selects the constant test direction; for
// CLevel1, zp is the level-1 lattice index of p and Hp_list is ignored.
std::vector<SweepRow> convergence_sweep(SweepQuantity quantity, const std::vector<i64>& H_list,
                                        const std::vector<i64>& Hp_list, double beta = 0.0,
                                        i64 zp = 0);

// CSV with header H,Hp,quantity,b_spec,re,im,deviation (17 significant digits).
std::string sweep_csv(const std::vector<SweepRow>& rows);

// True when deviations are nonincreasing in Hp for each fixed H, treating
// values below the noise floor as equal.
bool sweep_monotone_in_hp(const std::vector<SweepRow>& rows, double floor = 1e-12);

}  // namespace pathft
