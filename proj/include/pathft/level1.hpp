#pragma once

#include <span>

#include "pathft/lattice.hpp"

namespace pathft {

// Fourier transform on functions over the level-1 lattice (N = H² points,
// step ε = 1/H):
//   (Fφ)(p)  = Σ_x ε exp(-2πi p x) φ(x)
//   (F̄φ)(p) = Σ_x ε exp(+2πi p x) φ(x)
// In index form the phase is z·w/H², reduced exactly mod H².
GridFunction forward1(const GridFunction& phi);
GridFunction inverse1(const GridFunction& phi);

// Discrete delta: H at x = 0, 0 elsewhere.
GridFunction delta1(const LatticeSpec& lattice);

// Pointwise real power of delta: H^l at x = 0, 0 elsewhere (l > 0).
GridFunction delta_pow1(const LatticeSpec& lattice, double l);

// Cyclic convolution (φ∗ψ)(x) = Σ_y ε φ(x-y) ψ(y), difference wrapped mod H².
GridFunction convolve1(const GridFunction& phi, const GridFunction& psi);

// Inner product (φ,ψ) = Σ_x ε conj(φ(x)) ψ(x).
Complex inner1(const GridFunction& phi, const GridFunction& psi);

// Pointwise product on a common lattice.
GridFunction pointwise1(const GridFunction& phi, const GridFunction& psi);

// Reflection (φ(-x)) with wrap.
GridFunction reflect1(const GridFunction& phi);

// Chirp φ₁(x) = exp(iπx²) evaluated with the phase z² reduced mod 2H².
GridFunction chirp1(const LatticeSpec& lattice);

// Gaussian φ₂(x) = exp(-πx²) on the fundamental window.
GridFunction gaussian1(const LatticeSpec& lattice);

// Two-variable function on L×L, value at (z_u, z_y) in slot (z_u+N/2)*N + (z_y+N/2).
struct Grid2D {
    LatticeSpec lattice;
    std::vector<Complex> values;

    Complex& at(i64 zu, i64 zy) {
        const i64 n = lattice.count;
        return values[static_cast<std::size_t>((zu + n / 2) * n + (zy + n / 2))];
    }
    const Complex& at(i64 zu, i64 zy) const {
        const i64 n = lattice.count;
        return values[static_cast<std::size_t>((zu + n / 2) * n + (zy + n / 2))];
    }
};

Grid2D make_grid2(const LatticeSpec& lattice);

// Both sides of the mixed two-variable transform identity
//   F_x(Σ_y ε f(x-y, y) g(y))(p) = {F_y(F_u f(u,y)(p)) ∗ F_y g}(p).
// lhs mixes the arguments before transforming; rhs transforms per argument
// and convolves in the frequency paired with y.
struct MixedPair1 {
    GridFunction lhs;
    GridFunction rhs;
};

MixedPair1 mixed_transform1(const Grid2D& f, const GridFunction& g);

// Chirp eigenrelation (Fφ₁)(p) = exp(iπ/4) conj(φ₁(p)).
struct ChirpCheck1 {
    Complex lattice_sum;  // Σ_x ε exp(iπx²), equals exp(iπ/4) on every even-H lattice
    double max_abs_dev;   // max_p |(Fφ₁)(p) - exp(iπ/4) conj(φ₁(p))|
};

ChirpCheck1 chirp_identity_check1(i64 H);

// Gaussian transform constant c(p) = Σ_x ε exp(-π(x+ip)²) for p = zp/H.
Complex gaussian_constant1(i64 H, i64 zp);

}  // namespace pathft
