#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "pathft/errors.hpp"

namespace pathft {

using Complex = std::complex<double>;
using i64 = std::int64_t;

// Which lattice construction an instance realizes.
//   Level1:      points εz, ε = 1/H, z in [-H²/2, H²/2)        (domain of functions)
//   Level2TypeI: points ε′z′, ε′ = 1/Hp, z′ in [-Hp²/2, Hp²/2)  (codomain, plain pairing)
//   Level2TypeII: same step, wider window z′ in [-H·Hp²/2, H·Hp²/2) (codomain, ε-weighted pairing)
enum class LatticeKind { Level1, Level2TypeI, Level2TypeII };

struct LatticeSpec {
    LatticeKind kind{LatticeKind::Level1};
    i64 H{0};      // level-1 resolution (even)
    i64 Hp{0};     // level-2 resolution (even); 0 for Level1
    i64 count{0};  // number of lattice points

    // Step denominator: points are z/den for integer z.
    i64 step_den() const { return kind == LatticeKind::Level1 ? H : Hp; }
    double step() const { return 1.0 / static_cast<double>(step_den()); }
    double halfwidth() const {
        return static_cast<double>(count) / static_cast<double>(2 * step_den());
    }
    // Real coordinate of index z, exact rational z/den rounded once.
    double point(i64 z) const {
        return static_cast<double>(z) / static_cast<double>(step_den());
    }

    bool operator==(const LatticeSpec&) const = default;
};

// Build a validated lattice. Hp is required for the Level2 kinds and must be
// absent for Level1. Throws OddParameter, MissingParameter, OutOfRange.
LatticeSpec make_lattice(LatticeKind kind, i64 H, std::optional<i64> Hp = std::nullopt);

// Reduce z into [-count/2, count/2) modulo count.
i64 wrap(const LatticeSpec& lattice, i64 z);

// Complex-valued function on a lattice; slot i holds the value at z = i - count/2.
struct GridFunction {
    LatticeSpec lattice;
    std::vector<Complex> values;

    Complex& at(i64 z) { return values[static_cast<std::size_t>(z + lattice.count / 2)]; }
    const Complex& at(i64 z) const {
        return values[static_cast<std::size_t>(z + lattice.count / 2)];
    }
};

// Zero-initialized grid function.
GridFunction make_grid(const LatticeSpec& lattice);

// The e-map: evaluate phi at an arbitrary index by wrapping it into the
// fundamental window.
Complex extend_periodic(const GridFunction& phi, i64 z);

}  // namespace pathft
