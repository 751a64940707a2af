#pragma once

#include <cstdint>

#include "pathft/level2.hpp"

namespace pathft {

// SplitMix64 (Steele/Lea/Flood mixing constants). Chosen over the standard
// distributions so that seeded streams are identical on every platform;
// the exact algorithm is part of the report-reproducibility contract.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1): top 53 bits scaled by 2^-53.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [-1, 1).
    double uniform_pm1() { return 2.0 * uniform01() - 1.0; }
};

// Random complex grid function, re/im uniform in [-1, 1).
inline GridFunction random_grid(const LatticeSpec& lattice, SplitMix64& rng) {
    GridFunction phi = make_grid(lattice);
    for (Complex& v : phi.values) {
        const double re = rng.uniform_pm1();
        const double im = rng.uniform_pm1();
        v = {re, im};
    }
    return phi;
}

// Random dense functional, re/im uniform in [-1, 1).
inline Functional random_dense2(const PathSpace& space, SplitMix64& rng,
                                i64 guard = 1'000'000) {
    const i64 total = path_count(space);
    if (total > guard) throw SpaceTooLarge("random_dense2: path count exceeds guard");
    std::vector<Complex> values(static_cast<std::size_t>(total));
    for (Complex& v : values) {
        const double re = rng.uniform_pm1();
        const double im = rng.uniform_pm1();
        v = {re, im};
    }
    return make_dense(space, std::move(values));
}

// Random product functional, per-site vectors with re/im uniform in [-1, 1).
inline Functional random_product2(const PathSpace& space, SplitMix64& rng) {
    std::vector<std::vector<Complex>> sites(static_cast<std::size_t>(space.sites()));
    for (auto& site : sites) {
        site.resize(static_cast<std::size_t>(space.period()));
        for (Complex& v : site) {
            const double re = rng.uniform_pm1();
            const double im = rng.uniform_pm1();
            v = {re, im};
        }
    }
    return make_product(space, std::move(sites));
}

// Random direction with raw digits in [-period/2, period/2).
inline IntegerPath random_direction(const PathSpace& space, SplitMix64& rng) {
    const i64 m = space.period();
    std::vector<i64> digits(static_cast<std::size_t>(space.sites()));
    for (i64& d : digits) {
        d = static_cast<i64>(rng.next() % static_cast<std::uint64_t>(m)) - m / 2;
    }
    return make_direction(space, std::move(digits));
}

}  // namespace pathft
