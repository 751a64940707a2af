#include "pathft/lattice.hpp"

namespace pathft {

namespace {

void check_even_resolution(i64 value, const char* name) {
    if (value % 2 != 0) {
        throw OddParameter(std::string(name) + " must be even, got " + std::to_string(value));
    }
    if (value < 2) {
        throw OutOfRange(std::string(name) + " must be >= 2, got " + std::to_string(value));
    }
}

constexpr i64 kMaxCount = 2147483647;  // 2^31 - 1

i64 checked_count(i64 a, i64 b, i64 c = 1) {
    // a*b*c with the 2^31-1 cap; inputs are small positives.
    i64 p = a * b;
    if (p > kMaxCount / c) {
        throw OutOfRange("lattice point count exceeds 2^31-1");
    }
    return p * c;
}

}  // namespace

LatticeSpec make_lattice(LatticeKind kind, i64 H, std::optional<i64> Hp) {
    check_even_resolution(H, "H");
    LatticeSpec spec;
    spec.kind = kind;
    spec.H = H;
    if (kind == LatticeKind::Level1) {
        if (Hp.has_value()) {
            throw Error("Hp must be absent for a level-1 lattice");
        }
        spec.Hp = 0;
        spec.count = checked_count(H, H);
        return spec;
    }
    if (!Hp.has_value()) {
        throw MissingParameter("Hp is required for level-2 lattice kinds");
    }
    check_even_resolution(*Hp, "Hp");
    spec.Hp = *Hp;
    spec.count = kind == LatticeKind::Level2TypeI ? checked_count(*Hp, *Hp)
                                                  : checked_count(*Hp, *Hp, H);
    return spec;
}

i64 wrap(const LatticeSpec& lattice, i64 z) {
    const i64 n = lattice.count;
    i64 m = (z + n / 2) % n;
    if (m < 0) m += n;
    return m - n / 2;
}

GridFunction make_grid(const LatticeSpec& lattice) {
    GridFunction phi;
    phi.lattice = lattice;
    phi.values.assign(static_cast<std::size_t>(lattice.count), Complex{0.0, 0.0});
    return phi;
}

Complex extend_periodic(const GridFunction& phi, i64 z) {
    return phi.at(wrap(phi.lattice, z));
}

}  // namespace pathft
