#include "pathft/pathspace.hpp"

#include <limits>

namespace pathft {

namespace {

i64 wrap_digit(i64 z, i64 m) {
    i64 r = (z + m / 2) % m;
    if (r < 0) r += m;
    return r - m / 2;
}

void require_same_space(const PathSpace& a, const PathSpace& b, const char* op) {
    if (!(a == b)) throw SpaceMismatch(std::string(op) + ": path-space mismatch");
}

void require_digit_count(const PathSpace& space, std::size_t n, const char* op) {
    if (n != static_cast<std::size_t>(space.sites())) {
        throw SpaceMismatch(std::string(op) + ": expected " + std::to_string(space.sites()) +
                            " digits, got " + std::to_string(n));
    }
}

}  // namespace

PathSpace make_path_space(LatticeKind variant, i64 H, i64 Hp) {
    if (variant == LatticeKind::Level1) {
        throw WrongLatticeKind("make_path_space: codomain must be a level-2 kind");
    }
    PathSpace space;
    space.domain = make_lattice(LatticeKind::Level1, H);
    space.codomain = make_lattice(variant, H, Hp);
    return space;
}

PathFunction make_path(const PathSpace& space, std::vector<i64> digits) {
    require_digit_count(space, digits.size(), "make_path");
    const i64 m = space.period();
    for (i64& d : digits) d = wrap_digit(d, m);
    return {space, std::move(digits)};
}

PathFunction zero_path(const PathSpace& space) {
    return {space, std::vector<i64>(static_cast<std::size_t>(space.sites()), 0)};
}

IntegerPath make_direction(const PathSpace& space, std::vector<i64> digits) {
    require_digit_count(space, digits.size(), "make_direction");
    return {space, std::move(digits)};
}

bool is_zero(const PathFunction& a) {
    for (i64 d : a.digits)
        if (d != 0) return false;
    return true;
}

i64 path_count(const PathSpace& space) {
    const i64 m = space.period();
    i64 n = 1;
    for (i64 k = 0; k < space.sites(); ++k) {
        if (n > std::numeric_limits<i64>::max() / m) {
            throw Overflow("path_count exceeds 2^63-1");
        }
        n *= m;
    }
    return n;
}

i64 rank(const PathFunction& a) {
    const i64 m = a.space.period();
    i64 r = 0;
    i64 weight = 1;
    for (i64 d : a.digits) {
        r += (d + m / 2) * weight;
        weight *= m;
    }
    return r;
}

PathFunction unrank(i64 r, const PathSpace& space) {
    if (r < 0 || r >= path_count(space)) throw OutOfRange("unrank: rank out of range");
    const i64 m = space.period();
    std::vector<i64> digits(static_cast<std::size_t>(space.sites()));
    for (i64& d : digits) {
        d = r % m - m / 2;
        r /= m;
    }
    return {space, std::move(digits)};
}

PathFunction path_add(const PathFunction& a, const PathFunction& b) {
    require_same_space(a.space, b.space, "path_add");
    const i64 m = a.space.period();
    PathFunction out = a;
    for (std::size_t k = 0; k < out.digits.size(); ++k) {
        out.digits[k] = wrap_digit(out.digits[k] + b.digits[k], m);
    }
    return out;
}

PathFunction path_sub(const PathFunction& a, const PathFunction& b) {
    require_same_space(a.space, b.space, "path_sub");
    const i64 m = a.space.period();
    PathFunction out = a;
    for (std::size_t k = 0; k < out.digits.size(); ++k) {
        out.digits[k] = wrap_digit(out.digits[k] - b.digits[k], m);
    }
    return out;
}

PathFunction path_negate(const PathFunction& a) {
    const i64 m = a.space.period();
    PathFunction out = a;
    for (i64& d : out.digits) d = wrap_digit(-d, m);
    return out;
}

PathFunction path_scale_dir(const IntegerPath& b) {
    const i64 m = b.space.period();
    PathFunction out{b.space, b.digits};
    for (i64& d : out.digits) d = wrap_digit(d, m);
    return out;
}

double pairing(const PathFunction& a, const PathFunction& b) {
    require_same_space(a.space, b.space, "pairing");
    __int128 s = 0;
    for (std::size_t k = 0; k < a.digits.size(); ++k) {
        s += static_cast<__int128>(a.digits[k]) * b.digits[k];
    }
    return static_cast<double>(static_cast<long double>(s) /
                               static_cast<long double>(a.space.period()));
}

namespace {

i64 phase_mod(const std::vector<i64>& a, const std::vector<i64>& b, i64 m) {
    i64 s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s = (s + (a[k] % m) * (b[k] % m)) % m;
    }
    if (s < 0) s += m;
    return s;
}

}  // namespace

i64 pairing_phase(const PathFunction& a, const PathFunction& b) {
    require_same_space(a.space, b.space, "pairing_phase");
    return phase_mod(a.digits, b.digits, a.space.period());
}

i64 pairing_phase(const PathFunction& a, const IntegerPath& b) {
    require_same_space(a.space, b.space, "pairing_phase");
    return phase_mod(a.digits, b.digits, a.space.period());
}

}  // namespace pathft
