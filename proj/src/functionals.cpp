#include "pathft/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

#include "pathft/level1.hpp"
#include "pathft/random.hpp"

namespace pathft {

namespace {

std::vector<Complex> chirp_site_vector(i64 m) {
    const i64 period = 2 * m;
    std::vector<Complex> site(static_cast<std::size_t>(m));
    for (i64 o = 0; o < m; ++o) {
        const i64 z = o - m / 2;
        i64 ph = z * z % period;
        if (ph < 0) ph += period;
        site[static_cast<std::size_t>(o)] =
            std::polar(1.0, std::numbers::pi * static_cast<double>(ph) / static_cast<double>(m));
    }
    return site;
}

std::vector<Complex> gaussian_site_vector(i64 m) {
    std::vector<Complex> site(static_cast<std::size_t>(m));
    for (i64 o = 0; o < m; ++o) {
        const i64 z = o - m / 2;
        site[static_cast<std::size_t>(o)] = {
            std::exp(-std::numbers::pi * static_cast<double>(z * z) / static_cast<double>(m)),
            0.0};
    }
    return site;
}

void require_type2_space(const PathSpace& space, const char* op) {
    if (!space.type2()) throw WrongVariant(std::string(op) + ": type-II space required");
}

}  // namespace

Functional chirp_functional(const PathSpace& space) {
    require_type2_space(space, "chirp_functional");
    return make_product(space,
                        std::vector<std::vector<Complex>>(
                            static_cast<std::size_t>(space.sites()),
                            chirp_site_vector(space.period())));
}

Functional gaussian_functional(const PathSpace& space) {
    require_type2_space(space, "gaussian_functional");
    return make_product(space,
                        std::vector<std::vector<Complex>>(
                            static_cast<std::size_t>(space.sites()),
                            gaussian_site_vector(space.period())));
}

Complex chirp_constant(i64 H, i64 Hp) {
    const PathSpace space = make_path_space(LatticeKind::Level2TypeII, H, Hp);
    const i64 m = space.period();
    const auto site = chirp_site_vector(m);
    Complex s{0.0, 0.0};
    for (const Complex& v : site) s += v;
    s *= site_scale(space);
    Complex c{1.0, 0.0};
    for (i64 k = 0; k < space.sites(); ++k) c *= s;
    return c;
}

ChirpCheck2 chirp_transform_check(i64 H, i64 Hp, std::uint64_t seed,
                                  const TransformOptions& opts) {
    const PathSpace space = make_path_space(LatticeKind::Level2TypeII, H, Hp);
    const i64 total = path_count(space);
    if (total > opts.guard) throw SpaceTooLarge("chirp_transform_check: space exceeds guard");

    ChirpCheck2 check;
    check.c1 = chirp_constant(H, Hp);

    const Functional f = chirp_functional(space);
    const Functional fd = to_dense(f, opts.guard);
    const double e0 = eps0(space);

    // C₁ by dense enumeration
    Complex c1_brute{0.0, 0.0};
    for (const Complex& v : fd.dense().values) c1_brute += v;
    c1_brute *= e0;
    check.c1_brute_dev = std::abs(check.c1 - c1_brute);

    // (Ff)(b) = C₁ conj(f(b)) for every b, transform by dense direct sum
    TransformOptions direct = opts;
    direct.strategy = TransformOptions::Strategy::DirectSum;
    const Functional ff = forward2(fd, direct);
    double max_rel = 0.0;
    for (i64 r = 0; r < total; ++r) {
        const Complex lhs = ff.dense().values[static_cast<std::size_t>(r)];
        const Complex rhs = check.c1 * std::conj(fd.dense().values[static_cast<std::size_t>(r)]);
        max_rel = std::max(max_rel, std::abs(lhs - rhs));
    }
    check.max_rel_dev = max_rel;  // |f| = 1 everywhere, so abs dev == rel dev

    // Shift invariance of the quadratic sum: Σ_a ε₀ exp(iπεΣ(a-b)²) = C₁
    SplitMix64 rng(seed);
    double shift_dev = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const PathFunction b = unrank(static_cast<i64>(rng.next() % static_cast<std::uint64_t>(total)),
                                      space);
        Complex sum{0.0, 0.0};
        PathFunction a = zero_path(space);
        for (i64 r = 0; r < total; ++r) {
            a = unrank(r, space);
            sum += f(path_sub(a, b));
        }
        sum *= e0;
        shift_dev = std::max(shift_dev, std::abs(sum - check.c1));
    }
    check.shift_invariance_dev = shift_dev;
    return check;
}

Complex gaussian_site_factor(i64 H, i64 Hp, double beta) {
    const PathSpace space = make_path_space(LatticeKind::Level2TypeII, H, Hp);
    const i64 m = space.period();
    // beta must be an exact lattice value ε′·z_b inside the window
    const double zb_real = beta * static_cast<double>(Hp);
    const i64 zb = static_cast<i64>(std::llround(zb_real));
    if (std::abs(zb_real - static_cast<double>(zb)) > 1e-9) {
        throw OutOfRange("gaussian_site_factor: beta is not a multiple of 1/Hp");
    }
    if (zb < -m / 2 || zb >= m / 2) {
        throw OutOfRange("gaussian_site_factor: beta outside the type-II window");
    }
    const double step = site_scale(space);  // √ε ε′ = 1/(√H·Hp)
    const double shift = beta / std::sqrt(static_cast<double>(H));  // √ε·β
    Complex s{0.0, 0.0};
    for (i64 z = -m / 2; z < m / 2; ++z) {
        const double x = step * static_cast<double>(z);
        // exp(-π(x+i·shift)²) = exp(-π(x²-shift²))·exp(-2πi·x·shift)
        const double mag = std::exp(-std::numbers::pi * (x * x - shift * shift));
        s += std::polar(mag, -2.0 * std::numbers::pi * x * shift);
    }
    return step * s;
}

Complex gaussian_constant2(const PathFunction& b) {
    require_type2_space(b.space, "gaussian_constant2");
    const i64 H = b.space.domain.H;
    const i64 Hp = b.space.codomain.Hp;
    const double ep = 1.0 / static_cast<double>(Hp);
    Complex c{1.0, 0.0};
    for (i64 d : b.digits) c *= gaussian_site_factor(H, Hp, ep * static_cast<double>(d));
    return c;
}

Complex gaussian_constant2_brute(const PathFunction& b, i64 guard) {
    require_type2_space(b.space, "gaussian_constant2_brute");
    const i64 total = path_count(b.space);
    if (total > guard) throw SpaceTooLarge("gaussian_constant2_brute: space exceeds guard");
    const Functional g = shifted_gaussian2(b.space, b);
    Complex sum{0.0, 0.0};
    for (i64 r = 0; r < total; ++r) sum += g(unrank(r, b.space));
    return eps0(b.space) * sum;
}

std::string sweep_quantity_name(SweepQuantity q) {
    switch (q) {
        case SweepQuantity::C1: return "C1";
        case SweepQuantity::C2Site: return "C2_site";
        case SweepQuantity::C2Full: return "C2_full";
        case SweepQuantity::CLevel1: return "c_level1";
    }
    return "?";
}

namespace {

double c1_limit_deviation(Complex value, i64 H) {
    const double limit = (H / 2) % 2 == 0 ? 1.0 : -1.0;
    return std::abs(value - Complex{limit, 0.0});
}

std::string format_b_spec(SweepQuantity q, double beta, i64 zp) {
    char buf[64];
    switch (q) {
        case SweepQuantity::C1:
            return "-";
        case SweepQuantity::C2Site:
        case SweepQuantity::C2Full:
            std::snprintf(buf, sizeof buf, "beta=%.17g", beta);
            return buf;
        case SweepQuantity::CLevel1:
            std::snprintf(buf, sizeof buf, "zp=%lld", static_cast<long long>(zp));
            return buf;
    }
    return "";
}

}  // namespace

std::vector<SweepRow> convergence_sweep(SweepQuantity quantity, const std::vector<i64>& H_list,
                                        const std::vector<i64>& Hp_list, double beta, i64 zp) {
    std::vector<i64> hs = H_list;
    std::vector<i64> hps = Hp_list;
    std::sort(hs.begin(), hs.end());
    std::sort(hps.begin(), hps.end());
    std::vector<SweepRow> rows;
    const std::string bspec = format_b_spec(quantity, beta, zp);

    if (quantity == SweepQuantity::CLevel1) {
        for (i64 H : hs) {
            SweepRow row;
            row.H = H;
            row.Hp = 0;
            row.quantity = quantity;
            row.b_spec = bspec;
            row.value = gaussian_constant1(H, zp);
            row.deviation = std::abs(row.value - Complex{1.0, 0.0});
            rows.push_back(std::move(row));
        }
        return rows;
    }

    for (i64 H : hs) {
        for (i64 Hp : hps) {
            SweepRow row;
            row.H = H;
            row.Hp = Hp;
            row.quantity = quantity;
            row.b_spec = bspec;
            switch (quantity) {
                case SweepQuantity::C1:
                    row.value = chirp_constant(H, Hp);
                    row.deviation = c1_limit_deviation(row.value, H);
                    break;
                case SweepQuantity::C2Site:
                    row.value = gaussian_site_factor(H, Hp, beta);
                    row.deviation = std::abs(row.value - Complex{1.0, 0.0});
                    break;
                case SweepQuantity::C2Full: {
                    const PathSpace space = make_path_space(LatticeKind::Level2TypeII, H, Hp);
                    const i64 zb = static_cast<i64>(std::llround(beta * static_cast<double>(Hp)));
                    const PathFunction b = make_path(
                        space, std::vector<i64>(static_cast<std::size_t>(space.sites()), zb));
                    row.value = gaussian_constant2(b);
                    row.deviation = std::abs(row.value - Complex{1.0, 0.0});
                    break;
                }
                case SweepQuantity::CLevel1:
                    break;  // handled above
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "H,Hp,quantity,b_spec,re,im,deviation\n";
    char buf[256];
    for (const SweepRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%lld,%lld,%s,%s,%.17g,%.17g,%.17g\n",
                      static_cast<long long>(row.H), static_cast<long long>(row.Hp),
                      sweep_quantity_name(row.quantity).c_str(), row.b_spec.c_str(),
                      row.value.real(), row.value.imag(), row.deviation);
        out += buf;
    }
    return out;
}

bool sweep_monotone_in_hp(const std::vector<SweepRow>& rows, double floor) {
    std::map<i64, std::map<i64, double>> by_h;
    for (const SweepRow& row : rows) by_h[row.H][row.Hp] = row.deviation;
    for (const auto& [h, devs] : by_h) {
        double prev = -1.0;
        bool first = true;
        for (const auto& [hp, dev] : devs) {
            if (!first && dev > prev + floor && dev > floor) return false;
            prev = dev;
            first = false;
        }
    }
    return true;
}

}  // namespace pathft
