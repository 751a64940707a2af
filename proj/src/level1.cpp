#include "pathft/level1.hpp"

#include <cmath>
#include <numbers>

#include "pathft/centered_dft.hpp"

namespace pathft {

namespace {

void require_level1(const LatticeSpec& lattice, const char* op) {
    if (lattice.kind != LatticeKind::Level1) {
        throw WrongLatticeKind(std::string(op) + ": level-1 lattice required");
    }
}

void require_same(const GridFunction& a, const GridFunction& b, const char* op) {
    if (!(a.lattice == b.lattice)) {
        throw LatticeMismatch(std::string(op) + ": lattice mismatch");
    }
}

GridFunction transform1(const GridFunction& phi, int sign) {
    require_level1(phi.lattice, "transform");
    GridFunction out;
    out.lattice = phi.lattice;
    out.values = centered_dft(phi.values, phi.lattice.step(), sign);
    return out;
}

}  // namespace

GridFunction forward1(const GridFunction& phi) { return transform1(phi, +1); }

GridFunction inverse1(const GridFunction& phi) { return transform1(phi, -1); }

GridFunction delta1(const LatticeSpec& lattice) {
    require_level1(lattice, "delta1");
    GridFunction d = make_grid(lattice);
    d.at(0) = static_cast<double>(lattice.H);
    return d;
}

GridFunction delta_pow1(const LatticeSpec& lattice, double l) {
    require_level1(lattice, "delta_pow1");
    if (l <= 0.0) throw OutOfRange("delta_pow1: exponent must be positive");
    GridFunction d = make_grid(lattice);
    d.at(0) = std::pow(static_cast<double>(lattice.H), l);
    return d;
}

GridFunction convolve1(const GridFunction& phi, const GridFunction& psi) {
    require_same(phi, psi, "convolve1");
    require_level1(phi.lattice, "convolve1");
    const i64 n = phi.lattice.count;
    const double eps = phi.lattice.step();
    GridFunction out = make_grid(phi.lattice);
    for (i64 zx = -n / 2; zx < n / 2; ++zx) {
        Complex acc{0.0, 0.0};
        for (i64 zy = -n / 2; zy < n / 2; ++zy) {
            acc += phi.at(wrap(phi.lattice, zx - zy)) * psi.at(zy);
        }
        out.at(zx) = eps * acc;
    }
    return out;
}

Complex inner1(const GridFunction& phi, const GridFunction& psi) {
    require_same(phi, psi, "inner1");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < phi.values.size(); ++i) {
        acc += std::conj(phi.values[i]) * psi.values[i];
    }
    return phi.lattice.step() * acc;
}

GridFunction pointwise1(const GridFunction& phi, const GridFunction& psi) {
    require_same(phi, psi, "pointwise1");
    GridFunction out = phi;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= psi.values[i];
    return out;
}

GridFunction reflect1(const GridFunction& phi) {
    GridFunction out = make_grid(phi.lattice);
    const i64 n = phi.lattice.count;
    for (i64 z = -n / 2; z < n / 2; ++z) out.at(z) = phi.at(wrap(phi.lattice, -z));
    return out;
}

GridFunction chirp1(const LatticeSpec& lattice) {
    require_level1(lattice, "chirp1");
    GridFunction out = make_grid(lattice);
    const i64 n = lattice.count;            // H²
    const i64 period = 2 * n;               // exp(iπ m / H²) has period 2H² in m
    const double w = std::numbers::pi / static_cast<double>(n);
    for (i64 z = -n / 2; z < n / 2; ++z) {
        i64 m = (z % period) * (z % period) % period;
        if (m < 0) m += period;
        const double t = w * static_cast<double>(m);
        out.at(z) = {std::cos(t), std::sin(t)};
    }
    return out;
}

GridFunction gaussian1(const LatticeSpec& lattice) {
    require_level1(lattice, "gaussian1");
    GridFunction out = make_grid(lattice);
    const i64 n = lattice.count;
    for (i64 z = -n / 2; z < n / 2; ++z) {
        const double x = lattice.point(z);
        out.at(z) = {std::exp(-std::numbers::pi * x * x), 0.0};
    }
    return out;
}

Grid2D make_grid2(const LatticeSpec& lattice) {
    Grid2D f;
    f.lattice = lattice;
    f.values.assign(static_cast<std::size_t>(lattice.count * lattice.count), Complex{0.0, 0.0});
    return f;
}

MixedPair1 mixed_transform1(const Grid2D& f, const GridFunction& g) {
    require_level1(g.lattice, "mixed_transform1");
    if (!(f.lattice == g.lattice)) {
        throw LatticeMismatch("mixed_transform1: lattice mismatch");
    }
    const LatticeSpec lat = g.lattice;
    const i64 n = lat.count;
    const double eps = lat.step();

    // lhs: transform of h(x) = Σ_y ε f(x-y, y) g(y)
    GridFunction h = make_grid(lat);
    for (i64 zx = -n / 2; zx < n / 2; ++zx) {
        Complex acc{0.0, 0.0};
        for (i64 zy = -n / 2; zy < n / 2; ++zy) {
            acc += f.at(wrap(lat, zx - zy), zy) * g.at(zy);
        }
        h.at(zx) = eps * acc;
    }
    MixedPair1 pair;
    pair.lhs = forward1(h);

    // rhs: for each p, transform f in its first argument, transform the
    // result in y, and convolve with Fg at p.
    const GridFunction fg = forward1(g);
    pair.rhs = make_grid(lat);
    for (i64 w = -n / 2; w < n / 2; ++w) {
        // ψ_w(y) = (F_u f(·, y))(p_w)
        GridFunction psi = make_grid(lat);
        for (i64 zy = -n / 2; zy < n / 2; ++zy) {
            GridFunction col = make_grid(lat);
            for (i64 zu = -n / 2; zu < n / 2; ++zu) col.at(zu) = f.at(zu, zy);
            psi.at(zy) = forward1(col).at(w);
        }
        const GridFunction fpsi = forward1(psi);
        Complex acc{0.0, 0.0};
        for (i64 q = -n / 2; q < n / 2; ++q) {
            acc += fpsi.at(wrap(lat, w - q)) * fg.at(q);
        }
        pair.rhs.at(w) = eps * acc;
    }
    return pair;
}

ChirpCheck1 chirp_identity_check1(i64 H) {
    const LatticeSpec lat = make_lattice(LatticeKind::Level1, H);
    const GridFunction phi = chirp1(lat);
    const GridFunction fphi = forward1(phi);

    Complex sum{0.0, 0.0};
    for (const Complex& v : phi.values) sum += v;
    sum *= lat.step();

    const Complex ei4 = std::polar(1.0, std::numbers::pi / 4.0);
    double dev = 0.0;
    for (i64 p = -lat.count / 2; p < lat.count / 2; ++p) {
        dev = std::max(dev, std::abs(fphi.at(p) - ei4 * std::conj(phi.at(p))));
    }
    return {sum, dev};
}

Complex gaussian_constant1(i64 H, i64 zp) {
    const LatticeSpec lat = make_lattice(LatticeKind::Level1, H);
    const i64 n = lat.count;
    if (zp < -n / 2 || zp >= n / 2) throw OutOfRange("gaussian_constant1: p outside lattice");
    const double p = lat.point(zp);
    const auto roots = unit_roots(n, +1);  // exp(-2πi m/n)
    Complex acc{0.0, 0.0};
    for (i64 z = -n / 2; z < n / 2; ++z) {
        const double x = lat.point(z);
        // exp(-π(x+ip)²) = exp(-π(x²-p²)) exp(-2πi x p); phase index z·zp mod H²
        i64 m = (z % n) * (zp % n) % n;
        if (m < 0) m += n;
        acc += std::exp(-std::numbers::pi * (x * x - p * p)) * roots[static_cast<std::size_t>(m)];
    }
    return lat.step() * acc;
}

}  // namespace pathft
