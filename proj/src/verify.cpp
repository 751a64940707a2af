#include "pathft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pathft/level1.hpp"
#include "pathft/random.hpp"

namespace pathft {

namespace {

double sup_norm(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const Complex& x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Tracks the worst deviation of one identity across trials.
struct DevTracker {
    double abs = 0.0;
    double rel = 0.0;

    void add(const std::vector<Complex>& lhs, const std::vector<Complex>& rhs) {
        const double d = max_abs_diff(lhs, rhs);
        abs = std::max(abs, d);
        rel = std::max(rel, d / std::max({1.0, sup_norm(lhs), sup_norm(rhs)}));
    }
    void add(Complex lhs, Complex rhs) {
        const double d = std::abs(lhs - rhs);
        abs = std::max(abs, d);
        rel = std::max(rel, d / std::max({1.0, std::abs(lhs), std::abs(rhs)}));
    }
    IdentityRecord record(std::string name, double tol, bool informational = false) const {
        return {std::move(name), abs, rel, rel < tol, informational};
    }
};

std::string kv(i64 v) { return std::to_string(v); }

}  // namespace

VerificationReport verify_level1(i64 H, const VerifyOptions& opts) {
    VerificationReport report;
    report.suite = "level1";
    report.parameters = {{"H", kv(H)},
                         {"seed", std::to_string(opts.seed)},
                         {"trials", std::to_string(opts.trials)}};
    const LatticeSpec lat = make_lattice(LatticeKind::Level1, H);
    SplitMix64 rng(opts.seed);

    GridFunction ones = make_grid(lat);
    for (Complex& v : ones.values) v = {1.0, 0.0};
    const GridFunction delta = delta1(lat);

    DevTracker d1;
    d1.add(forward1(ones).values, delta.values);
    d1.add(inverse1(ones).values, delta.values);
    report.records.push_back(d1.record("delta = F1 = conjF1", opts.tol_rel));

    DevTracker d2, d3, d4, d5, d6, d7, d8, d9;
    for (int t = 0; t < opts.trials; ++t) {
        const GridFunction phi = random_grid(lat, rng);
        const GridFunction psi = random_grid(lat, rng);
        const GridFunction fphi = forward1(phi);
        const GridFunction fpsi = forward1(psi);

        d2.add(inner1(fphi, fpsi), inner1(phi, psi));

        const GridFunction f2 = forward1(fphi);
        d3.add(f2.values, reflect1(phi).values);
        d3.add(forward1(forward1(f2)).values, phi.values);

        d4.add(inverse1(fphi).values, phi.values);
        d4.add(forward1(inverse1(phi)).values, phi.values);

        d5.add(convolve1(phi, delta).values, phi.values);
        d5.add(convolve1(delta, phi).values, phi.values);

        const GridFunction conv = convolve1(phi, psi);
        d6.add(conv.values, convolve1(psi, phi).values);

        d7.add(forward1(conv).values, pointwise1(fphi, fpsi).values);
        d8.add(forward1(pointwise1(phi, psi)).values, convolve1(fphi, fpsi).values);

        const GridFunction bphi = inverse1(phi);
        const GridFunction bpsi = inverse1(psi);
        d9.add(inverse1(conv).values, pointwise1(bphi, bpsi).values);
        d9.add(inverse1(pointwise1(phi, psi)).values, convolve1(bphi, bpsi).values);
    }
    report.records.push_back(d2.record("unitarity: (Fphi,Fpsi) = (phi,psi)", opts.tol_rel));
    report.records.push_back(d3.record("F^2 = reflection, F^4 = identity", opts.tol_rel));
    report.records.push_back(d4.record("conjF F = F conjF = identity", opts.tol_rel));
    report.records.push_back(d5.record("phi * delta = delta * phi = phi", opts.tol_rel));
    report.records.push_back(d6.record("phi * psi = psi * phi", opts.tol_rel));
    report.records.push_back(d7.record("F(phi * psi) = (Fphi)(Fpsi)", opts.tol_rel));
    report.records.push_back(d8.record("F(phi psi) = (Fphi) * (Fpsi)", opts.tol_rel));
    report.records.push_back(d9.record("conjF convolution theorems", opts.tol_rel));

    // F(delta^l) = H^(l-1), single nonzero term
    DevTracker dl;
    for (double l : {0.5, 1.0, 2.0, 3.0}) {
        const GridFunction fd = forward1(delta_pow1(lat, l));
        const double expected = std::pow(static_cast<double>(H), l - 1.0);
        for (const Complex& v : fd.values) dl.add(v, Complex{expected, 0.0});
    }
    report.records.push_back(dl.record("F(delta^l) = H^(l-1)", 1e-12));
    return report;
}

VerificationReport verify_mixed1(i64 H, const VerifyOptions& opts) {
    VerificationReport report;
    report.suite = "level1-mixed";
    report.parameters = {{"H", kv(H)},
                         {"seed", std::to_string(opts.seed)},
                         {"pairs", std::to_string(opts.pairs)}};
    const LatticeSpec lat = make_lattice(LatticeKind::Level1, H);
    SplitMix64 rng(opts.seed);

    DevTracker dev;
    // f(u,y) = delta(u): lhs reduces to F(g)
    {
        Grid2D f = make_grid2(lat);
        const i64 n = lat.count;
        for (i64 zy = -n / 2; zy < n / 2; ++zy) f.at(0, zy) = static_cast<double>(H);
        const GridFunction g = random_grid(lat, rng);
        const MixedPair1 pair = mixed_transform1(f, g);
        dev.add(pair.lhs.values, pair.rhs.values);
    }
    // f = 1, g = delta
    {
        Grid2D f = make_grid2(lat);
        for (Complex& v : f.values) v = {1.0, 0.0};
        const MixedPair1 pair = mixed_transform1(f, delta1(lat));
        dev.add(pair.lhs.values, pair.rhs.values);
    }
    for (int t = 0; t < opts.pairs; ++t) {
        Grid2D f = make_grid2(lat);
        for (Complex& v : f.values) v = {rng.uniform_pm1(), rng.uniform_pm1()};
        const GridFunction g = random_grid(lat, rng);
        const MixedPair1 pair = mixed_transform1(f, g);
        dev.add(pair.lhs.values, pair.rhs.values);
    }
    report.records.push_back(
        dev.record("F_x(sum_y eps f(x-y,y)g(y)) = {F_y(F_u f) * F_y g}", opts.tol_rel));
    return report;
}

VerificationReport verify_level2(const PathSpace& space, const VerifyOptions& opts) {
    VerificationReport report;
    report.suite = space.type2() ? "level2-type2" : "level2-type1";
    report.parameters = {{"H", kv(space.domain.H)},
                         {"Hp", kv(space.codomain.Hp)},
                         {"seed", std::to_string(opts.seed)},
                         {"pairs", std::to_string(opts.pairs)}};
    TransformOptions topts;
    topts.guard = opts.guard;
    topts.threads = opts.threads;
    SplitMix64 rng(opts.seed);

    const Functional delta = delta2(space);
    const Functional delta_dense = to_dense(delta, opts.guard);

    DevTracker d1;
    d1.add(forward2(one2(space), topts).dense().values, delta_dense.dense().values);
    d1.add(inverse2(one2(space), topts).dense().values, delta_dense.dense().values);
    report.records.push_back(d1.record("delta = F1 = conjF1", opts.tol_rel));

    DevTracker d2, d3, d4, d5, d6, d7, d8, d9, d10;
    for (int t = 0; t < opts.pairs; ++t) {
        const Functional f = random_dense2(space, rng, opts.guard);
        const Functional g = random_dense2(space, rng, opts.guard);
        const Functional ff = forward2(f, topts);
        const Functional fg = forward2(g, topts);
        const Functional bf = inverse2(f, topts);
        const Functional bg = inverse2(g, topts);

        d2.add(inner2(ff, fg, topts), inner2(f, g, topts));

        const Functional f2 = forward2(ff, topts);
        d3.add(f2.dense().values, reflect2(f, topts).dense().values);
        d3.add(forward2(forward2(f2, topts), topts).dense().values, f.dense().values);

        d4.add(inverse2(ff, topts).dense().values, f.dense().values);
        d4.add(forward2(bf, topts).dense().values, f.dense().values);

        d5.add(convolve2(f, delta, topts).dense().values, f.dense().values);
        d5.add(convolve2(delta, f, topts).dense().values, f.dense().values);

        const Functional conv = convolve2(f, g, topts);
        d6.add(conv.dense().values, convolve2(g, f, topts).dense().values);

        d7.add(forward2(conv, topts).dense().values, pointwise2(ff, fg, topts).dense().values);
        d8.add(inverse2(conv, topts).dense().values, pointwise2(bf, bg, topts).dense().values);
        d9.add(forward2(pointwise2(f, g, topts), topts).dense().values,
               convolve2(ff, fg, topts).dense().values);
        d10.add(inverse2(pointwise2(f, g, topts), topts).dense().values,
                convolve2(bf, bg, topts).dense().values);
    }
    report.records.push_back(d2.record("unitarity: (Ff,Fg) = (f,g)", opts.tol_rel));
    report.records.push_back(d3.record("F^2 = reflection, F^4 = identity", opts.tol_rel));
    report.records.push_back(d4.record("conjF F = F conjF = identity", opts.tol_rel));
    report.records.push_back(d5.record("f * delta = delta * f = f", opts.tol_rel));
    report.records.push_back(d6.record("f * g = g * f", opts.tol_rel));
    report.records.push_back(d7.record("F(f * g) = (Ff)(Fg)", opts.tol_rel));
    report.records.push_back(d8.record("conjF(f * g) = (conjFf)(conjFg)", opts.tol_rel));
    report.records.push_back(d9.record("F(fg) = (Ff) * (Fg)", opts.tol_rel));
    report.records.push_back(d10.record("conjF(fg) = (conjFf) * (conjFg)", opts.tol_rel));

    // F(delta^l) = delta(0)^(l-1), single nonzero term
    DevTracker dl;
    const double d0 = 1.0 / eps0(space);
    for (double l : {0.5, 1.0, 2.0, 3.0}) {
        const Functional fd = forward2(delta_pow2(space, l), topts);
        const double expected = std::pow(d0, l - 1.0);
        double dev = 0.0;
        for (const Complex& v : fd.dense().values) {
            dev = std::max(dev, std::abs(v - Complex{expected, 0.0}));
        }
        dl.abs = std::max(dl.abs, dev);
        dl.rel = std::max(dl.rel, dev / std::max(1.0, expected));
    }
    report.records.push_back(dl.record("F(delta^l) = delta(0)^(l-1)", 1e-12));
    return report;
}

VerificationReport verify_diff2(const PathSpace& space, const VerifyOptions& opts) {
    VerificationReport report;
    report.suite = "level2-diff";
    report.parameters = {{"H", kv(space.domain.H)},
                         {"Hp", kv(space.codomain.Hp)},
                         {"seed", std::to_string(opts.seed)},
                         {"pairs", std::to_string(opts.pairs)}};
    TransformOptions topts;
    topts.guard = opts.guard;
    topts.threads = opts.threads;
    SplitMix64 rng(opts.seed);
    const i64 total = path_count(space);
    if (total > opts.guard) throw SpaceTooLarge("verify_diff2: path count exceeds guard");
    const double inv_ep = static_cast<double>(space.codomain.Hp);
    const i64 m = space.period();

    DevTracker d1, d2, d3, d4, d5, d6, d7, d8, d9;
    for (int t = 0; t < opts.pairs; ++t) {
        const Functional f = random_dense2(space, rng, opts.guard);
        const Functional g = random_dense2(space, rng, opts.guard);
        const IntegerPath b = random_direction(space, rng);

        // λ_b over X, in rank order
        std::vector<Complex> lam(static_cast<std::size_t>(total));
        std::vector<Complex> lam_conj(static_cast<std::size_t>(total));
        std::vector<Complex> lam_polar(static_cast<std::size_t>(total));
        for (i64 r = 0; r < total; ++r) {
            const PathFunction a = unrank(r, space);
            lam[static_cast<std::size_t>(r)] = lambda_factor(a, b, +1);
            lam_conj[static_cast<std::size_t>(r)] = lambda_factor(a, b, -1);
            const double half =
                std::numbers::pi * static_cast<double>(pairing_phase(a, b)) /
                static_cast<double>(m);
            lam_polar[static_cast<std::size_t>(r)] =
                Complex{0.0, 2.0 * std::numbers::pi} *
                (std::sin(half) / (std::numbers::pi / inv_ep)) * std::polar(1.0, half);
        }
        auto scale_by = [&](const Functional& h, const std::vector<Complex>& w,
                            double sign) {
            std::vector<Complex> out = h.dense().values;
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = sign * w[i] * out[i];
            return out;
        };

        const Functional ff = forward2(f, topts);
        const Functional bf = inverse2(f, topts);

        d1.add(forward2(diff_plus(f, b, topts), topts).dense().values, scale_by(ff, lam, 1.0));
        d2.add(forward2(diff_minus(f, b, topts), topts).dense().values,
               scale_by(ff, lam_conj, -1.0));

        const Functional lam_f = make_dense(space, scale_by(f, lam, 1.0));
        const Functional lamc_f = make_dense(space, scale_by(f, lam_conj, 1.0));
        {
            std::vector<Complex> rhs = diff_minus(ff, b, topts).dense().values;
            for (Complex& v : rhs) v = -v;
            d3.add(forward2(lam_f, topts).dense().values, rhs);
        }
        d4.add(forward2(lamc_f, topts).dense().values,
               diff_plus(ff, b, topts).dense().values);
        d5.add(diff_plus(bf, b, topts).dense().values,
               inverse2(lam_f, topts).dense().values);
        {
            std::vector<Complex> rhs = inverse2(lamc_f, topts).dense().values;
            for (Complex& v : rhs) v = -v;
            d6.add(diff_minus(bf, b, topts).dense().values, rhs);
        }
        d7.add(lam, lam_polar);

        d8.add(inner2(f, diff_plus(g, b, topts), topts),
               -inner2(diff_minus(f, b, topts), g, topts));
        d9.add(inner2(f, diff_plus(g, b, topts), topts),
               -inner2(diff_plus(f, b, topts), g, topts));
    }
    report.records.push_back(d1.record("F(D+ f) = lambda (Ff)", opts.tol_rel));
    report.records.push_back(d2.record("F(D- f) = -conj(lambda) (Ff)", opts.tol_rel));
    report.records.push_back(d3.record("F(lambda f) = -D-(Ff)", opts.tol_rel));
    report.records.push_back(d4.record("F(conj(lambda) f) = D+(Ff)", opts.tol_rel));
    report.records.push_back(d5.record("D+(conjF f) = conjF(lambda f)", opts.tol_rel));
    report.records.push_back(d6.record("D-(conjF f) = -conjF(conj(lambda) f)", opts.tol_rel));
    report.records.push_back(d7.record("lambda polar form", opts.tol_rel));
    report.records.push_back(d8.record("(f, D+ g) = -(D- f, g)", opts.tol_rel));
    report.records.push_back(
        d9.record("(f, D+ g) = -(D+ f, g) [informational]", opts.tol_rel, true));
    return report;
}

VerificationReport verify_mixed2(const PathSpace& space, const VerifyOptions& opts) {
    VerificationReport report;
    report.suite = "level2-mixed";
    report.parameters = {{"H", kv(space.domain.H)},
                         {"Hp", kv(space.codomain.Hp)},
                         {"seed", std::to_string(opts.seed)},
                         {"pairs", std::to_string(opts.pairs)}};
    TransformOptions topts;
    topts.guard = opts.guard;
    topts.threads = opts.threads;
    SplitMix64 rng(opts.seed);

    DevTracker ddelta, dones, drand;
    {
        const Functional g = random_dense2(space, rng, opts.guard);
        const MixedPair2 pair = mixed_transform2(delta2(space), one2(space), g, topts);
        ddelta.add(pair.lhs.dense().values, pair.rhs.dense().values);
    }
    {
        const MixedPair2 pair =
            mixed_transform2(one2(space), one2(space), delta2(space), topts);
        dones.add(pair.lhs.dense().values, pair.rhs.dense().values);
    }
    for (int t = 0; t < opts.pairs; ++t) {
        const Functional u = random_dense2(space, rng, opts.guard);
        const Functional v = random_dense2(space, rng, opts.guard);
        const Functional g = random_dense2(space, rng, opts.guard);
        const MixedPair2 pair = mixed_transform2(u, v, g, topts);
        drand.add(pair.lhs.dense().values, pair.rhs.dense().values);
    }
    report.records.push_back(ddelta.record("delta kernel: f(c,b) = delta(c)", opts.tol_rel));
    report.records.push_back(dones.record("ones kernel, g = delta", opts.tol_rel));
    report.records.push_back(drand.record("random separable kernel", opts.tol_rel));
    return report;
}

}  // namespace pathft
