#include "pathft/level2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "pathft/centered_dft.hpp"

namespace pathft {

namespace {

void require_same_space(const PathSpace& a, const PathSpace& b, const char* op) {
    if (!(a == b)) throw SpaceMismatch(std::string(op) + ": path-space mismatch");
}

void require_type2(const PathSpace& space, const char* op) {
    if (!space.type2()) {
        throw WrongVariant(std::string(op) + ": type-II space required");
    }
}

i64 guarded_count(const PathSpace& space, i64 guard, const char* op) {
    i64 n;
    try {
        n = path_count(space);
    } catch (const Overflow&) {
        throw SpaceTooLarge(std::string(op) + ": path count exceeds 2^63-1");
    }
    if (n > guard) {
        throw SpaceTooLarge(std::string(op) + ": path count " + std::to_string(n) +
                            " exceeds guard " + std::to_string(guard));
    }
    return n;
}

int worker_count(int requested, i64 work_items) {
    unsigned hw = std::thread::hardware_concurrency();
    int t = requested > 0 ? requested : static_cast<int>(hw ? hw : 1);
    if (work_items < 64) t = 1;  // items are heavy; only skip threads for tiny spaces
    return static_cast<int>(std::max<i64>(1, std::min<i64>(t, work_items)));
}

// Run fn(begin, end) over [0, n) in contiguous chunks. Each output index is
// produced by exactly one invocation, so results are thread-count independent.
template <typename Fn>
void parallel_chunks(i64 n, int threads, Fn&& fn) {
    const int t = worker_count(threads, n);
    if (t == 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t - 1));
    const i64 chunk = (n + t - 1) / t;
    for (int w = 1; w < t; ++w) {
        const i64 b = std::min<i64>(n, w * chunk);
        const i64 e = std::min<i64>(n, (w + 1) * chunk);
        if (b < e) pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    fn(0, std::min<i64>(n, chunk));
    for (auto& th : pool) th.join();
}

// Walks all digit tuples in rank order while maintaining a per-site mapped
// rank sum; used to build permutations of [0, |X|) in one pass.
std::vector<i64> permutation_ranks(const PathSpace& space,
                                   const std::vector<std::vector<i64>>& digit_map) {
    const i64 m = space.period();
    const i64 n = space.sites();
    const i64 total = path_count(space);
    std::vector<i64> weight(static_cast<std::size_t>(n));
    i64 w = 1;
    for (i64 k = 0; k < n; ++k, w *= m) weight[static_cast<std::size_t>(k)] = w;

    std::vector<i64> offs(static_cast<std::size_t>(n), 0);
    // suffix[k] = sum over sites j >= k of digit_map[j][offs[j]] * m^j
    std::vector<i64> suffix(static_cast<std::size_t>(n + 1), 0);
    for (i64 k = n - 1; k >= 0; --k) {
        suffix[static_cast<std::size_t>(k)] =
            suffix[static_cast<std::size_t>(k + 1)] +
            digit_map[static_cast<std::size_t>(k)][0] * weight[static_cast<std::size_t>(k)];
    }
    std::vector<i64> out(static_cast<std::size_t>(total));
    for (i64 r = 0;; ) {
        out[static_cast<std::size_t>(r)] = suffix[0];
        if (++r == total) break;
        i64 k = 0;
        while (offs[static_cast<std::size_t>(k)] + 1 == m) {
            offs[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        ++offs[static_cast<std::size_t>(k)];
        for (i64 j = k; j >= 0; --j) {
            suffix[static_cast<std::size_t>(j)] =
                suffix[static_cast<std::size_t>(j + 1)] +
                digit_map[static_cast<std::size_t>(j)][static_cast<std::size_t>(
                    offs[static_cast<std::size_t>(j)])] *
                    weight[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

// Uniform per-site digit map (same table at every site).
std::vector<std::vector<i64>> uniform_map(const PathSpace& space, std::vector<i64> table) {
    return std::vector<std::vector<i64>>(static_cast<std::size_t>(space.sites()),
                                         std::move(table));
}

i64 chirp_phase_period(i64 m) { return 2 * m; }

}  // namespace

double eps0(const PathSpace& space) {
    const double hp = static_cast<double>(space.codomain.Hp);
    const double h = static_cast<double>(space.domain.H);
    const double sites = static_cast<double>(space.sites());
    double e = std::pow(hp, -sites);
    if (space.type2()) e *= std::pow(h, -sites / 2.0);
    return e;
}

double site_scale(const PathSpace& space) {
    const double hp = static_cast<double>(space.codomain.Hp);
    if (space.type2()) return 1.0 / (std::sqrt(static_cast<double>(space.domain.H)) * hp);
    return 1.0 / hp;
}

Complex Functional::operator()(const PathFunction& a) const {
    require_same_space(a.space, space, "Functional::eval");
    if (is_dense()) {
        return dense().values[static_cast<std::size_t>(rank(a))];
    }
    if (is_product()) {
        const i64 m = space.period();
        Complex v{1.0, 0.0};
        const auto& sites = product().sites;
        for (std::size_t k = 0; k < a.digits.size(); ++k) {
            v *= sites[k][static_cast<std::size_t>(a.digits[k] + m / 2)];
        }
        return v;
    }
    const BuiltinRepr& b = builtin();
    const i64 m = space.period();
    switch (b.name) {
        case BuiltinName::One:
            return {1.0, 0.0};
        case BuiltinName::Delta:
            return is_zero(a) ? Complex{1.0 / eps0(space), 0.0} : Complex{0.0, 0.0};
        case BuiltinName::DeltaPow:
            return is_zero(a) ? Complex{std::pow(1.0 / eps0(space), b.power), 0.0}
                              : Complex{0.0, 0.0};
        case BuiltinName::Chirp: {
            require_type2(space, "chirp functional");
            // exp(iπ ε Σ a²(k)) with phase index Σ z² reduced mod 2M
            const i64 period = chirp_phase_period(m);
            i64 ph = 0;
            for (i64 z : a.digits) ph = (ph + z * z) % period;
            return std::polar(1.0, std::numbers::pi * static_cast<double>(ph) /
                                       static_cast<double>(m));
        }
        case BuiltinName::Gaussian: {
            require_type2(space, "gaussian functional");
            i64 s2 = 0;
            for (i64 z : a.digits) s2 += z * z;
            return {std::exp(-std::numbers::pi * static_cast<double>(s2) /
                             static_cast<double>(m)),
                    0.0};
        }
        case BuiltinName::ShiftedGaussian: {
            require_type2(space, "shifted gaussian functional");
            // Π_k exp(-π ε (a(k)+i b(k))²): real part Σ(z² - zb²), phase 2 Σ z·zb
            i64 s2 = 0, ph = 0;
            for (std::size_t k = 0; k < a.digits.size(); ++k) {
                const i64 z = a.digits[k];
                const i64 zb = b.shift_digits[k];
                s2 += z * z - zb * zb;
                ph = (ph + z % m * (zb % m)) % m;
            }
            const double mag = std::exp(-std::numbers::pi * static_cast<double>(s2) /
                                        static_cast<double>(m));
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(ph) /
                               static_cast<double>(m);
            return std::polar(mag, ang);
        }
    }
    throw Error("Functional::eval: unknown builtin");
}

Functional one2(const PathSpace& space) {
    return {space, BuiltinRepr{BuiltinName::One, 1.0, {}}};
}

Functional delta2(const PathSpace& space) {
    return {space, BuiltinRepr{BuiltinName::Delta, 1.0, {}}};
}

Functional delta_pow2(const PathSpace& space, double l) {
    if (l <= 0.0) throw OutOfRange("delta_pow2: exponent must be positive");
    return {space, BuiltinRepr{BuiltinName::DeltaPow, l, {}}};
}

Functional make_dense(const PathSpace& space, std::vector<Complex> values) {
    if (values.size() != static_cast<std::size_t>(path_count(space))) {
        throw SpaceMismatch("make_dense: value count != path count");
    }
    return {space, DenseRepr{std::move(values)}};
}

Functional make_product(const PathSpace& space, std::vector<std::vector<Complex>> sites) {
    if (sites.size() != static_cast<std::size_t>(space.sites())) {
        throw SpaceMismatch("make_product: wrong site count");
    }
    for (const auto& s : sites) {
        if (s.size() != static_cast<std::size_t>(space.period())) {
            throw SpaceMismatch("make_product: site vector length != period");
        }
    }
    return {space, ProductRepr{std::move(sites)}};
}

Functional shifted_gaussian2(const PathSpace& space, const PathFunction& b) {
    require_same_space(space, b.space, "shifted_gaussian2");
    require_type2(space, "shifted_gaussian2");
    return {space, BuiltinRepr{BuiltinName::ShiftedGaussian, 1.0, b.digits}};
}

Functional to_dense(const Functional& f, i64 guard) {
    if (f.is_dense()) return f;
    const i64 total = guarded_count(f.space, guard, "to_dense");
    std::vector<Complex> values(static_cast<std::size_t>(total));
    PathFunction a = zero_path(f.space);
    const i64 m = f.space.period();
    // enumerate in rank order
    for (i64& d : a.digits) d = -m / 2;
    for (i64 r = 0;; ) {
        values[static_cast<std::size_t>(r)] = f(a);
        if (++r == total) break;
        std::size_t k = 0;
        while (a.digits[k] + 1 == m - m / 2) {  // == m/2 for even m
            a.digits[k] = -m / 2;
            ++k;
        }
        ++a.digits[k];
    }
    return make_dense(f.space, std::move(values));
}

namespace {

// Direct evaluation of the transform definition: O(|X|²) kernel lookups with
// the integer phase Σ_k z_a z_b mod M.
std::vector<Complex> transform_direct(const PathSpace& space, const std::vector<Complex>& in,
                                      int sign, int threads) {
    const i64 m = space.period();
    const i64 n = space.sites();
    const i64 total = static_cast<i64>(in.size());
    const auto roots = unit_roots(m, sign);
    // Extended kernel table, so per-term phase sums skip the mod.
    std::vector<Complex> roots_ext(static_cast<std::size_t>(n * (m - 1) + 1) + 1);
    for (std::size_t i = 0; i < roots_ext.size(); ++i) {
        roots_ext[i] = roots[i % static_cast<std::size_t>(m)];
    }
    // P[db][da] = (z(da)·z(db)) mod m, nonnegative; column-contiguous in da.
    std::vector<i64> pt(static_cast<std::size_t>(m * m));
    for (i64 db = 0; db < m; ++db) {
        for (i64 da = 0; da < m; ++da) {
            i64 v = ((da - m / 2) % m) * ((db - m / 2) % m) % m;
            if (v < 0) v += m;
            pt[static_cast<std::size_t>(db * m + da)] = v;
        }
    }
    const double e0 = eps0(space);
    std::vector<Complex> out(in.size());

    parallel_chunks(total, threads, [&](i64 rb_begin, i64 rb_end) {
        std::vector<i64> bd(static_cast<std::size_t>(n));
        std::vector<const i64*> q(static_cast<std::size_t>(n));
        std::vector<i64> suffix(static_cast<std::size_t>(n + 1), 0);
        std::vector<i64> ad(static_cast<std::size_t>(n), 0);
        for (i64 rb = rb_begin; rb < rb_end; ++rb) {
            i64 t = rb;
            for (i64 k = 0; k < n; ++k) {
                bd[static_cast<std::size_t>(k)] = t % m;
                t /= m;
                q[static_cast<std::size_t>(k)] =
                    &pt[static_cast<std::size_t>(bd[static_cast<std::size_t>(k)] * m)];
            }
            // a-odometer over digits 1..n-1; digit 0 handled in the inner loop
            std::fill(ad.begin(), ad.end(), 0);
            for (i64 k = n - 1; k >= 1; --k) {
                suffix[static_cast<std::size_t>(k)] =
                    suffix[static_cast<std::size_t>(k + 1)] + q[static_cast<std::size_t>(k)][0];
            }
            const i64* q0 = q[0];
            Complex acc{0.0, 0.0};
            for (i64 block = 0;; ) {
                const i64 hi = suffix[1];
                const Complex* fp = &in[static_cast<std::size_t>(block)];
                for (i64 a0 = 0; a0 < m; ++a0) {
                    acc += roots_ext[static_cast<std::size_t>(hi + q0[a0])] *
                           fp[static_cast<std::size_t>(a0)];
                }
                block += m;
                if (block == total) break;
                i64 k = 1;
                while (ad[static_cast<std::size_t>(k)] + 1 == m) {
                    ad[static_cast<std::size_t>(k)] = 0;
                    ++k;
                }
                ++ad[static_cast<std::size_t>(k)];
                for (i64 j = k; j >= 1; --j) {
                    suffix[static_cast<std::size_t>(j)] =
                        suffix[static_cast<std::size_t>(j + 1)] +
                        q[static_cast<std::size_t>(j)][ad[static_cast<std::size_t>(j)]];
                }
            }
            out[static_cast<std::size_t>(rb)] = e0 * acc;
        }
    });
    return out;
}

// Tensor evaluation: one centered DFT of size M per site, applied along each
// axis of the rank layout. Algebraically the same sum as transform_direct.
std::vector<Complex> transform_axes(const PathSpace& space, std::vector<Complex> data,
                                    int sign) {
    const i64 m = space.period();
    const i64 n = space.sites();
    const i64 total = static_cast<i64>(data.size());
    const double omega = site_scale(space);
    std::vector<Complex> slice(static_cast<std::size_t>(m));
    i64 stride = 1;
    for (i64 k = 0; k < n; ++k, stride *= m) {
        for (i64 big = 0; big < total; big += stride * m) {
            for (i64 off = 0; off < stride; ++off) {
                const i64 base = big + off;
                for (i64 t = 0; t < m; ++t) {
                    slice[static_cast<std::size_t>(t)] =
                        data[static_cast<std::size_t>(base + t * stride)];
                }
                auto res = centered_dft(slice, omega, sign);
                for (i64 t = 0; t < m; ++t) {
                    data[static_cast<std::size_t>(base + t * stride)] =
                        res[static_cast<std::size_t>(t)];
                }
            }
        }
    }
    return data;
}

constexpr i64 kDirectSumLimit = 4096;

Functional transform2(const Functional& f, int sign, const TransformOptions& opts) {
    if (f.is_product()) {
        const double omega = site_scale(f.space);
        std::vector<std::vector<Complex>> sites;
        sites.reserve(f.product().sites.size());
        for (const auto& s : f.product().sites) {
            sites.push_back(centered_dft(s, omega, sign));
        }
        return make_product(f.space, std::move(sites));
    }
    const Functional fd = to_dense(f, opts.guard);
    const i64 total = static_cast<i64>(fd.dense().values.size());
    const bool direct =
        opts.strategy == TransformOptions::Strategy::DirectSum ||
        (opts.strategy == TransformOptions::Strategy::Auto && total <= kDirectSumLimit);
    std::vector<Complex> out =
        direct ? transform_direct(f.space, fd.dense().values, sign, opts.threads)
               : transform_axes(f.space, fd.dense().values, sign);
    return make_dense(f.space, std::move(out));
}

}  // namespace

Functional forward2(const Functional& f, const TransformOptions& opts) {
    return transform2(f, +1, opts);
}

Functional inverse2(const Functional& f, const TransformOptions& opts) {
    return transform2(f, -1, opts);
}

namespace {

// Blocked direct convolution over (X, path_add). For every pair of
// high-digit blocks the inner M×M correlation runs on an extended copy of
// the f block, so all inner accesses are contiguous.
std::vector<Complex> convolve_dense_values(const PathSpace& space,
                                           const std::vector<Complex>& f,
                                           const std::vector<Complex>& g, int threads) {
    const i64 m = space.period();
    const i64 n = space.sites();
    const i64 total = static_cast<i64>(f.size());
    const i64 rows = total / m;

    // Offset-digit difference with wrap: (da - db + m/2) mod m.
    std::vector<i64> dbase(static_cast<std::size_t>(m * m));
    for (i64 da = 0; da < m; ++da) {
        for (i64 db = 0; db < m; ++db) {
            dbase[static_cast<std::size_t>(da * m + db)] = (da - db + m / 2 + 2 * m) % m;
        }
    }
    std::vector<i64> weight(static_cast<std::size_t>(n));
    {
        i64 w = 1;
        for (i64 k = 0; k < n; ++k, w *= m) weight[static_cast<std::size_t>(k)] = w;
    }
    // SoA copies for a vectorizable inner loop.
    std::vector<double> fr(f.size()), fi(f.size()), gr(g.size()), gi(g.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        fr[i] = f[i].real();
        fi[i] = f[i].imag();
        gr[i] = g[i].real();
        gi[i] = g[i].imag();
    }
    const double e0 = eps0(space);
    std::vector<Complex> h(f.size());

    parallel_chunks(rows, threads, [&](i64 arow_begin, i64 arow_end) {
        std::vector<i64> adig(static_cast<std::size_t>(n), 0);
        std::vector<i64> bdig(static_cast<std::size_t>(n), 0);
        std::vector<i64> suffix(static_cast<std::size_t>(n + 1), 0);
        std::vector<double> extr(static_cast<std::size_t>(2 * m));
        std::vector<double> exti(static_cast<std::size_t>(2 * m));
        std::vector<double> haccr(static_cast<std::size_t>(m));
        std::vector<double> hacci(static_cast<std::size_t>(m));

        for (i64 arow = arow_begin; arow < arow_end; ++arow) {
            i64 t = arow;
            for (i64 k = 1; k < n; ++k) {
                adig[static_cast<std::size_t>(k)] = t % m;
                t /= m;
            }
            std::fill(haccr.begin(), haccr.end(), 0.0);
            std::fill(hacci.begin(), hacci.end(), 0.0);

            // b high-digit odometer with suffix sums of the f block base.
            std::fill(bdig.begin(), bdig.end(), 0);
            auto block_contrib = [&](i64 k) {
                return dbase[static_cast<std::size_t>(adig[static_cast<std::size_t>(k)] * m +
                                                      bdig[static_cast<std::size_t>(k)])] *
                       weight[static_cast<std::size_t>(k)];
            };
            for (i64 k = n - 1; k >= 1; --k) {
                suffix[static_cast<std::size_t>(k)] =
                    suffix[static_cast<std::size_t>(k + 1)] + block_contrib(k);
            }
            for (i64 brow = 0;; ) {
                const i64 fbase = suffix[1];  // multiple of m
                // ext[u] = f[fbase + (u + m/2) mod m]; the inner-digit summand
                // f[(a0-b0+m/2) mod m] is ext[a0 + m - b0]. The wrapped index
                // walks three contiguous runs: [m/2, m), [0, m), [0, m/2).
                {
                    const double* fbr = &fr[static_cast<std::size_t>(fbase)];
                    const double* fbi = &fi[static_cast<std::size_t>(fbase)];
                    const i64 h = m / 2;
                    for (i64 u = 0; u < h; ++u) {
                        extr[static_cast<std::size_t>(u)] = fbr[h + u];
                        exti[static_cast<std::size_t>(u)] = fbi[h + u];
                    }
                    for (i64 u = 0; u < m; ++u) {
                        extr[static_cast<std::size_t>(h + u)] = fbr[u];
                        exti[static_cast<std::size_t>(h + u)] = fbi[u];
                    }
                    for (i64 u = 0; u < h; ++u) {
                        extr[static_cast<std::size_t>(h + m + u)] = fbr[u];
                        exti[static_cast<std::size_t>(h + m + u)] = fbi[u];
                    }
                }
                const double* grp = &gr[static_cast<std::size_t>(brow * m)];
                const double* gip = &gi[static_cast<std::size_t>(brow * m)];
                // b0 outer keeps the per-output summation order fixed while the
                // a0 lanes stay independent.
                for (i64 b0 = 0; b0 < m; ++b0) {
                    const double cr = grp[static_cast<std::size_t>(b0)];
                    const double ci = gip[static_cast<std::size_t>(b0)];
                    const double* er = &extr[static_cast<std::size_t>(m - b0)];
                    const double* ei = &exti[static_cast<std::size_t>(m - b0)];
                    double* hr = haccr.data();
                    double* hi = hacci.data();
                    for (i64 a0 = 0; a0 < m; ++a0) {
                        hr[a0] += er[a0] * cr - ei[a0] * ci;
                        hi[a0] += er[a0] * ci + ei[a0] * cr;
                    }
                }
                if (++brow == rows) break;
                i64 k = 1;
                while (bdig[static_cast<std::size_t>(k)] + 1 == m) {
                    bdig[static_cast<std::size_t>(k)] = 0;
                    ++k;
                }
                ++bdig[static_cast<std::size_t>(k)];
                for (i64 j = k; j >= 1; --j) {
                    suffix[static_cast<std::size_t>(j)] =
                        suffix[static_cast<std::size_t>(j + 1)] + block_contrib(j);
                }
            }
            for (i64 a0 = 0; a0 < m; ++a0) {
                h[static_cast<std::size_t>(arow * m + a0)] =
                    Complex{e0 * haccr[static_cast<std::size_t>(a0)],
                            e0 * hacci[static_cast<std::size_t>(a0)]};
            }
        }
    });
    return h;
}

}  // namespace

Functional convolve2(const Functional& f, const Functional& g, const TransformOptions& opts) {
    require_same_space(f.space, g.space, "convolve2");
    guarded_count(f.space, opts.guard, "convolve2");
    const Functional fd = to_dense(f, opts.guard);
    const Functional gd = to_dense(g, opts.guard);
    return make_dense(f.space, convolve_dense_values(f.space, fd.dense().values,
                                                     gd.dense().values, opts.threads));
}

Complex inner2(const Functional& f, const Functional& g, const TransformOptions& opts) {
    require_same_space(f.space, g.space, "inner2");
    if (f.is_product() && g.is_product()) {
        // Σ_b ε₀ conj(f(b)) g(b) factorizes: Π_k (ω Σ_z conj(f_k[z]) g_k[z])
        const double omega = site_scale(f.space);
        Complex acc{1.0, 0.0};
        for (std::size_t k = 0; k < f.product().sites.size(); ++k) {
            Complex s{0.0, 0.0};
            const auto& fk = f.product().sites[k];
            const auto& gk = g.product().sites[k];
            for (std::size_t z = 0; z < fk.size(); ++z) s += std::conj(fk[z]) * gk[z];
            acc *= omega * s;
        }
        return acc;
    }
    const Functional fd = to_dense(f, opts.guard);
    const Functional gd = to_dense(g, opts.guard);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < fd.dense().values.size(); ++i) {
        acc += std::conj(fd.dense().values[i]) * gd.dense().values[i];
    }
    return eps0(f.space) * acc;
}

Functional pointwise2(const Functional& f, const Functional& g, const TransformOptions& opts) {
    require_same_space(f.space, g.space, "pointwise2");
    Functional fd = to_dense(f, opts.guard);
    const Functional gd = to_dense(g, opts.guard);
    auto& values = std::get<DenseRepr>(fd.repr).values;
    for (std::size_t i = 0; i < values.size(); ++i) values[i] *= gd.dense().values[i];
    return fd;
}

Functional reflect2(const Functional& f, const TransformOptions& opts) {
    const Functional fd = to_dense(f, opts.guard);
    const i64 m = f.space.period();
    std::vector<i64> neg(static_cast<std::size_t>(m));
    for (i64 o = 0; o < m; ++o) neg[static_cast<std::size_t>(o)] = (m - o) % m;
    const auto perm = permutation_ranks(f.space, uniform_map(f.space, neg));
    std::vector<Complex> out(fd.dense().values.size());
    for (std::size_t r = 0; r < out.size(); ++r) {
        out[static_cast<std::size_t>(perm[r])] = fd.dense().values[r];
    }
    return make_dense(f.space, std::move(out));
}

namespace {

Functional diff_impl(const Functional& f, const IntegerPath& b, int dir,
                     const TransformOptions& opts) {
    require_same_space(f.space, b.space, "diff");
    const Functional fd = to_dense(f, opts.guard);
    const PathFunction shift = path_scale_dir(b);
    const i64 m = f.space.period();
    // per-site map: offset o -> offset of (z ± shift digit) with wrap
    std::vector<std::vector<i64>> maps(static_cast<std::size_t>(f.space.sites()));
    for (std::size_t k = 0; k < maps.size(); ++k) {
        const i64 s = dir * shift.digits[k];
        auto& tab = maps[k];
        tab.resize(static_cast<std::size_t>(m));
        for (i64 o = 0; o < m; ++o) {
            tab[static_cast<std::size_t>(o)] = ((o + s + m / 2) % m + m) % m;
        }
    }
    const auto perm = permutation_ranks(f.space, maps);
    const double inv_eps_prime = static_cast<double>(f.space.codomain.Hp);
    const auto& v = fd.dense().values;
    std::vector<Complex> out(v.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        const Complex shifted = v[static_cast<std::size_t>(perm[r])];
        out[r] = dir > 0 ? (shifted - v[r]) * inv_eps_prime   // (f(a+ε′b) - f(a))/ε′
                         : (v[r] - shifted) * inv_eps_prime;  // (f(a) - f(a-ε′b))/ε′
    }
    return make_dense(f.space, std::move(out));
}

}  // namespace

Functional diff_plus(const Functional& f, const IntegerPath& b, const TransformOptions& opts) {
    return diff_impl(f, b, +1, opts);
}

Functional diff_minus(const Functional& f, const IntegerPath& b, const TransformOptions& opts) {
    return diff_impl(f, b, -1, opts);
}

Complex lambda_factor(const PathFunction& a, const IntegerPath& b, int sign) {
    const i64 m = a.space.period();
    const i64 s = pairing_phase(a, b);
    const double theta =
        sign * 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(m);
    const Complex e = std::polar(1.0, theta);
    return (e - Complex{1.0, 0.0}) * static_cast<double>(a.space.codomain.Hp);
}

MixedPair2 mixed_transform2(const Functional& u, const Functional& v, const Functional& g,
                            const TransformOptions& opts) {
    require_same_space(u.space, v.space, "mixed_transform2");
    require_same_space(u.space, g.space, "mixed_transform2");
    require_type2(u.space, "mixed_transform2");
    TransformOptions local = opts;
    local.guard = std::min<i64>(opts.guard, 4096);
    guarded_count(u.space, local.guard, "mixed_transform2");

    MixedPair2 pair;
    // lhs: transform of h(a) = Σ_b ε₀ u(a-b) v(b) g(b)
    pair.lhs = forward2(convolve2(u, pointwise2(v, g, local), local), local);
    // rhs: (Fu)(d) · ((Fv) ∗ (Fg))(d)
    const Functional fu = forward2(u, local);
    const Functional conv = convolve2(forward2(v, local), forward2(g, local), local);
    pair.rhs = pointwise2(fu, conv, local);
    return pair;
}

}  // namespace pathft
