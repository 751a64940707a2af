#include "pathft/centered_dft.hpp"

#include <cmath>
#include <numbers>

namespace pathft {

std::vector<Complex> unit_roots(i64 n, int sign) {
    std::vector<Complex> roots(static_cast<std::size_t>(n));
    const double w = -sign * 2.0 * std::numbers::pi / static_cast<double>(n);
    for (i64 m = 0; m < n; ++m) {
        const double t = w * static_cast<double>(m);
        roots[static_cast<std::size_t>(m)] = {std::cos(t), std::sin(t)};
    }
    return roots;
}

std::vector<Complex> centered_dft(std::span<const Complex> in, double scale, int sign) {
    const i64 n = static_cast<i64>(in.size());
    const auto roots = unit_roots(n, sign);
    std::vector<Complex> out(in.size());
    const i64 half = n / 2;
    for (i64 v = 0; v < n; ++v) {
        const i64 zv = v - half;
        Complex acc{0.0, 0.0};
        // (z_u * z_v) mod n, normalized to [0, n)
        i64 m = ((-half % n) * (zv % n)) % n;
        if (m < 0) m += n;
        i64 step = zv % n;
        if (step < 0) step += n;
        for (i64 u = 0; u < n; ++u) {
            acc += roots[static_cast<std::size_t>(m)] * in[static_cast<std::size_t>(u)];
            m += step;
            if (m >= n) m -= n;
        }
        out[static_cast<std::size_t>(v)] = scale * acc;
    }
    return out;
}

}  // namespace pathft
