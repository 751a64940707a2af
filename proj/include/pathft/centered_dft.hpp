#pragma once

#include <span>
#include <vector>

#include "pathft/lattice.hpp"

namespace pathft {

// Root-of-unity table: roots[m] = exp(-sign * 2*pi*i * m / n), m in [0, n).
// sign = +1 gives the forward kernel, -1 the inverse kernel.
std::vector<Complex> unit_roots(i64 n, int sign);

// Centered discrete Fourier transform of size n = in.size():
//   out[v] = scale * sum_u exp(-sign*2*pi*i * z_u * z_v / n) * in[u]
// with z = slot - n/2. The phase z_u*z_v is reduced mod n in integer
// arithmetic before the table lookup, so there is no argument drift.
std::vector<Complex> centered_dft(std::span<const Complex> in, double scale, int sign);

}  // namespace pathft
