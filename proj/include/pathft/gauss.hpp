#pragma once

#include "pathft/lattice.hpp"

namespace pathft {

// Closed form of the quadratic Gauss sum sum_{n=0}^{N-1} exp(2*pi*i*n^2/N):
// (1 + (-i)^N) / (1 - i) * sqrt(N). Evaluates by residue of N mod 4.
Complex gauss_sum_closed(i64 N);

// Direct summation with the phase reduced as n^2 mod N in integer arithmetic.
// Throws TooLarge for N > 10^7.
Complex gauss_sum_brute(i64 N);

}  // namespace pathft
