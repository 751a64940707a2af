#include "pathft/gauss.hpp"

#include <cmath>
#include <numbers>

namespace pathft {

Complex gauss_sum_closed(i64 N) {
    if (N < 1) throw OutOfRange("gauss_sum_closed: N must be >= 1");
    const double r = std::sqrt(static_cast<double>(N));
    switch (N % 4) {
        case 0: return {r, r};     // (1+i)*sqrt(N)
        case 1: return {r, 0.0};   // sqrt(N)
        case 2: return {0.0, 0.0};
        default: return {0.0, r};  // i*sqrt(N)
    }
}

Complex gauss_sum_brute(i64 N) {
    if (N < 1) throw OutOfRange("gauss_sum_brute: N must be >= 1");
    if (N > 10'000'000) throw TooLarge("gauss_sum_brute: N exceeds 10^7");
    const double w = 2.0 * std::numbers::pi / static_cast<double>(N);
    double re = 0.0, im = 0.0;
    i64 sq = 0;  // n^2 mod N, maintained incrementally: (n+1)^2 = n^2 + 2n + 1
    for (i64 n = 0; n < N; ++n) {
        re += std::cos(w * static_cast<double>(sq));
        im += std::sin(w * static_cast<double>(sq));
        sq += 2 * n + 1;
        sq %= N;
    }
    return {re, im};
}

}  // namespace pathft
