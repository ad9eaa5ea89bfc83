#pragma once

#include <cmath>
#include <vector>

namespace tbi {

// Log-space building blocks for factorial-heavy series. All values are long
// double so that downstream sums of many log terms keep a few guard digits
// beyond double precision.

// log(m!) with a cached table for small m and lgammal beyond it.
inline long double log_factorial(long m) {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(4096);
        for (std::size_t i = 0; i < t.size(); ++i) {
            t[i] = std::lgammal(static_cast<long double>(i) + 1.0L);
        }
        return t;
    }();
    if (m < 0) return 0.0L;
    if (static_cast<std::size_t>(m) < table.size()) return table[static_cast<std::size_t>(m)];
    return std::lgammal(static_cast<long double>(m) + 1.0L);
}

// log of the binomial coefficient C(big, small).
inline long double log_binomial(long big, long small) {
    return log_factorial(big) - log_factorial(small) - log_factorial(big - small);
}

// log((2m+1)!!) via (2m+1)!! = (2m+1)! / (2^m m!).
inline long double log_double_factorial_odd(long m) {
    return log_factorial(2 * m + 1) - static_cast<long double>(m) * 0.6931471805599453094L -
           log_factorial(m);
}

// A magnitude-and-sign pair representing sign * exp(log_abs).
struct SignedLog {
    long double log_abs = 0.0L;
    int sign = 1;
};

}  // namespace tbi
