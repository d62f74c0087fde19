#ifndef GFKIT_COMBINATORICS_HPP
#define GFKIT_COMBINATORICS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "series.hpp"

namespace gfkit
{

// Binomial coefficient with the conventions the coefficient formulas rely on:
// binom(a, b) = 0 for b < 0, binom(a, 0) = 1 for every a (including a = -1),
// and the falling-factorial definition a(a-1)...(a-b+1)/b! otherwise, which
// vanishes for 0 <= a < b.
inline Integer binomial(long long a, long long b)
{
    if (b < 0) {
        return 0;
    }
    if (b == 0) {
        return 1;
    }
    if (a >= 0 && b > a) {
        return 0;
    }
    if (a >= 0 && b > a - b) {
        b = a - b;
    }
    Integer r = 1;
    for (long long i = 0; i < b; ++i) {
        r *= a - i;
        r /= i + 1;
    }
    return r;
}

// C_0..C_n from C_0 = 1, C_{m+1} = sum_i C_i C_{m-i}.
inline std::vector<Integer> catalan_numbers(std::size_t n)
{
    std::vector<Integer> c(n + 1);
    c[0] = 1;
    for (std::size_t m = 0; m < n; ++m) {
        Integer s = 0;
        for (std::size_t i = 0; i <= m; ++i) {
            s += c[i] * c[m - i];
        }
        c[m + 1] = s;
    }
    return c;
}

inline Integer catalan(std::size_t n)
{
    return catalan_numbers(n).back();
}

// [u^k] C(u)^n = n/(n+2k) * binom(n+2k, k), evaluated as an exact rational.
inline Integer catalan_power_coeff(long long n, long long k)
{
    if (n < 1) {
        throw std::invalid_argument("Catalan power needs n >= 1, got " + std::to_string(n));
    }
    if (k < 0) {
        throw std::invalid_argument("Catalan power coefficient index must be >= 0");
    }
    const Coefficient v = Coefficient(n, n + 2 * k) * Coefficient(binomial(n + 2 * k, k));
    return to_integer(v);
}

// N(n, k) = binom(n, k) binom(n, k-1) / n for 1 <= k <= n.
inline Integer narayana(long long n, long long k)
{
    if (n < 1 || k < 1 || k > n) {
        throw std::invalid_argument("Narayana number needs 1 <= k <= n, got n=" + std::to_string(n)
                                    + " k=" + std::to_string(k));
    }
    return to_integer(Coefficient(binomial(n, k) * binomial(n, k - 1), Integer(n)));
}

} // namespace gfkit

#endif
