#ifndef GFKIT_CLOSED_FORMS_HPP
#define GFKIT_CLOSED_FORMS_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/integer.hpp>

#include "combinatorics.hpp"
#include "families.hpp"
#include "gf_engine.hpp"
#include "series.hpp"

namespace gfkit
{

namespace detail
{

inline Integer ipow(long long base, long long e)
{
    // 0^0 = 1
    return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(e));
}

inline ParallelTransition z_at(std::size_t order)
{
    return ParallelTransition::monomial(1, 1, order);
}

} // namespace detail

// m_s = sum_n C_n binom(s, 2n)
inline Integer motzkin_coeff(long long s)
{
    const auto cat = catalan_numbers(static_cast<std::size_t>(s / 2));
    Integer m = 0;
    for (long long n = 0; 2 * n <= s; ++n) {
        m += cat[static_cast<std::size_t>(n)] * binomial(s, 2 * n);
    }
    return m;
}

// m_{s,k} = sum_n C_n binom(s, 2n) k^(s-2n)
inline Integer kcolored_coeff(long long s, long long k)
{
    if (k < 1) {
        throw std::invalid_argument("k-colored Motzkin numbers need k >= 1, got " + std::to_string(k));
    }
    const auto cat = catalan_numbers(static_cast<std::size_t>(s / 2));
    Integer m = 0;
    for (long long n = 0; 2 * n <= s; ++n) {
        m += cat[static_cast<std::size_t>(n)] * binomial(s, 2 * n) * detail::ipow(k, s - 2 * n);
    }
    return m;
}

inline TruncatedSeries motzkin_gf(std::size_t order)
{
    const auto z = detail::z_at(order + 2);
    return uniform_radical(z, z, z, order);
}

// M^(k)(z) = (1 - z^k - sqrt((1-z^k)^2 - 4z^2)) / (2z^2)
inline TruncatedSeries gen_motzkin_gf(long long k, std::size_t order)
{
    if (k < 1) {
        throw std::invalid_argument("generalized Motzkin needs k >= 1, got " + std::to_string(k));
    }
    const auto z = detail::z_at(order + 2);
    return uniform_radical(z, z, ParallelTransition::monomial(1, static_cast<std::size_t>(k), order + 2), order);
}

// Large Schroeder number r_n = 1 for n = 0, sum_{k=1..n} N(n,k) 2^k otherwise.
// Equal to [z^(2n)] gen_motzkin_gf(2).
inline Integer schroeder_number(long long n)
{
    if (n == 0) {
        return 1;
    }
    Integer s = 0;
    for (long long k = 1; k <= n; ++k) {
        s += narayana(n, k) * detail::ipow(2, k);
    }
    return s;
}

// F_k(z): uniform linear GF with level weight kz/(1-z).
inline TruncatedSeries fk_gf(long long k, std::size_t order)
{
    if (k < 1) {
        throw std::invalid_argument("F_k needs k >= 1, got " + std::to_string(k));
    }
    const auto z = detail::z_at(order + 2);
    return uniform_radical(z, z, every_length_loop(k, order + 2), order);
}

// f^(k)_s = sum_n sum_m C_n binom(m+2n, m) binom(s-2n-1, s-m-2n) k^m
inline Integer fk_coeff(long long s, long long k)
{
    if (k < 1) {
        throw std::invalid_argument("F_k needs k >= 1, got " + std::to_string(k));
    }
    const auto cat = catalan_numbers(static_cast<std::size_t>(s));
    Integer f = 0;
    for (long long n = 0; n <= s; ++n) {
        for (long long m = 0; m <= s - 2 * n; ++m) {
            f += cat[static_cast<std::size_t>(n)] * binomial(m + 2 * n, m) * binomial(s - 2 * n - 1, s - m - 2 * n)
                 * detail::ipow(k, m);
        }
    }
    return f;
}

// m^b_s = 1 + sum_{n>=1} sum_k 2^n n/(n+2k) binom(n+2k, k) binom(s, 2n+2k).
// The n = 0 term carries the factor n and vanishes.
inline Integer grand_motzkin_coeff(long long s)
{
    Integer m = 1;
    for (long long n = 1; 2 * n <= s; ++n) {
        for (long long k = 0; 2 * n + 2 * k <= s; ++k) {
            m += detail::ipow(2, n) * catalan_power_coeff(n, k) * binomial(s, 2 * n + 2 * k);
        }
    }
    return m;
}

// T*_n = [x^n] (a + bx + cx^2)^n = sum_k binom(2k, k) binom(n, 2k) b^(n-2k) (ac)^k
inline Integer trinomial_coeff(long long a, long long b, long long c, long long n)
{
    Integer t = 0;
    for (long long k = 0; 2 * k <= n; ++k) {
        t += binomial(2 * k, k) * binomial(n, 2 * k) * detail::ipow(b, n - 2 * k) * detail::ipow(a * c, k);
    }
    return t;
}

// R(z) = 1 / (1 - z^2 M(z))
inline TruncatedSeries riordan_gf(std::size_t order)
{
    const auto m = motzkin_gf(order);
    return recip(TruncatedSeries::constant(1, order) - shift(m, 2));
}

// R(z) = (1 + z - sqrt(1 - 2z - 3z^2)) / (2z(1+z))
inline TruncatedSeries riordan_radical(std::size_t order)
{
    const auto w = order + 1;
    const auto num = TruncatedSeries::from_integers({1, 1}, w) - sqrt_unit(TruncatedSeries::from_integers({1, -2, -3}, w));
    return div_valuation(num, TruncatedSeries::from_integers({0, 2, 2}, w));
}

// r_n = sum_{j=0}^{n-2} m_j r_{n-j-2}; the empty sum (n < 2) is 0.
inline Integer riordan_recurrence(std::size_t n, std::span<const Integer> motzkin, std::span<const Integer> riordan)
{
    if (n < 2) {
        return 0;
    }
    if (motzkin.size() < n - 1 || riordan.size() < n - 1) {
        throw std::out_of_range("Riordan convolution at n=" + std::to_string(n) + " needs " + std::to_string(n - 1)
                                + " terms of each prefix");
    }
    Integer r = 0;
    for (std::size_t j = 0; j + 2 <= n; ++j) {
        r += motzkin[j] * riordan[n - j - 2];
    }
    return r;
}

} // namespace gfkit

#endif
