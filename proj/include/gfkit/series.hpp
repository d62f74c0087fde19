#ifndef GFKIT_SERIES_HPP
#define GFKIT_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace gfkit
{

using Integer = boost::multiprecision::cpp_int;

// Exact rational, always kept in lowest terms with a positive denominator.
using Coefficient = boost::multiprecision::cpp_rational;

inline bool is_integral(const Coefficient &c)
{
    return boost::multiprecision::denominator(c) == 1;
}

inline Integer to_integer(const Coefficient &c)
{
    if (!is_integral(c)) {
        throw non_integral("coefficient " + c.str() + " is not an integer");
    }
    return boost::multiprecision::numerator(c);
}

// A power series known exactly on the indices 0..order()-1.
//
// Binary operations on series of different orders truncate to the smaller
// order, i.e. they compute modulo z^min(order).
class TruncatedSeries
{
public:
    explicit TruncatedSeries(std::size_t order) : m_coeffs(checked_order(order)) {}

    TruncatedSeries(std::vector<Coefficient> coeffs, std::size_t order) : m_coeffs(std::move(coeffs))
    {
        checked_order(order);
        if (m_coeffs.size() > order) {
            throw std::invalid_argument("more coefficients (" + std::to_string(m_coeffs.size())
                                        + ") than the series order (" + std::to_string(order) + ")");
        }
        m_coeffs.resize(order);
    }

    static TruncatedSeries constant(const Coefficient &c, std::size_t order)
    {
        return monomial(c, 0, order);
    }

    // c * z^k; vanishes entirely when k >= order.
    static TruncatedSeries monomial(const Coefficient &c, std::size_t k, std::size_t order)
    {
        TruncatedSeries r(order);
        if (k < order) {
            r.m_coeffs[k] = c;
        }
        return r;
    }

    static TruncatedSeries from_integers(std::initializer_list<long long> coeffs, std::size_t order)
    {
        std::vector<Coefficient> v;
        v.reserve(coeffs.size());
        for (auto c : coeffs) {
            v.emplace_back(c);
        }
        return TruncatedSeries(std::move(v), order);
    }

    std::size_t order() const noexcept { return m_coeffs.size(); }

    const Coefficient &operator[](std::size_t n) const noexcept { return m_coeffs[n]; }

    std::span<const Coefficient> coefficients() const noexcept { return m_coeffs; }

    // Index of the first nonzero coefficient, or order() if every known
    // coefficient vanishes.
    std::size_t valuation() const noexcept
    {
        for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
            if (!is_zero(m_coeffs[i])) {
                return i;
            }
        }
        return m_coeffs.size();
    }

    bool is_zero() const noexcept { return valuation() == order(); }

    TruncatedSeries truncated(std::size_t order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("cannot raise series order from " + std::to_string(this->order())
                                        + " to " + std::to_string(order));
        }
        return TruncatedSeries(std::vector<Coefficient>(m_coeffs.begin(), m_coeffs.begin()
                                                                                 + static_cast<std::ptrdiff_t>(order)),
                               order);
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r(*this);
        for (auto &c : r.m_coeffs) {
            c = -c;
        }
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) {
            r.m_coeffs[i] = a.m_coeffs[i] + b.m_coeffs[i];
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) {
            r.m_coeffs[i] = a.m_coeffs[i] - b.m_coeffs[i];
        }
        return r;
    }

    // Cauchy product; zero coefficients of either factor are skipped, which
    // makes products with sparse polynomial weights cheap.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const std::size_t order = std::min(a.order(), b.order());
        TruncatedSeries r(order);
        std::vector<std::size_t> nz_b;
        for (std::size_t j = 0; j < order; ++j) {
            if (!is_zero(b.m_coeffs[j])) {
                nz_b.push_back(j);
            }
        }
        for (std::size_t i = 0; i < order; ++i) {
            if (is_zero(a.m_coeffs[i])) {
                continue;
            }
            for (auto j : nz_b) {
                if (i + j >= order) {
                    break;
                }
                r.m_coeffs[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(const Coefficient &c, const TruncatedSeries &f)
    {
        TruncatedSeries r(f);
        for (auto &x : r.m_coeffs) {
            x *= c;
        }
        return r;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &other) { return *this = *this + other; }
    TruncatedSeries &operator-=(const TruncatedSeries &other) { return *this = *this - other; }
    TruncatedSeries &operator*=(const TruncatedSeries &other) { return *this = *this * other; }

    // Exact equality: same order and same coefficients.
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    friend std::ostream &operator<<(std::ostream &os, const TruncatedSeries &f)
    {
        os << '[';
        for (std::size_t i = 0; i < f.order(); ++i) {
            os << (i ? ", " : "") << f.m_coeffs[i];
        }
        return os << "] + O(z^" << f.order() << ')';
    }

private:
    static bool is_zero(const Coefficient &c) noexcept { return c.is_zero(); }

    static std::size_t checked_order(std::size_t order)
    {
        if (order == 0) {
            throw std::invalid_argument("series order must be positive");
        }
        return order;
    }

    std::vector<Coefficient> m_coeffs;
};

// Coefficients 0..min(order)-1 agree.
inline bool equal_up_to_order(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const auto n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

inline TruncatedSeries make_series(std::vector<Coefficient> coeffs, long long order)
{
    if (order <= 0) {
        throw std::invalid_argument("series order must be positive, got " + std::to_string(order));
    }
    return TruncatedSeries(std::move(coeffs), static_cast<std::size_t>(order));
}

inline TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return a + b;
}

inline TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return a * b;
}

inline TruncatedSeries pow(const TruncatedSeries &f, std::size_t e)
{
    TruncatedSeries r = TruncatedSeries::constant(1, f.order());
    for (std::size_t i = 0; i < e; ++i) {
        r *= f;
    }
    return r;
}

inline TruncatedSeries recip(const TruncatedSeries &f)
{
    if (f[0].is_zero()) {
        throw not_invertible("series with zero constant term has no reciprocal");
    }
    const auto n = f.order();
    const Coefficient inv0 = 1 / f[0];
    std::vector<std::size_t> nz;
    for (std::size_t j = 1; j < n; ++j) {
        if (!f[j].is_zero()) {
            nz.push_back(j);
        }
    }
    std::vector<Coefficient> g(n);
    g[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Coefficient acc;
        for (auto j : nz) {
            if (j > k) {
                break;
            }
            acc += f[j] * g[k - j];
        }
        g[k] = -inv0 * acc;
    }
    return TruncatedSeries(std::move(g), n);
}

// Square root of a series with constant term 1, positive branch.
inline TruncatedSeries sqrt_unit(const TruncatedSeries &f)
{
    if (f[0] != 1) {
        throw unsupported_radicand("radicand constant term is " + f[0].str() + ", expected 1");
    }
    const auto n = f.order();
    std::vector<Coefficient> g(n);
    g[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Coefficient acc;
        for (std::size_t j = 1; j < k; ++j) {
            acc += g[j] * g[k - j];
        }
        g[k] = (f[k] - acc) / 2;
    }
    return TruncatedSeries(std::move(g), n);
}

// Multiplication by z^k. A positive shift raises the order by k (the new low
// coefficients are known zeros); a negative shift drops |k| leading zeros and
// lowers the order accordingly.
inline TruncatedSeries shift(const TruncatedSeries &f, long long k)
{
    if (k >= 0) {
        const auto s = static_cast<std::size_t>(k);
        std::vector<Coefficient> c(s);
        c.insert(c.end(), f.coefficients().begin(), f.coefficients().end());
        return TruncatedSeries(std::move(c), f.order() + s);
    }
    const auto s = static_cast<std::size_t>(-k);
    if (s > f.valuation()) {
        throw not_divisible("cannot divide by z^" + std::to_string(s) + ": valuation is "
                            + std::to_string(f.valuation()));
    }
    if (s >= f.order()) {
        throw not_divisible("shift by z^-" + std::to_string(s) + " leaves no known coefficients");
    }
    auto c = f.coefficients().subspan(s);
    return TruncatedSeries(std::vector<Coefficient>(c.begin(), c.end()), f.order() - s);
}

// a / b where b may have positive valuation v: both are divided by z^v first,
// so the quotient is known to order min(a.order, b.order) - v.
inline TruncatedSeries div_valuation(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (b.is_zero()) {
        throw division_by_zero("divisor vanishes up to its order " + std::to_string(b.order()));
    }
    const auto v = b.valuation();
    if (a.valuation() < v) {
        throw not_divisible("numerator valuation " + std::to_string(a.valuation())
                            + " is below divisor valuation " + std::to_string(v));
    }
    const auto order = std::min(a.order(), b.order());
    if (v >= order) {
        throw not_divisible("quotient would have no known coefficients");
    }
    const auto sv = static_cast<long long>(v);
    return shift(a.truncated(order), -sv) * recip(shift(b.truncated(order), -sv));
}

inline const Coefficient &coeff(const TruncatedSeries &f, std::size_t n)
{
    if (n >= f.order()) {
        throw std::out_of_range("coefficient index " + std::to_string(n) + " beyond order "
                                + std::to_string(f.order()));
    }
    return f[n];
}

// Coefficients 0..order-1 as integers; throws non_integral otherwise.
inline std::vector<Integer> integer_terms(const TruncatedSeries &f)
{
    std::vector<Integer> out;
    out.reserve(f.order());
    for (const auto &c : f.coefficients()) {
        out.push_back(to_integer(c));
    }
    return out;
}

} // namespace gfkit

#endif
