#ifndef GFKIT_GF_ENGINE_HPP
#define GFKIT_GF_ENGINE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "automaton.hpp"
#include "combinatorics.hpp"
#include "errors.hpp"
#include "series.hpp"

namespace gfkit
{

struct GfSolution {
    // L_p for every state p: the GF of the words accepted when starting at p.
    std::vector<TruncatedSeries> per_state;
    // L at the initial state.
    TruncatedSeries root;
};

// Solves L_p = sum_{(p,q,w)} w L_q + [p final] for every state p.
//
// This is the fixed-point iteration L <- T L + b started from L = 0. Every
// weight has valuation >= 1, so round r of the iteration fixes coefficient
// r - 1 for good and later rounds only touch higher coefficients; the loop
// below performs round r by computing exactly that coefficient from the ones
// already settled. The result is known to min(order, weight orders).
inline GfSolution solve_system(const WeightedAutomaton &a, std::size_t order)
{
    require_convergent(a);
    if (order == 0) {
        throw std::invalid_argument("solve_system needs a positive order");
    }
    order = std::min(order, a.weight_order());

    struct Out {
        StateId target;
        const TruncatedSeries *weight;
        std::vector<std::size_t> support;
    };
    const auto n_states = a.state_count();
    std::vector<std::vector<Out>> out(n_states);
    for (const auto &[key, w] : a.edges()) {
        Out o{key.second, &w.series(), {}};
        for (std::size_t j = 1; j < order; ++j) {
            if (!w.series()[j].is_zero()) {
                o.support.push_back(j);
            }
        }
        out[key.first].push_back(std::move(o));
    }

    std::vector<std::vector<Coefficient>> L(n_states, std::vector<Coefficient>(order));
    for (std::size_t r = 0; r < order; ++r) {
        for (StateId p = 0; p < n_states; ++p) {
            Coefficient acc = (r == 0 && a.is_final(p)) ? 1 : 0;
            for (const auto &o : out[p]) {
                for (auto j : o.support) {
                    if (j > r) {
                        break;
                    }
                    acc += (*o.weight)[j] * L[o.target][r - j];
                }
            }
            L[p][r] = std::move(acc);
        }
    }

    GfSolution sol{{}, TruncatedSeries(order)};
    sol.per_state.reserve(n_states);
    for (auto &coeffs : L) {
        sol.per_state.emplace_back(std::move(coeffs), order);
    }
    sol.root = sol.per_state[a.initial()];
    return sol;
}

// L_p - sum w L_q - [p final] for every state; all zero for an exact solution.
inline std::vector<TruncatedSeries> system_residual(const WeightedAutomaton &a, const GfSolution &sol)
{
    std::vector<TruncatedSeries> res;
    res.reserve(a.state_count());
    for (StateId p = 0; p < a.state_count(); ++p) {
        const auto order = sol.per_state[p].order();
        res.push_back(sol.per_state[p] - TruncatedSeries::constant(a.is_final(p) ? 1 : 0, order));
    }
    for (const auto &[key, w] : a.edges()) {
        res[key.first] -= w.series() * sol.per_state[key.second];
    }
    return res;
}

// Continued-fraction depth beyond which deeper levels cannot change the
// coefficients below z^order: each level contributes a factor f_i g_i of
// valuation >= 2.
inline std::size_t cf_depth_bound(std::size_t order)
{
    if (order == 0) {
        throw std::invalid_argument("cf_depth_bound needs order >= 1");
    }
    return (order + 1) / 2 + 1;
}

// E_i(z): the continued fraction of the linear automaton started at vertex i,
// evaluated bottom-up from `depth` levels (default cf_depth_bound(order)).
inline TruncatedSeries cf_tail(const LinearSpec &spec, std::size_t i, std::size_t order,
                               std::optional<std::size_t> depth = std::nullopt)
{
    if (auto v = spec.validate(); !v) {
        throw convergence_error(v.reason, i, i);
    }
    order = std::min(order, spec.order());
    const std::size_t d = depth.value_or(cf_depth_bound(order));
    if (d == 0) {
        throw std::invalid_argument("continued fraction depth must be >= 1");
    }
    const auto one = TruncatedSeries::constant(1, order);
    auto level = [&](std::size_t j) -> const LevelWeights & { return spec.at(j); };

    auto e = recip(one - level(i + d - 1).loop.series());
    for (std::size_t j = i + d - 1; j-- > i;) {
        const auto &w = level(j);
        e = recip(one - w.loop.series() - w.forward.series() * w.backward.series() * e);
    }
    return e;
}

inline TruncatedSeries linear_cf(const LinearSpec &spec, std::size_t order,
                                 std::optional<std::size_t> depth = std::nullopt)
{
    return cf_tail(spec, 0, order, depth);
}

// E_b = 1 / (1 - h_0 - f_0 g_0 E_1 - f'_0 g'_0 E'_1).
inline TruncatedSeries bilinear_gf(const BilinearSpec &spec, std::size_t order,
                                   std::optional<std::size_t> depth = std::nullopt)
{
    order = std::min(order, spec.order());
    const auto e_up = cf_tail(spec.upper, 1, order, depth);
    const auto e_down = cf_tail(spec.lower, 1, order, depth);
    const auto &up = spec.upper.at(0);
    const auto &down = spec.lower.at(0);
    const auto one = TruncatedSeries::constant(1, order);
    return recip(one - up.loop.series() - up.forward.series() * up.backward.series() * e_up
                 - down.forward.series() * down.backward.series() * e_down);
}

namespace detail
{

inline void require_zero_constants(std::initializer_list<const ParallelTransition *> ts)
{
    for (auto *t : ts) {
        if (!t->has_zero_constant_term()) {
            throw std::invalid_argument("uniform weights must have zero constant term");
        }
    }
}

} // namespace detail

// B(z) = (1 - h - sqrt((1-h)^2 - 4fg)) / (2fg), the GF of the uniform linear
// automaton. The radical takes the branch with B(0) = 1. Division by 2fg costs
// valuation(fg) coefficients, so the inputs must be known to order +
// valuation(fg). When fg vanishes the automaton is a single looped state and
// 1/(1-h) is returned.
inline TruncatedSeries uniform_radical(const ParallelTransition &f, const ParallelTransition &g,
                                       const ParallelTransition &h, std::size_t order)
{
    detail::require_zero_constants({&f, &g, &h});
    const auto in_order = std::min({f.order(), g.order(), h.order()});
    if (in_order < order) {
        throw std::invalid_argument("weights known to order " + std::to_string(in_order) + ", need "
                                    + std::to_string(order));
    }
    const auto fg = f.series() * g.series();
    if (fg.is_zero()) {
        return recip(TruncatedSeries::constant(1, order) - h.series().truncated(order));
    }
    const auto v = fg.valuation();
    const auto work = order + v;
    if (in_order < work) {
        throw std::invalid_argument("radical form needs weights to order " + std::to_string(work) + ", have "
                                    + std::to_string(in_order));
    }
    const auto one_minus_h = TruncatedSeries::constant(1, work) - h.series().truncated(work);
    const auto fgw = fg.truncated(work);
    const auto root = sqrt_unit(one_minus_h * one_minus_h - Coefficient(4) * fgw);
    return div_valuation(one_minus_h - root, Coefficient(2) * fgw);
}

// sum_{n,m >= 0} C_n binom(m+2n, m) (fg)^n h^m, stopping each index once the
// term's valuation reaches the order.
inline TruncatedSeries uniform_sum(const ParallelTransition &f, const ParallelTransition &g,
                                   const ParallelTransition &h, std::size_t order)
{
    detail::require_zero_constants({&f, &g, &h});
    order = std::min({order, f.order(), g.order(), h.order()});
    const auto fg = f.series().truncated(order) * g.series().truncated(order);
    const auto hs = h.series().truncated(order);
    const auto cat = catalan_numbers(order);

    TruncatedSeries total(order);
    auto fg_pow = TruncatedSeries::constant(1, order);
    for (std::size_t n = 0; !fg_pow.is_zero(); ++n) {
        auto h_pow = TruncatedSeries::constant(1, order);
        for (std::size_t m = 0; fg_pow.valuation() + h_pow.valuation() < order; ++m) {
            const auto c = cat[n] * binomial(static_cast<long long>(m + 2 * n), static_cast<long long>(m));
            total += Coefficient(c) * (fg_pow * h_pow);
            h_pow *= hs;
        }
        fg_pow *= fg;
    }
    return total;
}

// B_b(z) = 1 / sqrt((1-h)^2 - 4fg), the GF of the uniform bilinear automaton.
inline TruncatedSeries bilinear_radical(const ParallelTransition &f, const ParallelTransition &g,
                                        const ParallelTransition &h, std::size_t order)
{
    detail::require_zero_constants({&f, &g, &h});
    order = std::min({order, f.order(), g.order(), h.order()});
    const auto one_minus_h = TruncatedSeries::constant(1, order) - h.series().truncated(order);
    const auto fg = f.series().truncated(order) * g.series().truncated(order);
    return recip(sqrt_unit(one_minus_h * one_minus_h - Coefficient(4) * fg));
}

// Uniform bilinear GF with g = f as the triple sum
//   1/(1-h) + sum_{n>=1} sum_{k>=0} sum_{l>=0}
//       2^n n/(n+2k) binom(n+2k, k) binom(l+2n+2k, l) f^(2n+2k) h^l.
// Terms sharing p = n + k share the series factor f^(2p) h^l and the binomial
// binom(l+2p, l), so the n-sum is folded into one scalar per p.
inline TruncatedSeries bilinear_sum(const ParallelTransition &f, const ParallelTransition &h, std::size_t order)
{
    detail::require_zero_constants({&f, &h});
    order = std::min({order, f.order(), h.order()});
    const auto fs = f.series().truncated(order);
    const auto hs = h.series().truncated(order);
    auto total = recip(TruncatedSeries::constant(1, order) - hs);

    const auto f2 = fs * fs;
    auto f_pow = f2; // f^(2p)
    for (long long p = 1; !f_pow.is_zero(); ++p) {
        Integer scalar = 0;
        for (long long n = 1; n <= p; ++n) {
            scalar += (Integer(1) << static_cast<unsigned>(n)) * catalan_power_coeff(n, p - n);
        }
        auto h_pow = TruncatedSeries::constant(1, order);
        for (long long l = 0; f_pow.valuation() + h_pow.valuation() < order; ++l) {
            total += Coefficient(scalar * binomial(l + 2 * p, l)) * (f_pow * h_pow);
            h_pow *= hs;
        }
        f_pow *= f2;
    }
    return total;
}

} // namespace gfkit

#endif
