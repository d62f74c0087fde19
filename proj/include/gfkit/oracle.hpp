#ifndef GFKIT_ORACLE_HPP
#define GFKIT_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "series.hpp"

// Brute-force ground truth. The two counting routes here are deliberately
// unrelated: brute_paths walks lattice paths step by step and never looks at
// an automaton, while dp_count counts words of an automaton after expanding it
// into unit steps. A mistake in how a family is encoded as an automaton shows
// up as a disagreement between them.

namespace gfkit
{

struct LevelStep {
    std::size_t length = 1;
    std::uint64_t colors = 1;
};

// Lattice paths from height 0 back to height 0 built from rises (1,1), falls
// (1,-1) and level steps (j,0), each step kind available in some number of
// colours.
struct PathFamily {
    std::uint64_t rise_colors = 1;
    std::uint64_t fall_colors = 1;
    std::vector<LevelStep> level_steps;
    // When nonzero, level steps (j,0) exist for every j >= 1 in this many colours.
    std::uint64_t every_length_level_colors = 0;
    // Paths may not go below the x-axis.
    bool nonnegative = true;
    // Level steps are forbidden while on the x-axis.
    bool axis_level_ban = false;
    // Largest length brute_paths agrees to enumerate.
    std::size_t cap = 20;
};

namespace paths
{

inline PathFamily motzkin()
{
    return {1, 1, {{1, 1}}, 0, true, false};
}

inline PathFamily dyck()
{
    return {1, 1, {}, 0, true, false};
}

inline PathFamily riordan()
{
    return {1, 1, {{1, 1}}, 0, true, true};
}

inline PathFamily kcolored(std::uint64_t k)
{
    return {1, 1, {{1, k}}, 0, true, false};
}

inline PathFamily gen_motzkin(std::size_t k)
{
    return {1, 1, {{k, 1}}, 0, true, false};
}

inline PathFamily fk(std::uint64_t k)
{
    return {1, 1, {}, k, true, false};
}

inline PathFamily grand_motzkin()
{
    return {1, 1, {{1, 1}}, 0, false, false};
}

inline PathFamily trinomial(std::uint64_t a, std::uint64_t b, std::uint64_t c)
{
    return {a, c, {{1, b}}, 0, false, false};
}

} // namespace paths

namespace detail
{

inline std::uint64_t checked_add(std::uint64_t x, std::uint64_t y)
{
    std::uint64_t r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw std::overflow_error("path count exceeds 64 bits");
    }
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw std::overflow_error("path count exceeds 64 bits");
    }
    return r;
}

class PathWalker
{
public:
    explicit PathWalker(const PathFamily &family) : m_family(family) {}

    // Number of coloured completions from `height` using exactly `remaining` steps' worth of length.
    std::uint64_t walk(long long height, std::size_t remaining) const
    {
        if (remaining == 0) {
            return height == 0 ? 1 : 0;
        }
        // A path more than `remaining` away from the axis cannot come back.
        if (static_cast<std::size_t>(height < 0 ? -height : height) > remaining) {
            return 0;
        }
        std::uint64_t total = 0;
        if (m_family.rise_colors != 0) {
            total = checked_add(total, checked_mul(m_family.rise_colors, walk(height + 1, remaining - 1)));
        }
        if (m_family.fall_colors != 0 && (!m_family.nonnegative || height > 0)) {
            total = checked_add(total, checked_mul(m_family.fall_colors, walk(height - 1, remaining - 1)));
        }
        if (!(m_family.axis_level_ban && height == 0)) {
            for (const auto &step : m_family.level_steps) {
                if (step.colors != 0 && step.length <= remaining) {
                    total = checked_add(total, checked_mul(step.colors, walk(height, remaining - step.length)));
                }
            }
            if (m_family.every_length_level_colors != 0) {
                for (std::size_t j = 1; j <= remaining; ++j) {
                    total = checked_add(total,
                                        checked_mul(m_family.every_length_level_colors, walk(height, remaining - j)));
                }
            }
        }
        return total;
    }

private:
    const PathFamily &m_family;
};

} // namespace detail

// Exhaustive enumeration of the admissible paths of length n.
inline Integer brute_paths(const PathFamily &family, std::size_t n)
{
    if (n > family.cap) {
        throw std::invalid_argument("brute_paths refuses n=" + std::to_string(n) + " above the cap "
                                    + std::to_string(family.cap) + "; use dp_count");
    }
    for (const auto &s : family.level_steps) {
        if (s.length == 0) {
            throw std::invalid_argument("level step length must be >= 1");
        }
    }
    return Integer(detail::PathWalker(family).walk(0, n));
}

// counts[r] = number of words of length r accepted by the unit-step automaton,
// from the backward table acc_r[q] = number of accepted words of length r read
// from state q.
inline std::vector<Integer> dp_count(const ExpandedAutomaton &a, std::size_t n)
{
    std::vector<Integer> acc(a.state_count);
    for (std::size_t q = 0; q < a.state_count; ++q) {
        acc[q] = a.is_final[q] ? 1 : 0;
    }
    std::vector<Integer> counts{acc[a.initial]};
    counts.reserve(n + 1);
    std::vector<Integer> next(a.state_count);
    for (std::size_t r = 1; r <= n; ++r) {
        for (auto &x : next) {
            x = 0;
        }
        for (const auto &[p, q] : a.edges) {
            next[p] += acc[q];
        }
        acc.swap(next);
        counts.push_back(acc[a.initial]);
    }
    return counts;
}

inline std::vector<Integer> dp_count(const WeightedAutomaton &a, std::size_t n)
{
    return dp_count(expand_unit_steps(a, n), n);
}

// Words of length <= n never get further than n/2 from vertex 0 and back, so
// vertices 0..n are more than enough.
inline std::vector<Integer> dp_count(const LinearSpec &spec, std::size_t n)
{
    if (auto v = spec.validate(); !v) {
        throw convergence_error(v.reason, 0, 0);
    }
    return dp_count(linear_truncation(spec, n + 1), n);
}

inline std::vector<Integer> dp_count(const BilinearSpec &spec, std::size_t n)
{
    if (auto v = spec.validate(); !v) {
        throw convergence_error(v.reason, 0, 0);
    }
    return dp_count(bilinear_truncation(spec, n + 1), n);
}

} // namespace gfkit

#endif
