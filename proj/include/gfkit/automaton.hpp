#ifndef GFKIT_AUTOMATON_HPP
#define GFKIT_AUTOMATON_HPP

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

namespace gfkit
{

// Edge weight of a counting automaton: a series whose n-th coefficient is the
// number of parallel length-n paths the edge stands for. Coefficients must be
// nonnegative integers. A zero constant term is required for convergence but
// is checked by validate_convergent, not here, so that non-convergent input
// can be represented and rejected with a diagnostic.
class ParallelTransition
{
public:
    explicit ParallelTransition(TruncatedSeries series) : m_series(std::move(series))
    {
        for (std::size_t i = 0; i < m_series.order(); ++i) {
            if (!is_integral(m_series[i]) || m_series[i] < 0) {
                throw std::invalid_argument("transition coefficient " + m_series[i].str() + " at z^"
                                            + std::to_string(i) + " is not a nonnegative integer");
            }
        }
    }

    static ParallelTransition zero(std::size_t order)
    {
        return ParallelTransition(TruncatedSeries(order));
    }

    // c * z^k
    static ParallelTransition monomial(long long c, std::size_t k, std::size_t order)
    {
        return ParallelTransition(TruncatedSeries::monomial(c, k, order));
    }

    const TruncatedSeries &series() const noexcept { return m_series; }
    std::size_t order() const noexcept { return m_series.order(); }
    bool is_zero() const noexcept { return m_series.is_zero(); }
    bool has_zero_constant_term() const { return m_series[0].is_zero(); }

    ParallelTransition truncated(std::size_t order) const
    {
        return ParallelTransition(m_series.truncated(order));
    }

    friend ParallelTransition operator+(const ParallelTransition &a, const ParallelTransition &b)
    {
        return ParallelTransition(a.m_series + b.m_series);
    }

    friend bool operator==(const ParallelTransition &, const ParallelTransition &) = default;

private:
    TruncatedSeries m_series;
};

using StateId = std::size_t;

// Finite counting automaton with series-labelled edges.
class WeightedAutomaton
{
public:
    using EdgeMap = std::map<std::pair<StateId, StateId>, ParallelTransition>;

    WeightedAutomaton(std::size_t state_count, StateId initial, std::set<StateId> finals)
        : m_state_count(state_count), m_initial(initial), m_finals(std::move(finals))
    {
        if (state_count == 0) {
            throw std::invalid_argument("automaton needs at least one state");
        }
        check_state(initial);
        if (m_finals.empty()) {
            throw std::invalid_argument("automaton needs at least one final state");
        }
        for (auto q : m_finals) {
            check_state(q);
        }
    }

    // Duplicate (source, target) pairs are merged by series addition.
    void add_edge(StateId source, StateId target, const ParallelTransition &weight)
    {
        check_state(source);
        check_state(target);
        const auto key = std::make_pair(source, target);
        if (auto it = m_edges.find(key); it != m_edges.end()) {
            it->second = it->second + weight;
        } else {
            m_edges.emplace(key, weight);
        }
    }

    std::size_t state_count() const noexcept { return m_state_count; }
    StateId initial() const noexcept { return m_initial; }
    const std::set<StateId> &finals() const noexcept { return m_finals; }
    bool is_final(StateId q) const { return m_finals.count(q) != 0; }
    const EdgeMap &edges() const noexcept { return m_edges; }

    void set_labels(std::vector<std::string> labels)
    {
        if (labels.size() != m_state_count) {
            throw std::invalid_argument("label count does not match state count");
        }
        m_labels = std::move(labels);
    }

    std::string label(StateId q) const
    {
        return m_labels.empty() ? std::to_string(q) : m_labels.at(q);
    }

    // Smallest order among the edge weights (max() when there are no edges).
    std::size_t weight_order() const noexcept
    {
        std::size_t order = std::numeric_limits<std::size_t>::max();
        for (const auto &[key, w] : m_edges) {
            order = std::min(order, w.order());
        }
        return order;
    }

private:
    void check_state(StateId q) const
    {
        if (q >= m_state_count) {
            throw std::invalid_argument("state " + std::to_string(q) + " is not declared (have "
                                        + std::to_string(m_state_count) + " states)");
        }
    }

    std::size_t m_state_count;
    StateId m_initial;
    std::set<StateId> m_finals;
    EdgeMap m_edges;
    std::vector<std::string> m_labels;
};

struct ConvergenceVerdict {
    bool accepted = true;
    std::optional<std::pair<StateId, StateId>> offending_edge;
    std::string reason;

    explicit operator bool() const noexcept { return accepted; }
};

// An automaton is accepted iff no edge weight has a nonzero constant term:
// then every edge consumes at least one letter and the number of accepted
// words of each length is a finite sum.
inline ConvergenceVerdict validate_convergent(const WeightedAutomaton &a)
{
    for (const auto &[key, w] : a.edges()) {
        if (!w.has_zero_constant_term()) {
            return {false, key,
                    "edge " + a.label(key.first) + " -> " + a.label(key.second) + " has constant term "
                        + w.series()[0].str()};
        }
    }
    return {};
}

inline void require_convergent(const WeightedAutomaton &a)
{
    auto verdict = validate_convergent(a);
    if (!verdict) {
        throw convergence_error(verdict.reason, verdict.offending_edge->first, verdict.offending_edge->second);
    }
}

// Weights attached to vertex i of a linear automaton: forward i -> i+1,
// backward i+1 -> i and the loop at i.
struct LevelWeights {
    ParallelTransition forward;
    ParallelTransition backward;
    ParallelTransition loop;

    std::size_t order() const noexcept
    {
        return std::min({forward.order(), backward.order(), loop.order()});
    }

    friend bool operator==(const LevelWeights &, const LevelWeights &) = default;
};

// Infinite linear automaton on the vertices 0, 1, 2, ... with initial and
// final vertex 0. Stored as one uniform weight triple plus per-vertex
// overrides; an absent edge is a zero weight.
class LinearSpec
{
public:
    explicit LinearSpec(LevelWeights uniform, std::map<std::size_t, LevelWeights> overrides = {})
        : m_uniform(std::move(uniform)), m_overrides(std::move(overrides))
    {
    }

    const LevelWeights &at(std::size_t i) const
    {
        auto it = m_overrides.find(i);
        return it == m_overrides.end() ? m_uniform : it->second;
    }

    const LevelWeights &uniform() const noexcept { return m_uniform; }
    const std::map<std::size_t, LevelWeights> &overrides() const noexcept { return m_overrides; }
    bool is_uniform() const noexcept { return m_overrides.empty(); }

    std::size_t order() const noexcept
    {
        auto order = m_uniform.order();
        for (const auto &[i, w] : m_overrides) {
            order = std::min(order, w.order());
        }
        return order;
    }

    // First offending transition, if any weight has a nonzero constant term.
    ConvergenceVerdict validate() const
    {
        auto check = [](const LevelWeights &w, const std::string &where) -> ConvergenceVerdict {
            if (!w.forward.has_zero_constant_term()) {
                return {false, std::nullopt, "forward weight at " + where + " has a nonzero constant term"};
            }
            if (!w.backward.has_zero_constant_term()) {
                return {false, std::nullopt, "backward weight at " + where + " has a nonzero constant term"};
            }
            if (!w.loop.has_zero_constant_term()) {
                return {false, std::nullopt, "loop weight at " + where + " has a nonzero constant term"};
            }
            return {};
        };
        if (auto v = check(m_uniform, "uniform level"); !v) {
            return v;
        }
        for (const auto &[i, w] : m_overrides) {
            if (auto v = check(w, "vertex " + std::to_string(i)); !v) {
                return v;
            }
        }
        return {};
    }

private:
    LevelWeights m_uniform;
    std::map<std::size_t, LevelWeights> m_overrides;
};

// Two-sided linear automaton on the integers with initial and final vertex 0
// (the complete bilinear graph, also written G_BL).
//
// `upper` describes vertices 0, 1, 2, ... exactly as a LinearSpec; its vertex-0
// loop is the loop at the origin. `lower` describes 0, -1, -2, ... mirrored:
// lower.at(i).forward is the edge -i -> -(i+1) (moving away from the origin),
// lower.at(i).backward is -(i+1) -> -i, and lower.at(i).loop is the loop at -i
// for i >= 1 (lower.at(0).loop is ignored).
struct BilinearSpec {
    LinearSpec upper;
    LinearSpec lower;

    std::size_t order() const noexcept { return std::min(upper.order(), lower.order()); }

    ConvergenceVerdict validate() const
    {
        if (auto v = upper.validate(); !v) {
            return v;
        }
        return lower.validate();
    }
};

// Keeps vertices 0..s-1 of a linear automaton.
inline WeightedAutomaton linear_truncation(const LinearSpec &spec, std::size_t s)
{
    if (s == 0) {
        throw std::invalid_argument("linear truncation needs at least one state");
    }
    WeightedAutomaton a(s, 0, {0});
    for (std::size_t i = 0; i < s; ++i) {
        const auto &w = spec.at(i);
        if (!w.loop.is_zero()) {
            a.add_edge(i, i, w.loop);
        }
        if (i + 1 < s) {
            if (!w.forward.is_zero()) {
                a.add_edge(i, i + 1, w.forward);
            }
            if (!w.backward.is_zero()) {
                a.add_edge(i + 1, i, w.backward);
            }
        }
    }
    return a;
}

// Keeps vertices -(s-1)..(s-1). State 0 is the origin, state i (1 <= i < s) is
// vertex i and state s-1+i is vertex -i.
inline WeightedAutomaton bilinear_truncation(const BilinearSpec &spec, std::size_t s)
{
    if (s == 0) {
        throw std::invalid_argument("bilinear truncation needs at least one state per side");
    }
    const std::size_t count = 2 * s - 1;
    WeightedAutomaton a(count, 0, {0});
    auto lower_state = [s](std::size_t i) { return i == 0 ? std::size_t{0} : s - 1 + i; };
    std::vector<std::string> labels(count);
    labels[0] = "0";
    for (std::size_t i = 1; i < s; ++i) {
        labels[i] = std::to_string(i);
        labels[lower_state(i)] = "-" + std::to_string(i);
    }
    a.set_labels(std::move(labels));
    auto add = [&a](std::size_t p, std::size_t q, const ParallelTransition &w) {
        if (!w.is_zero()) {
            a.add_edge(p, q, w);
        }
    };
    for (std::size_t i = 0; i < s; ++i) {
        const auto &up = spec.upper.at(i);
        const auto &down = spec.lower.at(i);
        add(i, i, up.loop);
        if (i > 0) {
            add(lower_state(i), lower_state(i), down.loop);
        }
        if (i + 1 < s) {
            add(i, i + 1, up.forward);
            add(i + 1, i, up.backward);
            add(lower_state(i), lower_state(i + 1), down.forward);
            add(lower_state(i + 1), lower_state(i), down.backward);
        }
    }
    return a;
}

// Multigraph in which every edge reads exactly one letter. States
// 0..visible_count-1 are the original states; the rest are hidden chain states.
struct ExpandedAutomaton {
    std::size_t state_count = 0;
    std::size_t visible_count = 0;
    StateId initial = 0;
    std::vector<bool> is_final;
    std::vector<std::pair<StateId, StateId>> edges;
};

// Replaces every edge of weight sum f_k z^k (k <= n) by f_k disjoint chains of
// k unit edges through fresh non-final hidden states. Terms of degree > n are
// dropped: they cannot take part in an accepted word of length <= n.
inline ExpandedAutomaton expand_unit_steps(const WeightedAutomaton &a, std::size_t n,
                                           std::size_t max_states = 20'000'000)
{
    require_convergent(a);
    ExpandedAutomaton out;
    out.state_count = a.state_count();
    out.visible_count = a.state_count();
    out.initial = a.initial();
    for (const auto &[key, w] : a.edges()) {
        if (w.order() <= n && !w.is_zero()) {
            throw std::invalid_argument("edge weight known only to order " + std::to_string(w.order())
                                        + ", expansion needs degree " + std::to_string(n));
        }
        const auto [p, q] = key;
        const auto top = std::min(n, w.order() - 1);
        for (std::size_t k = 1; k <= top; ++k) {
            const Integer mult = to_integer(w.series()[k]);
            if (mult == 0) {
                continue;
            }
            if (Integer(out.state_count) + mult * (k - 1) > max_states) {
                throw std::length_error("unit-step expansion exceeds " + std::to_string(max_states) + " states");
            }
            const auto copies = static_cast<std::size_t>(mult);
            for (std::size_t c = 0; c < copies; ++c) {
                StateId prev = p;
                for (std::size_t step = 1; step < k; ++step) {
                    const StateId hidden = out.state_count++;
                    out.edges.emplace_back(prev, hidden);
                    prev = hidden;
                }
                out.edges.emplace_back(prev, q);
            }
        }
    }
    out.is_final.assign(out.state_count, false);
    for (auto f : a.finals()) {
        out.is_final[f] = true;
    }
    return out;
}

} // namespace gfkit

#endif
