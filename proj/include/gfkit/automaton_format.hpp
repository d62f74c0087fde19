#ifndef GFKIT_AUTOMATON_FORMAT_HPP
#define GFKIT_AUTOMATON_FORMAT_HPP

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "automaton.hpp"
#include "errors.hpp"

namespace gfkit
{

// Plain-text counting automaton, one directive per line (see
// docs/automaton-format.md):
//
//   # comment
//   states q0 q1 ...          optional, declares states that have no edges
//   initial q0
//   final q0 q2 ...
//   q0 q1 2 1                 edge q0 -> q1 of weight 2z + z^2
//   q1 q1 : 1 1               edge with explicit constant term, 1 + z
//
// States are declared by first appearance. Coefficients are nonnegative
// decimal integers; an edge line without ':' starts at the z coefficient.
// Weights are materialised at `order` (higher terms are dropped).
inline WeightedAutomaton parse_automaton(std::string_view text, std::size_t order)
{
    struct RawEdge {
        std::size_t line;
        std::size_t source;
        std::size_t target;
        std::vector<Coefficient> coeffs;
    };

    std::map<std::string, std::size_t> ids;
    std::vector<std::string> labels;
    auto state = [&](const std::string &name, std::size_t line) {
        static const std::set<std::string> reserved{"initial", "final", "states", ":"};
        if (reserved.count(name)) {
            throw parse_error("'" + name + "' is not a valid state name", line);
        }
        auto [it, inserted] = ids.emplace(name, labels.size());
        if (inserted) {
            labels.push_back(name);
        }
        return it->second;
    };
    auto coefficient = [](const std::string &tok, std::size_t line) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
            throw parse_error("expected a nonnegative integer coefficient, got '" + tok + "'", line);
        }
        return Coefficient(Integer(tok));
    };

    std::optional<std::size_t> initial;
    std::vector<std::size_t> finals;
    std::vector<RawEdge> edges;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        if (tok[0] == "initial") {
            if (tok.size() != 2) {
                throw parse_error("'initial' takes exactly one state", lineno);
            }
            if (initial) {
                throw parse_error("duplicate 'initial' line", lineno);
            }
            initial = state(tok[1], lineno);
        } else if (tok[0] == "final") {
            if (tok.size() < 2) {
                throw parse_error("'final' needs at least one state", lineno);
            }
            for (std::size_t i = 1; i < tok.size(); ++i) {
                finals.push_back(state(tok[i], lineno));
            }
        } else if (tok[0] == "states") {
            for (std::size_t i = 1; i < tok.size(); ++i) {
                state(tok[i], lineno);
            }
        } else {
            if (tok.size() < 3) {
                throw parse_error("edge line needs 'source target coefficients...'", lineno);
            }
            RawEdge e{lineno, state(tok[0], lineno), state(tok[1], lineno), {}};
            std::size_t first = 2;
            if (tok[2] == ":") {
                if (tok.size() < 4) {
                    throw parse_error("':' must be followed by coefficients", lineno);
                }
                first = 3;
            } else {
                e.coeffs.emplace_back(0);
            }
            for (std::size_t i = first; i < tok.size(); ++i) {
                e.coeffs.push_back(coefficient(tok[i], lineno));
            }
            edges.push_back(std::move(e));
        }
    }
    if (!initial) {
        throw parse_error("missing 'initial' line", lineno);
    }
    if (finals.empty()) {
        throw parse_error("missing 'final' line", lineno);
    }

    WeightedAutomaton a(labels.size(), *initial, std::set<std::size_t>(finals.begin(), finals.end()));
    a.set_labels(labels);
    for (auto &e : edges) {
        if (e.coeffs.size() > order) {
            e.coeffs.resize(order);
        }
        a.add_edge(e.source, e.target, ParallelTransition(TruncatedSeries(std::move(e.coeffs), order)));
    }
    return a;
}

inline WeightedAutomaton load_automaton(const std::string &path, std::size_t order)
{
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot open automaton file '" + path + "'");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_automaton(buf.str(), order);
}

} // namespace gfkit

#endif
