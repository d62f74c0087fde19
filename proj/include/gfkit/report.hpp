#ifndef GFKIT_REPORT_HPP
#define GFKIT_REPORT_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"

namespace gfkit
{

struct FirstDiff {
    std::size_t index;
    Integer left;
    Integer right;
};

struct PairAgreement {
    std::string left;
    std::string right;
    bool agree = true;
    std::optional<FirstDiff> first_diff;
};

struct MethodRun {
    std::string name;
    Terms terms;
    std::int64_t elapsed_ms = 0;
};

// Result of running several methods on one family. Two methods agree iff their
// term vectors coincide on the common prefix.
struct SequenceReport {
    std::string family;
    std::map<std::string, long long> params;
    std::size_t order = 0;
    std::vector<MethodRun> methods;
    std::vector<PairAgreement> agreement;
    std::vector<std::string> notes;

    bool all_agree() const
    {
        return std::all_of(agreement.begin(), agreement.end(), [](const auto &p) { return p.agree; });
    }
};

inline PairAgreement compare_terms(const MethodRun &a, const MethodRun &b)
{
    PairAgreement p{a.name, b.name, true, std::nullopt};
    const auto n = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.terms[i] != b.terms[i]) {
            p.agree = false;
            p.first_diff = FirstDiff{i, a.terms[i], b.terms[i]};
            break;
        }
    }
    return p;
}

inline SequenceReport build_report(std::string family, std::map<std::string, long long> params, std::size_t order,
                                   std::vector<MethodRun> runs, std::vector<std::string> notes = {})
{
    SequenceReport r{std::move(family), std::move(params), order, std::move(runs), {}, std::move(notes)};
    for (std::size_t i = 0; i < r.methods.size(); ++i) {
        for (std::size_t j = i + 1; j < r.methods.size(); ++j) {
            r.agreement.push_back(compare_terms(r.methods[i], r.methods[j]));
        }
    }
    return r;
}

inline std::map<std::string, long long> params_map(const FamilyCatalogEntry &e, const FamilyParams &p)
{
    std::map<std::string, long long> out;
    for (const auto &name : e.params) {
        const auto &v = name == "k" ? p.k : name == "a" ? p.a : name == "b" ? p.b : p.c;
        out[name] = v.value_or(1);
    }
    return out;
}

// Runs every applicable method concurrently. The brute-force column is limited
// to paths of length <= brute_cap; the report notes when that happens.
inline SequenceReport run_verify(const FamilyCatalogEntry &e, const FamilyParams &params, std::size_t n,
                                 const MethodOptions &options = {}, std::size_t brute_cap = 14)
{
    check_params(e, params);
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, std::future<MethodRun>>> jobs;
    for (const auto &name : e.applicable_methods(params)) {
        MethodRequest req{params, n, options};
        if (name == "brute") {
            const auto max_terms = brute_cap / e.index_stride;
            if (n > max_terms) {
                req.n = max_terms;
                notes.push_back("brute capped at n=" + std::to_string(max_terms) + " (path length "
                                + std::to_string(max_terms * e.index_stride) + ")");
            }
        }
        const auto *method = e.find_method(name);
        jobs.emplace_back(name, std::async(std::launch::async, [method, req, name] {
                              const auto t0 = std::chrono::steady_clock::now();
                              auto terms = method->compute(req);
                              const auto dt = std::chrono::steady_clock::now() - t0;
                              return MethodRun{name, std::move(terms),
                                               std::chrono::duration_cast<std::chrono::milliseconds>(dt).count()};
                          }));
    }
    std::vector<MethodRun> runs;
    for (auto &[name, job] : jobs) {
        runs.push_back(job.get());
    }
    return build_report(e.name, params_map(e, params), std::max(n + 1, options.order.value_or(0)), std::move(runs),
                        std::move(notes));
}

// Terms are emitted as decimal strings: they routinely exceed 64 bits and
// must survive a JSON round trip exactly.
inline nlohmann::json terms_json(const Terms &t)
{
    auto arr = nlohmann::json::array();
    for (const auto &x : t) {
        arr.push_back(x.str());
    }
    return arr;
}

// Keys are emitted in sorted order (nlohmann::json's std::map objects) and no
// floating-point values appear, so dump(parse(dump(r))) == dump(r).
inline nlohmann::json to_json(const SequenceReport &r)
{
    nlohmann::json j;
    j["family"] = r.family;
    j["params"] = nlohmann::json::object();
    for (const auto &[k, v] : r.params) {
        j["params"][k] = v;
    }
    j["order"] = r.order;
    j["methods"] = nlohmann::json::object();
    j["timings_ms"] = nlohmann::json::object();
    for (const auto &m : r.methods) {
        j["methods"][m.name] = terms_json(m.terms);
        j["timings_ms"][m.name] = m.elapsed_ms;
    }
    j["agreement"] = nlohmann::json::array();
    for (const auto &p : r.agreement) {
        nlohmann::json a;
        a["pair"] = {p.left, p.right};
        a["agree"] = p.agree;
        if (p.first_diff) {
            a["first_diff"] = {{"index", p.first_diff->index},
                               {"left", p.first_diff->left.str()},
                               {"right", p.first_diff->right.str()}};
        } else {
            a["first_diff"] = nullptr;
        }
        j["agreement"].push_back(std::move(a));
    }
    j["all_agree"] = r.all_agree();
    j["notes"] = r.notes;
    return j;
}

} // namespace gfkit

#endif
