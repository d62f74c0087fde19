#ifndef GFKIT_CATALOG_HPP
#define GFKIT_CATALOG_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "closed_forms.hpp"
#include "families.hpp"
#include "gf_engine.hpp"
#include "oracle.hpp"

namespace gfkit
{

using Terms = std::vector<Integer>;

struct MethodOptions {
    // Continued-fraction depth override.
    std::optional<std::size_t> depth;
    // Working series order; defaults to n + 1 and is never below it.
    std::optional<std::size_t> order;
};

struct MethodRequest {
    FamilyParams params;
    std::size_t n = 0;
    MethodOptions options;

    std::size_t order() const { return std::max(n + 1, options.order.value_or(0)); }
};

struct FamilyMethod {
    std::string name;
    std::function<Terms(const MethodRequest &)> compute;
    // Some methods only exist for part of the parameter space.
    std::function<bool(const FamilyParams &)> applicable = [](const FamilyParams &) { return true; };
};

struct FamilyCatalogEntry {
    std::string name;
    std::string description;
    std::vector<std::string> params;
    // Term i of the sequence counts paths of length i * index_stride
    // (2 for Schroeder numbers, which live on the even coefficients).
    std::size_t index_stride = 1;
    std::vector<FamilyMethod> methods;
    std::function<PathFamily(const FamilyParams &)> oracle;

    const FamilyMethod *find_method(std::string_view method) const
    {
        auto it = std::find_if(methods.begin(), methods.end(), [&](const auto &m) { return m.name == method; });
        return it == methods.end() ? nullptr : &*it;
    }

    std::vector<std::string> applicable_methods(const FamilyParams &p) const
    {
        std::vector<std::string> out;
        for (const auto &m : methods) {
            if (m.applicable(p)) {
                out.push_back(m.name);
            }
        }
        return out;
    }
};

namespace detail
{

inline Terms first_terms(const TruncatedSeries &f, std::size_t count, std::size_t stride = 1)
{
    if (f.order() < (count - 1) * stride + 1) {
        throw std::logic_error("series too short for the requested terms");
    }
    Terms out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(to_integer(f[i * stride]));
    }
    return out;
}

inline Terms every(const Terms &t, std::size_t count, std::size_t stride)
{
    Terms out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(t.at(i * stride));
    }
    return out;
}

inline Terms by_index(std::size_t count, const std::function<Integer(long long)> &term)
{
    Terms out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(term(static_cast<long long>(i)));
    }
    return out;
}

inline std::size_t working_order(const MethodRequest &r, std::size_t stride)
{
    return std::max(r.order(), r.n * stride + 1);
}

// Standard method set for a family given by a linear or bilinear spec.
// `stride` maps term i to series index i * stride.
inline std::vector<FamilyMethod> automaton_methods(std::string family, std::size_t stride)
{
    std::vector<FamilyMethod> out;
    out.push_back({"cf", [=](const MethodRequest &r) {
                       const auto order = working_order(r, stride);
                       auto spec = family_spec(family, r.params, order);
                       if (auto *lin = std::get_if<LinearSpec>(&spec)) {
                           return first_terms(linear_cf(*lin, order, r.options.depth), r.n + 1, stride);
                       }
                       return first_terms(bilinear_gf(std::get<BilinearSpec>(spec), order, r.options.depth), r.n + 1,
                                          stride);
                   }});
    out.push_back({"system", [=](const MethodRequest &r) {
                       const auto order = working_order(r, stride);
                       auto spec = family_spec(family, r.params, order);
                       const auto s = r.options.depth.value_or(cf_depth_bound(order));
                       auto a = std::holds_alternative<LinearSpec>(spec)
                                    ? linear_truncation(std::get<LinearSpec>(spec), s)
                                    : bilinear_truncation(std::get<BilinearSpec>(spec), s);
                       return first_terms(solve_system(a, order).root, r.n + 1, stride);
                   }});
    out.push_back({"dp", [=](const MethodRequest &r) {
                       const auto len = r.n * stride;
                       auto spec = family_spec(family, r.params, len + 1);
                       auto counts = std::visit([len](const auto &s) { return dp_count(s, len); }, spec);
                       return every(counts, r.n + 1, stride);
                   }});
    return out;
}

inline bool uniform_weights_available(std::string_view family)
{
    return family != "riordan";
}

// radical and sum routes for uniform linear families.
inline void add_uniform_linear_methods(std::vector<FamilyMethod> &out, std::string family, std::size_t stride)
{
    out.push_back({"radical", [=](const MethodRequest &r) {
                       const auto order = working_order(r, stride);
                       const auto u = linear_family(family, r.params, order + 2).uniform();
                       return first_terms(uniform_radical(u.forward, u.backward, u.loop, order), r.n + 1, stride);
                   }});
    out.push_back({"sum", [=](const MethodRequest &r) {
                       const auto order = working_order(r, stride);
                       const auto u = linear_family(family, r.params, order).uniform();
                       return first_terms(uniform_sum(u.forward, u.backward, u.loop, order), r.n + 1, stride);
                   }});
}

inline FamilyMethod brute_method(std::function<PathFamily(const FamilyParams &)> oracle, std::size_t stride)
{
    return {"brute", [=](const MethodRequest &r) {
                const auto family = oracle(r.params);
                return by_index(r.n + 1, [&](long long i) { return brute_paths(family, static_cast<std::size_t>(i) * stride); });
            }};
}

inline std::uint64_t as_count(const std::optional<long long> &v)
{
    return static_cast<std::uint64_t>(v.value_or(1));
}

inline std::vector<FamilyCatalogEntry> build_catalog()
{
    std::vector<FamilyCatalogEntry> cat;

    auto linear_entry = [](std::string name, std::string description, std::vector<std::string> params,
                           std::function<PathFamily(const FamilyParams &)> oracle, std::size_t stride = 1) {
        FamilyCatalogEntry e{name, std::move(description), std::move(params), stride, {}, oracle};
        e.methods = automaton_methods(name, stride);
        if (uniform_weights_available(name)) {
            add_uniform_linear_methods(e.methods, name, stride);
        }
        e.methods.push_back(brute_method(oracle, stride));
        return e;
    };

    {
        auto e = linear_entry("motzkin", "Motzkin paths (f = g = h = z)", {},
                              [](const FamilyParams &) { return paths::motzkin(); });
        e.methods.push_back({"formula", [](const MethodRequest &r) { return by_index(r.n + 1, motzkin_coeff); }});
        cat.push_back(std::move(e));
    }
    {
        auto e = linear_entry("dyck", "Dyck paths, Catalan numbers on even lengths (h = 0)", {},
                              [](const FamilyParams &) { return paths::dyck(); });
        e.methods.push_back({"formula", [](const MethodRequest &r) {
                                 return by_index(r.n + 1, [](long long i) {
                                     return i % 2 ? Integer(0) : catalan(static_cast<std::size_t>(i / 2));
                                 });
                             }});
        cat.push_back(std::move(e));
    }
    {
        auto e = linear_entry("riordan", "Riordan paths: Motzkin paths without level steps on the axis", {},
                              [](const FamilyParams &) { return paths::riordan(); });
        e.methods.push_back({"radical", [](const MethodRequest &r) {
                                 return first_terms(riordan_radical(r.order()), r.n + 1);
                             }});
        e.methods.push_back({"formula", [](const MethodRequest &r) {
                                 const auto m = by_index(r.n + 1, motzkin_coeff);
                                 Terms t{1};
                                 for (std::size_t i = 1; i <= r.n; ++i) {
                                     t.push_back(riordan_recurrence(i, m, t));
                                 }
                                 return t;
                             }});
        cat.push_back(std::move(e));
    }
    {
        auto e = linear_entry("kcolored", "k-colored Motzkin paths (h = kz)", {"k"},
                              [](const FamilyParams &p) { return paths::kcolored(as_count(p.k)); });
        e.methods.push_back({"formula", [](const MethodRequest &r) {
                                 const auto k = r.params.k.value_or(1);
                                 return by_index(r.n + 1, [k](long long s) { return kcolored_coeff(s, k); });
                             }});
        cat.push_back(std::move(e));
    }
    cat.push_back(linear_entry("gen_motzkin", "generalized Motzkin paths with level step (k,0) (h = z^k)", {"k"},
                               [](const FamilyParams &p) { return paths::gen_motzkin(as_count(p.k)); }));
    {
        auto e = linear_entry("schroeder", "large Schroeder numbers, term n = paths of length 2n with h = z^2", {},
                              [](const FamilyParams &) { return paths::gen_motzkin(2); }, 2);
        e.methods.push_back({"formula", [](const MethodRequest &r) { return by_index(r.n + 1, schroeder_number); }});
        cat.push_back(std::move(e));
    }
    {
        auto e = linear_entry("fk", "level steps (j,0) for every j >= 1 in k colors (h = kz/(1-z))", {"k"},
                              [](const FamilyParams &p) { return paths::fk(as_count(p.k)); });
        e.methods.push_back({"formula", [](const MethodRequest &r) {
                                 const auto k = r.params.k.value_or(1);
                                 return by_index(r.n + 1, [k](long long s) { return fk_coeff(s, k); });
                             }});
        cat.push_back(std::move(e));
    }
    {
        FamilyCatalogEntry e{"grand_motzkin", "Grand Motzkin paths (bilinear, every weight z)", {}, 1, {},
                             [](const FamilyParams &) { return paths::grand_motzkin(); }};
        e.methods = automaton_methods("grand_motzkin", 1);
        e.methods.push_back({"radical", [](const MethodRequest &r) {
                                 const auto z = ParallelTransition::monomial(1, 1, r.order());
                                 return first_terms(bilinear_radical(z, z, z, r.order()), r.n + 1);
                             }});
        e.methods.push_back({"sum", [](const MethodRequest &r) {
                                 const auto z = ParallelTransition::monomial(1, 1, r.order());
                                 return first_terms(bilinear_sum(z, z, r.order()), r.n + 1);
                             }});
        e.methods.push_back({"formula", [](const MethodRequest &r) { return by_index(r.n + 1, grand_motzkin_coeff); }});
        e.methods.push_back(brute_method(e.oracle, 1));
        cat.push_back(std::move(e));
    }
    {
        auto oracle = [](const FamilyParams &p) { return paths::trinomial(as_count(p.a), as_count(p.b), as_count(p.c)); };
        FamilyCatalogEntry e{"trinomial", "generalized central trinomial coefficients [x^n](a + bx + cx^2)^n",
                             {"a", "b", "c"}, 1, {}, oracle};
        e.methods = automaton_methods("trinomial", 1);
        e.methods.push_back({"radical", [](const MethodRequest &r) {
                                 const auto u = bilinear_family("trinomial", r.params, r.order()).upper.uniform();
                                 return first_terms(bilinear_radical(u.forward, u.backward, u.loop, r.order()), r.n + 1);
                             }});
        e.methods.push_back({"sum",
                             [](const MethodRequest &r) {
                                 const auto u = bilinear_family("trinomial", r.params, r.order()).upper.uniform();
                                 return first_terms(bilinear_sum(u.forward, u.loop, r.order()), r.n + 1);
                             },
                             [](const FamilyParams &p) { return p.a.value_or(1) == p.c.value_or(1); }});
        e.methods.push_back({"formula", [](const MethodRequest &r) {
                                 const auto a = r.params.a.value_or(1), b = r.params.b.value_or(1),
                                            c = r.params.c.value_or(1);
                                 return by_index(r.n + 1, [=](long long i) { return trinomial_coeff(a, b, c, i); });
                             }});
        e.methods.push_back(brute_method(oracle, 1));
        cat.push_back(std::move(e));
    }
    return cat;
}

} // namespace detail

// The registry is built once and never modified.
inline const std::vector<FamilyCatalogEntry> &catalog()
{
    static const std::vector<FamilyCatalogEntry> entries = detail::build_catalog();
    return entries;
}

inline const FamilyCatalogEntry &find_family(std::string_view name)
{
    for (const auto &e : catalog()) {
        if (e.name == name) {
            return e;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

// Rejects parameters the family does not take and validates the ones it does
// by building its automaton once.
inline void check_params(const FamilyCatalogEntry &e, const FamilyParams &p)
{
    auto takes = [&](const char *name) { return std::find(e.params.begin(), e.params.end(), name) != e.params.end(); };
    const std::pair<const char *, const std::optional<long long> *> given[] = {
        {"k", &p.k}, {"a", &p.a}, {"b", &p.b}, {"c", &p.c}};
    for (const auto &[name, value] : given) {
        if (value->has_value() && !takes(name)) {
            throw std::invalid_argument("family '" + e.name + "' does not take --" + name);
        }
    }
    family_spec(e.name, p, 1);
}

inline Terms compute_terms(const FamilyCatalogEntry &e, std::string_view method, const MethodRequest &r)
{
    const auto *m = e.find_method(method);
    if (m == nullptr || !m->applicable(r.params)) {
        throw std::invalid_argument("method '" + std::string(method) + "' is not available for family '" + e.name + "'");
    }
    return m->compute(r);
}

} // namespace gfkit

#endif
