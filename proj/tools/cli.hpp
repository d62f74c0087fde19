#ifndef GFKIT_TOOLS_CLI_HPP
#define GFKIT_TOOLS_CLI_HPP

#include <cstddef>
#include <exception>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gfkit/automaton_format.hpp>
#include <gfkit/catalog.hpp>
#include <gfkit/identities.hpp>
#include <gfkit/oracle.hpp>
#include <gfkit/report.hpp>

namespace gfkit::cli
{

enum ExitCode : int {
    ok = 0,
    disagreement = 1,
    usage_error = 2,
    convergence_rejected = 3,
};

inline std::string render_terms(const Terms &terms, const std::string &format, const nlohmann::json &meta = {})
{
    std::ostringstream os;
    if (format == "bfile") {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            os << i << ' ' << terms[i] << '\n';
        }
    } else if (format == "json") {
        auto j = meta.is_object() ? meta : nlohmann::json::object();
        j["terms"] = terms_json(terms);
        os << j.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            os << (i ? "," : "") << terms[i];
        }
        os << '\n';
    }
    return os.str();
}

namespace detail
{

struct Settings {
    std::string family;
    std::string automaton;
    std::string method;
    std::string format = "csv";
    long long n = 31;
    long long identities_n = 40;
    long long k = 1, a = 1, b = 1, c = 1;
    std::size_t depth = 0;
    std::size_t order = 0;
};

struct Flags {
    CLI::Option *k = nullptr, *a = nullptr, *b = nullptr, *c = nullptr, *depth = nullptr, *order = nullptr;
};

inline Flags add_family_flags(CLI::App &cmd, Settings &s)
{
    Flags f;
    f.k = cmd.add_option("--k", s.k, "family parameter k");
    f.a = cmd.add_option("--a", s.a, "trinomial rise weight a");
    f.b = cmd.add_option("--b", s.b, "trinomial level weight b");
    f.c = cmd.add_option("--c", s.c, "trinomial fall weight c");
    f.depth = cmd.add_option("--depth", s.depth, "continued-fraction depth override")->check(CLI::PositiveNumber);
    f.order = cmd.add_option("--order", s.order, "working series order (>= n+1)")->check(CLI::PositiveNumber);
    return f;
}

inline FamilyParams params_from(const Settings &s, const Flags &f)
{
    FamilyParams p;
    if (f.k->count()) {
        p.k = s.k;
    }
    if (f.a->count()) {
        p.a = s.a;
    }
    if (f.b->count()) {
        p.b = s.b;
    }
    if (f.c->count()) {
        p.c = s.c;
    }
    return p;
}

inline MethodOptions options_from(const Settings &s, const Flags &f)
{
    MethodOptions o;
    if (f.depth->count()) {
        o.depth = s.depth;
    }
    if (f.order->count()) {
        if (s.order < static_cast<std::size_t>(s.n) + 1) {
            throw std::invalid_argument("--order must be at least n+1");
        }
        o.order = s.order;
    }
    return o;
}

inline Terms automaton_terms(const std::string &path, std::size_t n, const std::string &method)
{
    const auto a = load_automaton(path, n + 1);
    require_convergent(a);
    if (method.empty() || method == "system") {
        return integer_terms(solve_system(a, n + 1).root);
    }
    if (method == "dp") {
        return dp_count(a, n);
    }
    throw std::invalid_argument("method '" + method + "' is not available for automaton files (use system or dp)");
}

} // namespace detail

// Runs the gfkit command line. Returns the process exit code.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    using detail::Settings;
    CLI::App app{"gfkit: generating functions of counting automata and lattice-path families"};
    app.require_subcommand(1);
    Settings s;
    const std::vector<std::string> formats{"csv", "bfile", "json"};

    auto *seq = app.add_subcommand("seq", "print a(0)..a(n) for a family or an automaton file");
    seq->add_option("family", s.family, "family name");
    seq->add_option("--automaton", s.automaton, "automaton description file");
    seq->add_option("--n", s.n, "last index")->check(CLI::NonNegativeNumber);
    seq->add_option("--method", s.method, "cf, system, radical, sum, formula, dp or brute");
    seq->add_option("--format", s.format, "csv, bfile or json")->check(CLI::IsMember(formats));
    auto seq_flags = detail::add_family_flags(*seq, s);

    auto *verify = app.add_subcommand("verify", "run every applicable method and report agreement as JSON");
    verify->add_option("family", s.family, "family name")->required();
    verify->add_option("--n", s.n, "last index")->check(CLI::NonNegativeNumber);
    auto verify_flags = detail::add_family_flags(*verify, s);

    auto *identities = app.add_subcommand("identities", "check the coefficient identities up to n");
    identities->add_option("--n", s.identities_n, "bound (default 40)")->check(CLI::NonNegativeNumber);

    auto *automaton = app.add_subcommand("automaton", "solve the GF system of an automaton file");
    automaton->add_option("file", s.automaton, "automaton description file")->required();
    automaton->add_option("--n", s.n, "last index")->check(CLI::NonNegativeNumber);
    automaton->add_option("--method", s.method, "system or dp");
    automaton->add_option("--format", s.format, "csv, bfile or json")->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }
    const auto n = static_cast<std::size_t>(s.n);

    try {
        if (seq->parsed()) {
            if (!s.automaton.empty()) {
                if (!s.family.empty()) {
                    throw std::invalid_argument("give either a family or --automaton, not both");
                }
                const auto terms = detail::automaton_terms(s.automaton, n, s.method);
                out << render_terms(terms, s.format,
                                    {{"family", "automaton"}, {"file", s.automaton},
                                     {"method", s.method.empty() ? "system" : s.method}});
                return ok;
            }
            if (s.family.empty()) {
                throw std::invalid_argument("seq needs a family name or --automaton FILE");
            }
            const auto &entry = find_family(s.family);
            const auto params = detail::params_from(s, seq_flags);
            check_params(entry, params);
            const auto method = s.method.empty() ? std::string("cf") : s.method;
            const auto terms = compute_terms(entry, method, {params, n, detail::options_from(s, seq_flags)});
            nlohmann::json meta{{"family", entry.name}, {"method", method}};
            meta["params"] = params_map(entry, params);
            out << render_terms(terms, s.format, meta);
            return ok;
        }
        if (verify->parsed()) {
            const auto &entry = find_family(s.family);
            const auto report = run_verify(entry, detail::params_from(s, verify_flags), n,
                                           detail::options_from(s, verify_flags));
            out << to_json(report).dump(2) << '\n';
            if (!report.all_agree()) {
                for (const auto &p : report.agreement) {
                    if (!p.agree) {
                        err << "disagreement " << p.left << " vs " << p.right << " at index " << p.first_diff->index
                            << ": " << p.first_diff->left << " != " << p.first_diff->right << '\n';
                    }
                }
                return disagreement;
            }
            return ok;
        }
        if (identities->parsed()) {
            const auto bound = static_cast<std::size_t>(s.identities_n);
            const auto results = check_identities(identity_data(bound), bound);
            bool all = true;
            for (const auto &r : results) {
                if (r.passed) {
                    out << "PASS " << r.name << '\n';
                } else {
                    all = false;
                    out << "FAIL " << r.name << " at n=" << *r.index << ": " << r.detail << '\n';
                }
            }
            return all ? ok : disagreement;
        }
        if (automaton->parsed()) {
            const auto terms = detail::automaton_terms(s.automaton, n, s.method);
            out << render_terms(terms, s.format,
                                {{"family", "automaton"}, {"file", s.automaton},
                                 {"method", s.method.empty() ? "system" : s.method}});
            return ok;
        }
    } catch (const convergence_error &e) {
        err << "gfkit: automaton is not convergent: " << e.what() << '\n';
        return convergence_rejected;
    } catch (const parse_error &e) {
        err << "gfkit: parse error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception &e) {
        err << "gfkit: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv{"gfkit"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace gfkit::cli

#endif
