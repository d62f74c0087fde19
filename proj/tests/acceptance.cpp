// Acceptance run: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gfkit/catalog.hpp>
#include <gfkit/closed_forms.hpp>
#include <gfkit/gf_engine.hpp>
#include <gfkit/identities.hpp>
#include <gfkit/oracle.hpp>
#include <gfkit/report.hpp>

#include "cli.hpp"
#include "support/oracles.hpp"

using namespace gfkit;

namespace
{

// Collects the first failure message of a criterion.
struct Check {
    std::string failure;

    bool operator()(bool ok, const std::string &what)
    {
        if (!ok && failure.empty()) {
            failure = what;
        }
        return ok;
    }
};

std::string join(const Terms &t)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i) {
        os << (i ? "," : "") << t[i];
    }
    return os.str();
}

bool expect_terms(Check &check, const Terms &got, const Terms &want, const std::string &what)
{
    return check(got == want, what + ": got " + join(got) + ", want " + join(want));
}

struct Criterion {
    std::string id;
    std::string title;
    double time_limit_s; // <= 0: no limit
    std::function<void(Check &)> body;
};

Terms first(const TruncatedSeries &f, std::size_t n, std::size_t stride = 1)
{
    Terms t;
    for (std::size_t i = 0; i < n; ++i) {
        t.push_back(to_integer(f[i * stride]));
    }
    return t;
}

void fibonacci(Check &check)
{
    std::ostringstream out, err;
    const int code = cli::run({"automaton", std::string(GFKIT_SAMPLES_DIR) + "/automata/fibonacci.aut", "--n", "6"}, out, err);
    check(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
    check(out.str() == "1,1,2,3,5,8,13\n", "output '" + out.str() + "'");
    const auto expect = oracles::rational_series({1}, {1, -1, -1}, 7);
    check(out.str() == join(Terms(expect.begin(), expect.end())) + "\n", "does not match 1/(1-z-z^2)");
}

void m2_example(Check &check)
{
    const std::size_t order = 8;
    const auto root = sqrt_unit(TruncatedSeries::from_integers({1, -4}, order));
    const auto g = Coefficient(1, 2) * (TruncatedSeries::constant(1, order) - root);
    WeightedAutomaton a(3, 0, {0});
    a.add_edge(0, 1, ParallelTransition(TruncatedSeries::from_integers({0, 2, 1}, order)));
    a.add_edge(1, 2, ParallelTransition(g));
    a.add_edge(2, 0, ParallelTransition::monomial(2, 1, order));
    expect_terms(check, integer_terms(solve_system(a, order).root), {1, 0, 0, 4, 6, 10, 40, 114}, "root");
}

void schroeder(Check &check)
{
    expect_terms(check, first(gen_motzkin_gf(2, 13), 7, 2), {1, 2, 6, 22, 90, 394, 1806}, "even coefficients");
}

void four_colored(Check &check)
{
    const auto z = ParallelTransition::monomial(1, 1, 10);
    expect_terms(check, integer_terms(uniform_radical(z, z, ParallelTransition::monomial(4, 1, 10), 8)),
                 {1, 4, 17, 76, 354, 1704, 8421, 42508}, "prefix");
}

void two_three_colored(Check &check)
{
    const auto cat = oracles::catalan(41);
    FamilyParams two;
    two.k = 2;
    const auto m2 = integer_terms(linear_cf(linear_family("kcolored", two, 41), 41));
    for (std::size_t n = 0; n <= 40; ++n) {
        if (!check(m2[n] == Integer(cat[n + 1]), "m(" + std::to_string(n) + ",2) != C(" + std::to_string(n + 1) + ")")) {
            break;
        }
    }
    const auto z = ParallelTransition::monomial(1, 1, 11);
    const auto m3 = uniform_radical(z, z, ParallelTransition::monomial(3, 1, 11), 9);
    // The printed expansion z + 3z^2 + ... is z M_3(z): one position later.
    const auto shifted = shift(m3, 1);
    Terms t;
    for (std::size_t i = 1; i <= 8; ++i) {
        t.push_back(to_integer(shifted[i]));
    }
    expect_terms(check, t, {1, 3, 10, 36, 137, 543, 2219, 9285}, "z M_3(z)");
}

void central_trinomial(Check &check)
{
    check(trinomial_coeff(1, 1, 1, 2) == 3, "T_2 != 3");
    const auto gm = integer_terms(bilinear_gf(bilinear_family("grand_motzkin", {}, 41), 41));
    for (long long n = 0; n <= 40; ++n) {
        if (!check(trinomial_coeff(1, 1, 1, n) == gm[static_cast<std::size_t>(n)],
                   "T_" + std::to_string(n) + " != m^b_" + std::to_string(n))) {
            break;
        }
    }
}

void cross_method(Check &check)
{
    struct Case {
        std::string family;
        FamilyParams params;
    };
    std::vector<Case> cases{{"motzkin", {}}, {"dyck", {}}, {"riordan", {}}, {"grand_motzkin", {}}, {"schroeder", {}}};
    for (long long k = 1; k <= 4; ++k) {
        FamilyParams p;
        p.k = k;
        cases.push_back({"kcolored", p});
        if (k <= 3) {
            cases.push_back({"gen_motzkin", p});
        }
        if (k <= 2) {
            cases.push_back({"fk", p});
        }
    }
    for (auto [a, b, c] : {std::tuple{1, 1, 1}, std::tuple{1, 2, 3}, std::tuple{2, 0, 1}}) {
        FamilyParams p;
        p.a = a;
        p.b = b;
        p.c = c;
        cases.push_back({"trinomial", p});
    }
    for (const auto &cs : cases) {
        const auto &entry = find_family(cs.family);
        const auto report = run_verify(entry, cs.params, 32 / entry.index_stride, {}, 14);
        std::string label = cs.family;
        for (const auto &[k, v] : report.params) {
            label += " " + k + "=" + std::to_string(v);
        }
        check(report.methods.size() >= 4, label + ": only " + std::to_string(report.methods.size()) + " methods");
        for (const auto &p : report.agreement) {
            if (!p.agree) {
                check(false, label + ": " + p.left + " vs " + p.right + " differ at index "
                                 + std::to_string(p.first_diff->index));
            }
        }
        for (const auto &m : report.methods) {
            const auto want = m.name == "brute" ? 14 / entry.index_stride + 1 : 32 / entry.index_stride + 1;
            check(m.terms.size() == want, label + ": " + m.name + " returned " + std::to_string(m.terms.size()) + " terms");
        }
    }
}

void identities(Check &check)
{
    const auto results = check_identities(identity_data(40), 40);
    for (const auto &r : results) {
        check(r.passed, r.name + " fails at n=" + std::to_string(r.index.value_or(0)) + ": " + r.detail);
    }
    check(results.size() == 11, "expected 11 identities, ran " + std::to_string(results.size()));
}

void depth_stability(Check &check)
{
    const std::size_t order = 64;
    const auto spec = linear_family("motzkin", {}, order);
    const auto bound = cf_depth_bound(order);
    const auto reference = linear_cf(spec, order);
    // d runs over bound .. bound + 32.
    for (std::size_t d = bound; d <= bound + 32; ++d) {
        const auto at_d = linear_cf(spec, order, d);
        if (!check(at_d == linear_cf(spec, order, d + 5), "depth " + std::to_string(d) + " vs " + std::to_string(d + 5))
            || !check(at_d == reference, "depth " + std::to_string(d) + " vs default depth")) {
            break;
        }
    }
    expect_terms(check, first(reference, 11), {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188}, "Motzkin prefix");
}

WeightedAutomaton random_automaton(std::mt19937_64 &rng, std::size_t order)
{
    std::uniform_int_distribution<std::size_t> states(1, 6);
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<int> coef(0, 3);
    std::uniform_int_distribution<int> degree(1, 3);
    const auto n = states(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::set<StateId> finals{pick(rng)};
    if (coin(rng) == 0) {
        finals.insert(pick(rng));
    }
    WeightedAutomaton a(n, pick(rng), finals);
    for (StateId p = 0; p < n; ++p) {
        for (StateId q = 0; q < n; ++q) {
            if (coin(rng) != 0) {
                continue;
            }
            std::vector<Coefficient> c(order);
            const auto deg = degree(rng);
            for (int j = 1; j <= deg; ++j) {
                c[static_cast<std::size_t>(j)] = coef(rng);
            }
            c[static_cast<std::size_t>(deg)] += 1;
            a.add_edge(p, q, ParallelTransition(TruncatedSeries(std::move(c), order)));
        }
    }
    return a;
}

void solver_residual(Check &check)
{
    std::mt19937_64 rng(0x5eed);
    const std::size_t order = 24;
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_automaton(rng, order);
        const auto sol = solve_system(a, order);
        for (const auto &r : system_residual(a, sol)) {
            check(r.order() == order && r.is_zero(), "nonzero residual in instance " + std::to_string(trial));
        }
        const auto dp = dp_count(a, 12);
        Terms root;
        for (std::size_t i = 0; i <= 12; ++i) {
            root.push_back(to_integer(sol.root[i]));
        }
        expect_terms(check, dp, root, "dp vs system, instance " + std::to_string(trial));
    }
}

TruncatedSeries random_series(std::mt19937_64 &rng, std::size_t order)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Coefficient> c(order);
    for (auto &x : c) {
        x = Coefficient(num(rng), den(rng));
    }
    return TruncatedSeries(std::move(c), order);
}

void ring_laws(Check &check)
{
    std::mt19937_64 rng(0xc0ffee);
    std::uniform_int_distribution<std::size_t> ord(1, 24);
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = ord(rng);
        const auto a = random_series(rng, n), b = random_series(rng, n), c = random_series(rng, n);
        const auto tag = " (triple " + std::to_string(trial) + ")";
        check(a + b == b + a, "additive commutativity" + tag);
        check((a + b) + c == a + (b + c), "additive associativity" + tag);
        check(a + TruncatedSeries(n) == a && a + (-a) == TruncatedSeries(n), "additive identity/inverse" + tag);
        check(a * b == b * a, "multiplicative commutativity" + tag);
        check((a * b) * c == a * (b * c), "multiplicative associativity" + tag);
        check(a * TruncatedSeries::constant(1, n) == a, "multiplicative identity" + tag);
        check(a * (b + c) == a * b + a * c, "distributivity" + tag);
    }
    const std::size_t order = 64;
    const auto one = TruncatedSeries::constant(1, order);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_series(rng, order);
        if (f[0].is_zero()) {
            f += one;
        }
        check(f * recip(f) == one, "recip round trip " + std::to_string(trial));
        std::vector<Coefficient> c(f.coefficients().begin(), f.coefficients().end());
        c[0] = 1;
        const TruncatedSeries u(std::move(c), order);
        const auto r = sqrt_unit(u);
        check(r * r == u && r[0] == 1, "sqrt round trip " + std::to_string(trial));
    }
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "Fibonacci automaton file gives 1,1,2,3,5,8,13", 0.1, fibonacci},
        {"AC2", "three-state cycle with radical weight gives 1,0,0,4,6,10,40,114", 0.1, m2_example},
        {"AC3", "Schroeder numbers from the even coefficients of the h = z^2 radical", 0.1, schroeder},
        {"AC4", "4-colored Motzkin prefix", 0.1, four_colored},
        {"AC5", "m(n,2) = C(n+1) for n <= 40; 3-colored prefix after one shift", 0, two_three_colored},
        {"AC6", "T_2 = 3 and T_n = m^b_n for n <= 40", 0, central_trinomial},
        {"AC7", "cross-method agreement n <= 32, brute n <= 14", 60, cross_method},
        {"AC8", "identity suite at n <= 40", 0, identities},
        {"AC9", "continued-fraction depth stability at N = 64", 0, depth_stability},
        {"AC10", "zero residual and dp agreement on 100 random automata", 0, solver_residual},
        {"AC11", "series ring laws (500 triples), recip/sqrt round trips at order 64", 0, ring_laws},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(check);
        } catch (const std::exception &e) {
            check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            check(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
        }
        const bool ok = check.failure.empty();
        failed += ok ? 0 : 1;
        std::printf("%s %-4s %-72s %9.3f s%s%s\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), secs,
                    ok ? "" : "  -- ", ok ? "" : check.failure.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
