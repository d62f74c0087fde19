#include <gtest/gtest.h>

#include <gfkit/closed_forms.hpp>
#include <gfkit/combinatorics.hpp>
#include <gfkit/families.hpp>
#include <gfkit/gf_engine.hpp>

#include <tuple>

#include "support/oracles.hpp"

using namespace gfkit;
using Terms = std::vector<Integer>;

namespace
{

ParallelTransition pt(std::initializer_list<long long> c, std::size_t order)
{
    return ParallelTransition(TruncatedSeries::from_integers(c, order));
}

ParallelTransition z(std::size_t order, long long c = 1)
{
    return ParallelTransition::monomial(c, 1, order);
}

Terms as_terms(const std::vector<oracles::Int> &v)
{
    return Terms(v.begin(), v.end());
}

Terms prefix(const TruncatedSeries &f, std::size_t n)
{
    auto t = integer_terms(f);
    t.resize(n);
    return t;
}

} // namespace

TEST(SolveSystem, FibonacciTwoStates)
{
    WeightedAutomaton a(2, 0, {0});
    a.add_edge(0, 0, z(8));
    a.add_edge(0, 1, z(8));
    a.add_edge(1, 0, z(8));
    const auto sol = solve_system(a, 8);
    EXPECT_EQ(integer_terms(sol.root), as_terms(oracles::rational_series({1}, {1, -1, -1}, 8)));
    EXPECT_EQ(integer_terms(sol.root), (Terms{1, 1, 2, 3, 5, 8, 13, 21}));
}

TEST(SolveSystem, ThreeStateCycleWithRadicalWeight)
{
    const std::size_t order = 8;
    // (1 - sqrt(1-4z))/2 = z C(z), with C from the convolution recurrence.
    const auto cat = oracles::catalan(order);
    std::vector<Coefficient> zc(order);
    for (std::size_t i = 1; i < order; ++i) {
        zc[i] = Coefficient(cat[i - 1]);
    }
    WeightedAutomaton a(3, 0, {0});
    a.add_edge(0, 1, pt({0, 2, 1}, order));
    a.add_edge(1, 2, ParallelTransition(TruncatedSeries(zc, order)));
    a.add_edge(2, 0, z(order, 2));
    const auto sol = solve_system(a, order);
    EXPECT_EQ(integer_terms(sol.root), (Terms{1, 0, 0, 4, 6, 10, 40, 114}));
    for (const auto &r : system_residual(a, sol)) {
        EXPECT_TRUE(r.is_zero());
    }
}

TEST(SolveSystem, LoneFinalState)
{
    WeightedAutomaton a(1, 0, {0});
    EXPECT_EQ(integer_terms(solve_system(a, 5).root), (Terms{1, 0, 0, 0, 0}));
}

TEST(SolveSystem, OrderLimitedByWeights)
{
    WeightedAutomaton a(1, 0, {0});
    a.add_edge(0, 0, z(4));
    EXPECT_EQ(solve_system(a, 10).root.order(), 4u);
}

TEST(SolveSystem, RejectsConstantTerm)
{
    WeightedAutomaton a(1, 0, {0});
    a.add_edge(0, 0, pt({1}, 4));
    EXPECT_THROW(solve_system(a, 4), convergence_error);
}

TEST(LinearCf, Examples)
{
    EXPECT_EQ(integer_terms(linear_cf(linear_family("motzkin", {}, 8), 8)), (Terms{1, 1, 2, 4, 9, 21, 51, 127}));
    EXPECT_EQ(integer_terms(linear_cf(linear_family("dyck", {}, 7), 7)), (Terms{1, 0, 1, 0, 2, 0, 5}));
    EXPECT_EQ(integer_terms(linear_cf(linear_family("riordan", {}, 8), 8)), (Terms{1, 0, 1, 1, 3, 6, 15, 36}));
}

TEST(LinearCf, MatchesWalkEnumeration)
{
    for (std::size_t n = 0; n <= 10; ++n) {
        const auto m = linear_cf(linear_family("motzkin", {}, n + 1), n + 1);
        EXPECT_EQ(to_integer(m[n]), oracles::enumerate_walks(oracles::motzkin_steps(), n, true));
    }
}

TEST(LinearCf, AgreesWithTruncationsAtDepth)
{
    const std::size_t order = 16;
    const auto spec = linear_family("motzkin", {}, order);
    const auto cf = linear_cf(spec, order);
    const auto d = cf_depth_bound(order);
    for (std::size_t s = d; s <= d + 3; ++s) {
        EXPECT_EQ(solve_system(linear_truncation(spec, s), order).root, cf) << "s=" << s;
    }
}

TEST(LinearCf, TruncationConsistency)
{
    const std::size_t order = 20;
    const auto spec = linear_family("riordan", {}, order);
    const auto cf = linear_cf(spec, order);
    for (std::size_t s = 2; s <= 9; ++s) {
        const auto root = solve_system(linear_truncation(spec, s), order).root;
        EXPECT_EQ(root.truncated(2 * (s - 1)), cf.truncated(2 * (s - 1))) << "s=" << s;
    }
}

TEST(LinearCf, DepthStability)
{
    const std::size_t order = 30;
    const auto spec = linear_family("motzkin", {}, order);
    for (std::size_t d = cf_depth_bound(order); d < cf_depth_bound(order) + 10; ++d) {
        EXPECT_EQ(linear_cf(spec, order, d), linear_cf(spec, order, d + 5));
    }
}

TEST(CfTail, Examples)
{
    const std::size_t order = 12;
    const auto mot = linear_family("motzkin", {}, order);
    const auto m = linear_cf(mot, order);
    EXPECT_EQ(cf_tail(mot, 0, order), m);
    EXPECT_EQ(cf_tail(mot, 5, order), m);
    EXPECT_EQ(cf_tail(linear_family("riordan", {}, order), 1, order), m);
}

TEST(CfDepthBound, Examples)
{
    EXPECT_EQ(cf_depth_bound(1), 2u);
    EXPECT_EQ(cf_depth_bound(8), 5u);
    EXPECT_EQ(cf_depth_bound(9), 6u);
    EXPECT_THROW(cf_depth_bound(0), std::invalid_argument);
}

TEST(BilinearGf, Examples)
{
    const auto gm = bilinear_gf(bilinear_family("grand_motzkin", {}, 7), 7);
    EXPECT_EQ(integer_terms(gm), (Terms{1, 1, 3, 7, 19, 51, 141}));
    FamilyParams ones;
    ones.a = ones.b = ones.c = 1;
    EXPECT_EQ(bilinear_gf(bilinear_family("trinomial", ones, 7), 7), gm);
    EXPECT_EQ(to_integer(gm[2]), 3);
}

TEST(BilinearGf, TrinomialMatchesPolynomialPower)
{
    FamilyParams p;
    p.a = 1;
    p.b = 2;
    p.c = 3;
    const auto t = bilinear_gf(bilinear_family("trinomial", p, 12), 12);
    for (std::size_t n = 0; n < 12; ++n) {
        EXPECT_EQ(to_integer(t[n]), oracles::trinomial_power(1, 2, 3, n)[n]) << "n=" << n;
    }
}

TEST(UniformRadical, Examples)
{
    const std::size_t order = 12;
    const auto m = uniform_radical(z(order + 2), z(order + 2), z(order + 2), order);
    // z^2 M^2 - (1 - z) M + 1 = 0
    const auto one = TruncatedSeries::constant(1, order);
    const auto zz = TruncatedSeries::monomial(1, 1, order);
    EXPECT_TRUE((zz * zz * m * m - (one - zz) * m + one).is_zero());

    const auto two = uniform_radical(z(10), z(10), z(10, 2), 8);
    EXPECT_EQ(integer_terms(two), (Terms{1, 2, 5, 14, 42, 132, 429, 1430}));

    const auto s = uniform_radical(z(11), z(11), ParallelTransition::monomial(1, 2, 11), 9);
    EXPECT_EQ(integer_terms(s), (Terms{1, 0, 2, 0, 6, 0, 22, 0, 90}));
}

TEST(UniformRadical, DegenerateAndErrors)
{
    const auto zero = ParallelTransition::zero(8);
    EXPECT_EQ(uniform_radical(zero, z(8), z(8), 6), recip(TruncatedSeries::from_integers({1, -1}, 6)));
    EXPECT_THROW(uniform_radical(pt({1, 1}, 8), z(8), z(8), 6), std::invalid_argument);
}

TEST(UniformSum, Examples)
{
    const std::size_t order = 14;
    const auto m = uniform_sum(z(order), z(order), z(order), order);
    for (long long s = 0; s < static_cast<long long>(order); ++s) {
        Integer sum = 0;
        for (long long n = 0; 2 * n <= s; ++n) {
            sum += Integer(oracles::catalan(static_cast<std::size_t>(n)).back()) * binomial(s, 2 * n);
        }
        EXPECT_EQ(to_integer(m[static_cast<std::size_t>(s)]), sum);
    }
    FamilyParams k3;
    k3.k = 3;
    EXPECT_EQ(uniform_sum(z(order), z(order), z(order, 3), order), linear_cf(linear_family("kcolored", k3, order), order));
    const auto catalan_even = uniform_sum(z(order), z(order), ParallelTransition::zero(order), order);
    EXPECT_EQ(catalan_even, linear_cf(linear_family("dyck", {}, order), order));
}

TEST(MethodAgreement, UniformLinearFamilies)
{
    const std::size_t order = 40;
    for (long long k = 1; k <= 4; ++k) {
        const auto f = z(order + 2), g = z(order + 2);
        for (const auto &h : {z(order + 2, k), ParallelTransition::monomial(1, static_cast<std::size_t>(k), order + 2),
                              every_length_loop(k, order + 2)}) {
            const LinearSpec spec(LevelWeights{f, g, h});
            const auto cf = linear_cf(spec, order);
            EXPECT_EQ(uniform_radical(f, g, h, order), cf) << "k=" << k;
            EXPECT_EQ(uniform_sum(f, g, h, order), cf) << "k=" << k;
        }
    }
}

TEST(MethodAgreement, RadicalNeedsInputsAtRaisedOrder)
{
    // fg has valuation 4 here, so the inputs must be known to order + 4.
    const std::size_t order = 10;
    const auto f = ParallelTransition::monomial(1, 2, order + 4);
    const auto h = z(order + 4);
    const LinearSpec spec(LevelWeights{f, f, h});
    EXPECT_EQ(uniform_radical(f, f, h, order), linear_cf(spec, order));
    EXPECT_THROW(uniform_radical(f.truncated(order), f.truncated(order), h.truncated(order), order), std::invalid_argument);
}

TEST(BilinearRadical, Examples)
{
    const std::size_t order = 16;
    const auto gm = bilinear_radical(z(order), z(order), z(order), order);
    EXPECT_EQ(prefix(gm, 7), (Terms{1, 1, 3, 7, 19, 51, 141}));
    EXPECT_EQ(gm, bilinear_gf(bilinear_family("grand_motzkin", {}, order), order));
    // 1/(1 - h - 2fg B)
    const auto b = uniform_radical(z(order + 2), z(order + 2), z(order + 2), order);
    const auto zz = TruncatedSeries::monomial(1, 1, order);
    EXPECT_EQ(gm, recip(TruncatedSeries::constant(1, order) - zz - Coefficient(2) * zz * zz * b));

    const auto zero = ParallelTransition::zero(order);
    EXPECT_EQ(bilinear_radical(zero, zero, z(order, 3), order),
              recip(TruncatedSeries::from_integers({1, -3}, order)));
}

TEST(BilinearRadical, TrinomialWeights)
{
    const std::size_t order = 14;
    for (auto [a, b, c] : {std::tuple{1, 1, 1}, std::tuple{1, 2, 3}, std::tuple{2, 0, 1}, std::tuple{3, 1, 2}}) {
        const auto r = bilinear_radical(z(order, a), z(order, c), z(order, b), order);
        for (std::size_t n = 0; n < order; ++n) {
            EXPECT_EQ(to_integer(r[n]), oracles::trinomial_power(a, b, c, n)[n]) << a << b << c << " n=" << n;
        }
    }
}

TEST(BilinearSum, Examples)
{
    const std::size_t order = 16;
    EXPECT_EQ(bilinear_sum(z(order), z(order), order), bilinear_radical(z(order), z(order), z(order), order));
    const auto zero = ParallelTransition::zero(order);
    EXPECT_EQ(bilinear_sum(zero, z(order, 2), order), recip(TruncatedSeries::from_integers({1, -2}, order)));
    const auto central = bilinear_sum(z(order), zero, 7);
    EXPECT_EQ(integer_terms(central), (Terms{1, 0, 2, 0, 6, 0, 20}));
    const std::vector<oracles::Step> grand_dyck{{1, 1, 1}, {1, -1, 1}};
    for (std::size_t n = 0; n < 7; ++n) {
        EXPECT_EQ(to_integer(central[n]), oracles::enumerate_walks(grand_dyck, n, false));
    }
}

TEST(BilinearSum, GrandMotzkinCoefficientFormula)
{
    const std::size_t order = 24;
    const auto s = bilinear_sum(z(order), z(order), order);
    for (long long i = 0; i < static_cast<long long>(order); ++i) {
        EXPECT_EQ(to_integer(s[static_cast<std::size_t>(i)]), grand_motzkin_coeff(i));
    }
}

TEST(Identities, CatalanPowers)
{
    const std::size_t order = 20;
    const auto cat = oracles::catalan(order - 1);
    std::vector<Coefficient> c(cat.begin(), cat.end());
    const TruncatedSeries base(std::move(c), order);
    auto power = base;
    for (long long p = 1; p <= 6; ++p) {
        for (long long k = 0; k < static_cast<long long>(order); ++k) {
            EXPECT_EQ(to_integer(power[static_cast<std::size_t>(k)]), catalan_power_coeff(p, k));
        }
        power *= base;
    }
}
