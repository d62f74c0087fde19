#ifndef GFKIT_IDENTITIES_HPP
#define GFKIT_IDENTITIES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "closed_forms.hpp"
#include "combinatorics.hpp"
#include "families.hpp"
#include "gf_engine.hpp"

namespace gfkit
{

// Sequences the identity suite checks against each other. They are produced
// by the series routes (continued fractions and radicals); the suite compares
// them with the direct coefficient formulas. Tests corrupt entries here to
// exercise the failure path.
struct IdentityData {
    Terms motzkin;       // m_0..m_{n+1}
    Terms riordan;       // r_0..r_{n+1}
    Terms catalan;       // C_0..C_{n+1}
    Terms schroeder;     // [z^(2i)] M^(2)(z), i = 0..n
    Terms grand_motzkin; // m^b_0..m^b_n
    std::map<long long, Terms> kcolored; // k -> m_{0,k}..m_{n,k}, k = 1..4
};

inline IdentityData identity_data(std::size_t n)
{
    const auto order = n + 2;
    IdentityData d;
    d.motzkin = integer_terms(linear_cf(linear_family("motzkin", {}, order), order));
    d.riordan = integer_terms(linear_cf(linear_family("riordan", {}, order), order));
    d.catalan = catalan_numbers(order - 1);
    const auto schroeder_gf = gen_motzkin_gf(2, 2 * n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        d.schroeder.push_back(to_integer(schroeder_gf[2 * i]));
    }
    d.grand_motzkin = integer_terms(bilinear_gf(bilinear_family("grand_motzkin", {}, n + 1), n + 1));
    for (long long k = 1; k <= 4; ++k) {
        FamilyParams p;
        p.k = k;
        d.kcolored[k] = integer_terms(linear_cf(linear_family("kcolored", p, n + 1), n + 1));
    }
    return d;
}

struct IdentityResult {
    std::string name;
    bool passed = true;
    std::optional<std::size_t> index;
    std::string detail;
};

namespace detail
{

class IdentityCheck
{
public:
    explicit IdentityCheck(std::string name) { m_result.name = std::move(name); }

    // Records the first failing index only.
    bool expect(bool ok, std::size_t index, const std::string &detail)
    {
        if (!ok && m_result.passed) {
            m_result.passed = false;
            m_result.index = index;
            m_result.detail = detail;
        }
        return ok;
    }

    bool failed() const { return !m_result.passed; }
    IdentityResult result() const { return m_result; }

private:
    IdentityResult m_result;
};

inline std::string neq(const Integer &a, const Integer &b)
{
    return a.str() + " != " + b.str();
}

} // namespace detail

// Checks every identity for indices 0..n (1..n where the identity starts at 1).
inline std::vector<IdentityResult> check_identities(const IdentityData &d, std::size_t n)
{
    using detail::IdentityCheck;
    using detail::neq;
    std::vector<IdentityResult> out;

    {
        IdentityCheck c("r(n+1) + r(n) = m(n)");
        for (std::size_t i = 0; i <= n && !c.failed(); ++i) {
            c.expect(d.riordan.at(i + 1) + d.riordan.at(i) == d.motzkin.at(i), i,
                     neq(d.riordan.at(i + 1) + d.riordan.at(i), d.motzkin.at(i)));
        }
        out.push_back(c.result());
    }
    {
        // [z^i] (1+z)R = r_i + r_{i-1};  [z^i] (1 + zM) = [i = 0] + m_{i-1}
        IdentityCheck c("(1+z)R(z) = 1 + zM(z)");
        for (std::size_t i = 0; i <= n + 1 && !c.failed(); ++i) {
            const Integer lhs = d.riordan.at(i) + (i ? d.riordan.at(i - 1) : Integer(0));
            const Integer rhs = (i == 0 ? Integer(1) : d.motzkin.at(i - 1));
            c.expect(lhs == rhs, i, neq(lhs, rhs));
        }
        out.push_back(c.result());
    }
    {
        IdentityCheck c("R = 1 + z^2 M R (r(n) = sum m(j) r(n-j-2))");
        for (std::size_t i = 2; i <= n && !c.failed(); ++i) {
            const auto conv = riordan_recurrence(i, d.motzkin, d.riordan);
            c.expect(conv == d.riordan.at(i), i, neq(conv, d.riordan.at(i)));
        }
        out.push_back(c.result());
    }
    {
        IdentityCheck c("m(s) = sum C(n) binom(s, 2n)");
        for (std::size_t s = 0; s <= n && !c.failed(); ++s) {
            Integer sum = 0;
            for (std::size_t k = 0; 2 * k <= s; ++k) {
                sum += d.catalan.at(k) * binomial(static_cast<long long>(s), static_cast<long long>(2 * k));
            }
            c.expect(sum == d.motzkin.at(s), s, neq(sum, d.motzkin.at(s)));
        }
        out.push_back(c.result());
    }
    {
        IdentityCheck c("z^2 M^2 - (1-z) M + 1 = 0");
        for (std::size_t i = 0; i <= n && !c.failed(); ++i) {
            Integer v = (i == 0 ? 1 : 0) - d.motzkin.at(i) + (i ? d.motzkin.at(i - 1) : Integer(0));
            for (std::size_t j = 0; i >= 2 && j <= i - 2; ++j) {
                v += d.motzkin.at(j) * d.motzkin.at(i - 2 - j);
            }
            c.expect(v == 0, i, "residual " + v.str());
        }
        out.push_back(c.result());
    }
    {
        IdentityCheck c("m(s,k) = sum C(n) binom(s, 2n) k^(s-2n), k = 1..4");
        for (const auto &[k, terms] : d.kcolored) {
            for (std::size_t s = 0; s <= n && !c.failed(); ++s) {
                const auto f = kcolored_coeff(static_cast<long long>(s), k);
                c.expect(f == terms.at(s), s, "k=" + std::to_string(k) + ": " + neq(f, terms.at(s)));
            }
        }
        out.push_back(c.result());
    }
    {
        IdentityCheck c("m(n,2) = C(n+1)");
        const auto &m2 = d.kcolored.at(2);
        for (std::size_t i = 0; i <= n && !c.failed(); ++i) {
            c.expect(m2.at(i) == d.catalan.at(i + 1), i, neq(m2.at(i), d.catalan.at(i + 1)));
        }
        out.push_back(c.result());
    }
    {
        IdentityCheck c("Schroeder m2(n) = sum N(n,k) 2^k");
        for (std::size_t i = 1; i <= n && !c.failed(); ++i) {
            Integer sum = 0;
            for (long long k = 1; k <= static_cast<long long>(i); ++k) {
                sum += narayana(static_cast<long long>(i), k) * (Integer(1) << static_cast<unsigned>(k));
            }
            c.expect(sum == d.schroeder.at(i), i, neq(sum, d.schroeder.at(i)));
        }
        out.push_back(c.result());
    }
    {
        IdentityCheck c("T(n) = m^b(n)");
        for (std::size_t s = 0; s <= n && !c.failed(); ++s) {
            const auto ls = static_cast<long long>(s);
            Integer t = 0;
            for (long long k = 0; 2 * k <= ls; ++k) {
                t += binomial(2 * k, k) * binomial(ls, 2 * k);
            }
            const auto formula = grand_motzkin_coeff(ls);
            c.expect(t == formula, s, "central trinomial vs Grand Motzkin formula: " + neq(t, formula))
                && c.expect(t == d.grand_motzkin.at(s), s, "central trinomial vs bilinear GF: "
                                                               + neq(t, d.grand_motzkin.at(s)));
        }
        out.push_back(c.result());
    }
    {
        IdentityCheck c("[u^k] C(u)^p = p/(p+2k) binom(p+2k, k), p = 1..6");
        std::vector<Coefficient> cu(d.catalan.begin(), d.catalan.begin() + static_cast<std::ptrdiff_t>(n + 1));
        const TruncatedSeries base(std::move(cu), n + 1);
        auto power = base;
        for (long long p = 1; p <= 6 && !c.failed(); ++p) {
            for (std::size_t k = 0; k <= n && !c.failed(); ++k) {
                const auto expect = catalan_power_coeff(p, static_cast<long long>(k));
                const auto got = to_integer(power[k]);
                c.expect(got == expect, k, "p=" + std::to_string(p) + ": " + neq(got, expect));
            }
            power *= base;
        }
        out.push_back(c.result());
    }
    {
        IdentityCheck c("binom(n,k) binom(n-k, n-2k) = binom(2k,k) binom(n,2k)");
        for (long long i = 0; i <= static_cast<long long>(n) && !c.failed(); ++i) {
            for (long long k = 0; 2 * k <= i; ++k) {
                const auto lhs = binomial(i, k) * binomial(i - k, i - 2 * k);
                const auto rhs = binomial(2 * k, k) * binomial(i, 2 * k);
                if (!c.expect(lhs == rhs, static_cast<std::size_t>(i), "k=" + std::to_string(k) + ": " + neq(lhs, rhs))) {
                    break;
                }
            }
        }
        out.push_back(c.result());
    }
    return out;
}

} // namespace gfkit

#endif
