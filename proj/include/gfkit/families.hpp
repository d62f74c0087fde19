#ifndef GFKIT_FAMILIES_HPP
#define GFKIT_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "automaton.hpp"

namespace gfkit
{

struct FamilyParams {
    std::optional<long long> k;
    std::optional<long long> a;
    std::optional<long long> b;
    std::optional<long long> c;
};

using FamilySpec = std::variant<LinearSpec, BilinearSpec>;

namespace detail
{

inline long long positive_k(const FamilyParams &p, std::string_view family)
{
    const long long k = p.k.value_or(1);
    if (k < 1) {
        throw std::invalid_argument(std::string(family) + " needs k >= 1, got " + std::to_string(k));
    }
    return k;
}

inline long long nonnegative(const std::optional<long long> &v, char name)
{
    const long long x = v.value_or(1);
    if (x < 0) {
        throw std::invalid_argument(std::string("trinomial parameter ") + name + " must be >= 0, got "
                                    + std::to_string(x));
    }
    return x;
}

inline LinearSpec uniform_linear(ParallelTransition f, ParallelTransition g, ParallelTransition h)
{
    return LinearSpec(LevelWeights{std::move(f), std::move(g), std::move(h)});
}

} // namespace detail

// kz/(1-z) = k(z + z^2 + z^3 + ...)
inline ParallelTransition every_length_loop(long long k, std::size_t order)
{
    std::vector<Coefficient> c(order, Coefficient(k));
    c[0] = 0;
    return ParallelTransition(TruncatedSeries(std::move(c), order));
}

// Linear or bilinear automaton of a named lattice-path family. Transitions are
// materialised at the given series order.
//
//   motzkin         f = g = h = z
//   dyck            f = g = z, h = 0
//   riordan         f = g = z, h_0 = 0, h_i = z (i >= 1)
//   kcolored k      f = g = z, h = kz
//   gen_motzkin k   f = g = z, h = z^k
//   schroeder       gen_motzkin with k = 2
//   fk k            f = g = z, h = kz/(1-z)
//   grand_motzkin   bilinear, every weight z
//   trinomial a,b,c bilinear, rises az, falls cz, loops bz
inline FamilySpec family_spec(std::string_view name, const FamilyParams &params, std::size_t order)
{
    const auto z = ParallelTransition::monomial(1, 1, order);
    const auto zero = ParallelTransition::zero(order);
    if (name == "motzkin") {
        return detail::uniform_linear(z, z, z);
    }
    if (name == "dyck") {
        return detail::uniform_linear(z, z, zero);
    }
    if (name == "riordan") {
        return LinearSpec(LevelWeights{z, z, z}, {{0, LevelWeights{z, z, zero}}});
    }
    if (name == "kcolored") {
        const auto k = detail::positive_k(params, name);
        return detail::uniform_linear(z, z, ParallelTransition::monomial(k, 1, order));
    }
    if (name == "gen_motzkin" || name == "schroeder") {
        const auto k = name == "schroeder" ? 2 : detail::positive_k(params, name);
        return detail::uniform_linear(z, z, ParallelTransition::monomial(1, static_cast<std::size_t>(k), order));
    }
    if (name == "fk") {
        const auto k = detail::positive_k(params, name);
        return detail::uniform_linear(z, z, every_length_loop(k, order));
    }
    if (name == "grand_motzkin") {
        auto side = detail::uniform_linear(z, z, z);
        return BilinearSpec{side, side};
    }
    if (name == "trinomial") {
        const auto a = detail::nonnegative(params.a, 'a');
        const auto b = detail::nonnegative(params.b, 'b');
        const auto c = detail::nonnegative(params.c, 'c');
        const auto rise = ParallelTransition::monomial(a, 1, order);
        const auto fall = ParallelTransition::monomial(c, 1, order);
        const auto level = ParallelTransition::monomial(b, 1, order);
        return BilinearSpec{detail::uniform_linear(rise, fall, level), detail::uniform_linear(fall, rise, level)};
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

inline LinearSpec linear_family(std::string_view name, const FamilyParams &params, std::size_t order)
{
    auto spec = family_spec(name, params, order);
    if (auto *lin = std::get_if<LinearSpec>(&spec)) {
        return *lin;
    }
    throw std::invalid_argument("family '" + std::string(name) + "' is not a linear automaton");
}

inline BilinearSpec bilinear_family(std::string_view name, const FamilyParams &params, std::size_t order)
{
    auto spec = family_spec(name, params, order);
    if (auto *bi = std::get_if<BilinearSpec>(&spec)) {
        return *bi;
    }
    throw std::invalid_argument("family '" + std::string(name) + "' is not a bilinear automaton");
}

} // namespace gfkit

#endif
