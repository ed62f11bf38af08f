#pragma once

#include <listminor/construction/rational.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace listminor {

/// Constants of the gadget construction: f = ceil(C/eps), delta = eps^2/(4C^2).
struct Lemma3Params
{
    Rational epsilon;
    Rational c_const;
    std::int64_t f = 0;
    Rational delta;

    auto f_squared_delta() const -> Rational { return Rational(f * f) * delta; }
};

inline auto derive_lemma3_params(const Rational & epsilon, const Rational & c_const) -> Lemma3Params
{
    if (epsilon <= 0 || epsilon >= 1)
        throw std::invalid_argument("epsilon must lie in (0, 1), got " + to_string(epsilon));
    if (c_const < 1)
        throw std::invalid_argument("C must be at least 1, got " + to_string(c_const));
    Lemma3Params p;
    p.epsilon = epsilon;
    p.c_const = c_const;
    p.f = ceil_of(c_const / epsilon);
    p.delta = epsilon * epsilon / (Rational(4) * c_const * c_const);
    if (p.f_squared_delta() >= 1)
        throw std::logic_error("derived f^2 * delta = " + to_string(p.f_squared_delta()) + " is not below 1");
    return p;
}

struct Theorem1Params
{
    Rational epsilon;
    Rational c_const;
    Rational eps_prime;
    Rational c_prime;
    std::int64_t s = 0, t = 0;
    std::int64_t n = 0, m = 0;
    std::int64_t palette_size = 0;
    /// ceil(4/eps); the threshold is max(n0 + 1, this) for an n0 that is only
    /// known to exist.
    std::int64_t n_lower = 0;
    std::optional<std::int64_t> n0;
    /// n >= 1, n <= m and m <= C' n: the range in which the gadget is requested.
    bool gadget_range = false;
};

inline auto derive_theorem1_params(const Rational & epsilon, const Rational & c_const, std::int64_t s, std::int64_t t) -> Theorem1Params
{
    if (epsilon <= 0 || epsilon >= Rational(1, 2))
        throw std::invalid_argument("epsilon must lie in (0, 1/2), got " + to_string(epsilon));
    if (c_const < 1)
        throw std::invalid_argument("C must be at least 1, got " + to_string(c_const));
    if (s < 1 || s > t)
        throw std::invalid_argument("need 1 <= s <= t, got s=" + std::to_string(s) + " t=" + std::to_string(t));
    if (Rational(t) > c_const * Rational(s))
        throw std::invalid_argument("need t <= C s, got t=" + std::to_string(t) + " and C s=" + to_string(c_const * Rational(s)));

    Theorem1Params p;
    p.epsilon = epsilon;
    p.c_const = c_const;
    p.eps_prime = epsilon / Rational(2);
    p.c_prime = Rational(2) * c_const + Rational(2);
    p.s = s;
    p.t = t;
    p.n = s - 1;
    p.m = floor_of((Rational(1) - epsilon) * Rational(s + t));
    p.palette_size = p.m + p.n - 1;
    p.n_lower = ceil_of(Rational(4) / epsilon);
    p.gadget_range = p.n >= 1 && p.n <= p.m && Rational(p.m) <= p.c_prime * Rational(p.n);
    return p;
}

struct Theorem1Bound
{
    std::int64_t value = 0;
    Rational target;
    bool holds = false;
};

/// value = m + n - ceil(eps' n) against target (1 - eps)(2s + t).
inline auto theorem1_bound(std::int64_t s, std::int64_t t, const Rational & epsilon) -> Theorem1Bound
{
    if (s < 1 || s > t)
        throw std::invalid_argument("need 1 <= s <= t, got s=" + std::to_string(s) + " t=" + std::to_string(t));
    if (epsilon <= 0 || epsilon >= Rational(1, 2))
        throw std::invalid_argument("epsilon must lie in (0, 1/2), got " + to_string(epsilon));
    const std::int64_t n = s - 1;
    const std::int64_t m = floor_of((Rational(1) - epsilon) * Rational(s + t));
    const Rational eps_prime = epsilon / Rational(2);
    Theorem1Bound b;
    b.value = m + n - ceil_of(eps_prime * Rational(n));
    b.target = (Rational(1) - epsilon) * Rational(2 * s + t);
    b.holds = Rational(b.value) > b.target;
    return b;
}

inline auto to_json(const Lemma3Params & p) -> nlohmann::json
{
    return nlohmann::json{
        { "epsilon", to_string(p.epsilon) },
        { "C", to_string(p.c_const) },
        { "f", p.f },
        { "delta", to_string(p.delta) },
        { "f_squared_delta", to_string(p.f_squared_delta()) },
    };
}

inline auto to_json(const Theorem1Params & p) -> nlohmann::json
{
    return nlohmann::json{
        { "epsilon", to_string(p.epsilon) },
        { "C", to_string(p.c_const) },
        { "eps_prime", to_string(p.eps_prime) },
        { "C_prime", to_string(p.c_prime) },
        { "s", p.s },
        { "t", p.t },
        { "n", p.n },
        { "m", p.m },
        { "palette_size", p.palette_size },
        { "N_lower", p.n_lower },
        { "n0", p.n0 ? nlohmann::json(*p.n0) : nlohmann::json("unknown: properties checked empirically") },
        { "gadget_range", p.gadget_range },
    };
}

inline auto to_json(const Theorem1Bound & b) -> nlohmann::json
{
    return nlohmann::json{
        { "value", b.value },
        { "target", to_string(b.target) },
        { "target_decimal", to_double(b.target) },
        { "holds", b.holds },
    };
}

}
