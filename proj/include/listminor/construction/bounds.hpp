#pragma once

#include <listminor/construction/params.hpp>

#include <cmath>
#include <stdexcept>

namespace listminor {

/// Log of the union bound on the block-property failure probability:
/// ln((C+1)n+1)(C+1)n - eps^2 n^(2 - f^2 delta).
inline auto event1_bound(double n, double epsilon, double c_const, double f, double delta) -> double
{
    const long double nn = n, c1 = static_cast<long double>(c_const) + 1.0L, e = epsilon;
    const long double exponent = 2.0L - static_cast<long double>(f) * f * delta;
    return static_cast<double>(std::log(c1 * nn + 1.0L) * c1 * nn - e * e * std::pow(nn, exponent));
}

inline auto event1_bound(double n, const Lemma3Params & p) -> double
{
    return event1_bound(n, to_double(p.epsilon), to_double(p.c_const), static_cast<double>(p.f), to_double(p.delta));
}

/// Log of the union bound on some degree exceeding eps n:
/// ln((C+1)n) - n^(1 - delta)/3.
inline auto degree_tail_bound(double n, double c_const, double delta) -> double
{
    if (! (delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0, 1)");
    const long double nn = n;
    return static_cast<double>(std::log((static_cast<long double>(c_const) + 1.0L) * nn) - std::pow(nn, 1.0L - static_cast<long double>(delta)) / 3.0L);
}

}
