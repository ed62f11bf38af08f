#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace listminor {

using Rational = boost::rational<std::int64_t>;

inline auto floor_of(const Rational & r) -> std::int64_t
{
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0)
        --q;
    return q;
}

inline auto ceil_of(const Rational & r) -> std::int64_t
{
    return -floor_of(-r);
}

inline auto to_double(const Rational & r) -> double
{
    return boost::rational_cast<double>(r);
}

inline auto to_string(const Rational & r) -> std::string
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "p/q", an integer, or a plain decimal such as "0.125".
inline auto parse_rational(std::string_view text) -> Rational
{
    auto fail = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    auto parse_i64 = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw fail();
        return v;
    };
    constexpr std::int64_t limit = 1'000'000'000;

    if (auto slash = text.find('/') ; slash != std::string_view::npos) {
        auto p = parse_i64(text.substr(0, slash));
        auto q = parse_i64(text.substr(slash + 1));
        if (q <= 0 || std::abs(p) > limit || q > limit)
            throw fail();
        return Rational(p, q);
    }
    if (auto dot = text.find('.') ; dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 9 || frac.front() == '-' || frac.front() == '+')
            throw fail();
        bool negative = ! whole.empty() && whole.front() == '-';
        std::int64_t w = (whole.empty() || whole == "-") ? 0 : parse_i64(whole);
        std::int64_t scale = 1;
        for (std::size_t i = 0 ; i < frac.size() ; ++i)
            scale *= 10;
        std::int64_t fpart = parse_i64(frac);
        if (std::abs(w) > limit)
            throw fail();
        Rational r(std::abs(w) * scale + fpart, scale);
        return negative ? -r : r;
    }
    auto v = parse_i64(text);
    if (std::abs(v) > limit)
        throw fail();
    return Rational(v);
}

}
