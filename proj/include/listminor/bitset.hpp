#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace listminor {

/// Fixed-width bitset whose width is chosen at construction.  Used for
/// adjacency rows and vertex masks of hosts that do not fit in one word.
class DynamicBitset
{
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    DynamicBitset() = default;

    explicit DynamicBitset(std::size_t size)
        : _size(size), _words((size + 63) / 64, 0)
    {
    }

    auto size() const -> std::size_t { return _size; }

    auto test(std::size_t i) const -> bool
    {
        return (_words[i / 64] >> (i % 64)) & 1u;
    }

    auto set(std::size_t i) -> void { _words[i / 64] |= std::uint64_t{1} << (i % 64); }

    auto reset(std::size_t i) -> void { _words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    auto count() const -> std::size_t
    {
        std::size_t c = 0;
        for (auto w : _words)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    auto none() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [](std::uint64_t w) { return w == 0; });
    }

    auto any() const -> bool { return ! none(); }

    auto intersects(const DynamicBitset & other) const -> bool
    {
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto find_first() const -> std::size_t { return find_from_word(0); }

    auto find_next(std::size_t i) const -> std::size_t
    {
        ++i;
        if (i >= _size)
            return npos;
        std::size_t w = i / 64;
        std::uint64_t bits = _words[w] & (~std::uint64_t{0} << (i % 64));
        if (bits)
            return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        return find_from_word(w + 1);
    }

    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (std::size_t w = 0 ; w < _words.size() ; ++w) {
            std::uint64_t bits = _words[w];
            while (bits) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    /// Low 64 bits; only meaningful for widths up to 64.
    auto first_word() const -> std::uint64_t { return _words.empty() ? 0 : _words[0]; }

    auto operator&=(const DynamicBitset & other) -> DynamicBitset &
    {
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto operator|=(const DynamicBitset & other) -> DynamicBitset &
    {
        for (std::size_t i = 0 ; i < _words.size() ; ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto operator==(const DynamicBitset &) const -> bool = default;

private:
    auto find_from_word(std::size_t w) const -> std::size_t
    {
        for ( ; w < _words.size() ; ++w)
            if (_words[w])
                return w * 64 + static_cast<std::size_t>(std::countr_zero(_words[w]));
        return npos;
    }

    std::size_t _size = 0;
    std::vector<std::uint64_t> _words;
};

}
