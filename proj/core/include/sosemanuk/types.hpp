#ifndef SOSEMANUK_TYPES_HPP
#define SOSEMANUK_TYPES_HPP

#include <cstdint>
#include <stdexcept>

namespace sosemanuk {

/// The universal unit of state and keystream.
using Word = std::uint32_t;

/// Ordered 4-tuple of words in bitslice convention. `y0` is the least
/// significant word: bit j of (y3, y2, y1, y0) forms the j-th 4-bit
/// S-box input nibble. Display order is (y3, y2, y1, y0).
struct Quartet {
    Word y0 = 0;
    Word y1 = 0;
    Word y2 = 0;
    Word y3 = 0;

    friend bool operator==(const Quartet&, const Quartet&) = default;

    friend Quartet operator^(const Quartet& a, const Quartet& b)
    {
        return {a.y0 ^ b.y0, a.y1 ^ b.y1, a.y2 ^ b.y2, a.y3 ^ b.y3};
    }
};

struct InvalidKeyLength : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidIvLength : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr Word rotl(Word x, int n)
{
    return (x << n) | (x >> (32 - n));
}

} // namespace sosemanuk

#endif
