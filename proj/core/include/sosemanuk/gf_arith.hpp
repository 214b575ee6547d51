#ifndef SOSEMANUK_GF_ARITH_HPP
#define SOSEMANUK_GF_ARITH_HPP

#include <array>
#include <cstdint>

#include "sosemanuk/types.hpp"

namespace sosemanuk {

/// An element of GF(2^8) = F2[X]/Q(X), Q(X) = X^8 + X^7 + X^5 + X^3 + 1,
/// identified with its 8-bit integer image. Every 8-bit value is a valid
/// element; addition is XOR.
using Gf8 = std::uint8_t;

/// An element of GF(2^32) = GF(2^8)[X]/P(X) identified with its 32-bit
/// integer image: byte k holds the coefficient of alpha^k. Addition is XOR.
using Gf32 = Word;

/// Carry-less polynomial product of two GF(2^8) elements, reduced mod Q.
Gf8 gf8_mul(Gf8 a, Gf8 b);

/// beta^k for 0 <= k <= 254, where beta is the image of X (a generator
/// of the multiplicative group). Throws std::domain_error outside range.
Gf8 gf8_beta_pow(int k);

/// Mask tables turning multiplication and division by alpha into a
/// shift-and-XOR. mul_mask is indexed by the most significant byte of
/// the operand, div_mask by the least significant byte. Immutable once
/// built; safe to share across threads.
struct AlphaTables {
    std::array<Gf32, 256> mul_mask;
    std::array<Gf32, 256> div_mask;
};

/// Generates both mask tables from Q(X) and P(X). P(X) = X^4 +
/// beta^23 X^3 + beta^245 X^2 + beta^48 X + beta^239, so the masks fall
/// out of one reduction step alpha^4 = beta^23 alpha^3 + ... + beta^239.
AlphaTables build_alpha_tables();

/// Process-wide shared instance, built on first use.
const AlphaTables& alpha_tables();

inline Gf32 mul_alpha(Gf32 z, const AlphaTables& t)
{
    return (z << 8) ^ t.mul_mask[z >> 24];
}

inline Gf32 div_alpha(Gf32 z, const AlphaTables& t)
{
    return (z >> 8) ^ t.div_mask[z & 0xFF];
}

} // namespace sosemanuk

#endif
