#ifndef SOSEMANUK_SBOX_CIRCUITS_HPP
#define SOSEMANUK_SBOX_CIRCUITS_HPP

#include "sosemanuk/types.hpp"

namespace sosemanuk::detail {

// Bitslice S-box circuits (Osvik-style, five registers). Each circuit
// leaves its result in a permuted register set; the return statements
// restore the canonical (y0, y1, y2, y3) order. The nibble permutation
// tables are the semantic ground truth, enforced by tests.

inline Quartet s0(Word r0, Word r1, Word r2, Word r3)
{
    Word r4;
    r3 ^= r0;  r4  = r1;
    r1 &= r3;  r4 ^= r2;
    r1 ^= r0;  r0 |= r3;
    r0 ^= r4;  r4 ^= r3;
    r3 ^= r2;  r2 |= r1;
    r2 ^= r4;  r4 = ~r4;
    r4 |= r1;  r1 ^= r3;
    r1 ^= r4;  r3 |= r0;
    r1 ^= r3;  r4 ^= r3;
    return {r1, r4, r2, r0};
}

inline Quartet s1(Word r0, Word r1, Word r2, Word r3)
{
    Word r4;
    r0 = ~r0;  r2 = ~r2;
    r4  = r0;  r0 &= r1;
    r2 ^= r0;  r0 |= r3;
    r3 ^= r2;  r1 ^= r0;
    r0 ^= r4;  r4 |= r1;
    r1 ^= r3;  r2 |= r0;
    r2 &= r4;  r0 ^= r1;
    r1 &= r2;
    r1 ^= r0;  r0 &= r2;
    r0 ^= r4;
    return {r2, r0, r3, r1};
}

inline Quartet s2(Word r0, Word r1, Word r2, Word r3)
{
    Word r4;
    r4  = r0;  r0 &= r2;
    r0 ^= r3;  r2 ^= r1;
    r2 ^= r0;  r3 |= r4;
    r3 ^= r1;  r4 ^= r2;
    r1  = r3;  r3 |= r4;
    r3 ^= r0;  r0 &= r1;
    r4 ^= r0;  r1 ^= r3;
    r1 ^= r4;  r4 = ~r4;
    return {r2, r3, r1, r4};
}

inline Quartet s3(Word r0, Word r1, Word r2, Word r3)
{
    Word r4;
    r4  = r0;  r0 |= r3;
    r3 ^= r1;  r1 &= r4;
    r4 ^= r2;  r2 ^= r3;
    r3 &= r0;  r4 |= r1;
    r3 ^= r4;  r0 ^= r1;
    r4 &= r0;  r1 ^= r3;
    r4 ^= r2;  r1 |= r0;
    r1 ^= r2;  r0 ^= r3;
    r2  = r1;  r1 |= r3;
    r1 ^= r0;
    return {r1, r2, r3, r4};
}

inline Quartet s4(Word r0, Word r1, Word r2, Word r3)
{
    Word r4;
    r1 ^= r3;  r3 = ~r3;
    r2 ^= r3;  r3 ^= r0;
    r4  = r1;  r1 &= r3;
    r1 ^= r2;  r4 ^= r3;
    r0 ^= r4;  r2 &= r4;
    r2 ^= r0;  r0 &= r1;
    r3 ^= r0;  r4 |= r1;
    r4 ^= r0;  r0 |= r3;
    r0 ^= r2;  r2 &= r3;
    r0 = ~r0;  r4 ^= r2;
    return {r1, r4, r0, r3};
}

inline Quartet s5(Word r0, Word r1, Word r2, Word r3)
{
    Word r4;
    r0 ^= r1;  r1 ^= r3;
    r3 = ~r3;  r4  = r1;
    r1 &= r0;  r2 ^= r3;
    r1 ^= r2;  r2 |= r4;
    r4 ^= r3;  r3 &= r1;
    r3 ^= r0;  r4 ^= r1;
    r4 ^= r2;  r2 ^= r0;
    r0 &= r3;  r2 = ~r2;
    r0 ^= r4;  r4 |= r3;
    r2 ^= r4;
    return {r1, r3, r0, r2};
}

inline Quartet s6(Word r0, Word r1, Word r2, Word r3)
{
    Word r4;
    r2 = ~r2;  r4  = r3;
    r3 &= r0;  r0 ^= r4;
    r3 ^= r2;  r2 |= r4;
    r1 ^= r3;  r2 ^= r0;
    r0 |= r1;  r2 ^= r1;
    r4 ^= r0;  r0 |= r3;
    r0 ^= r2;  r4 ^= r3;
    r4 ^= r0;  r3 = ~r3;
    r2 &= r4;
    r2 ^= r3;
    return {r0, r1, r4, r2};
}

inline Quartet s7(Word r0, Word r1, Word r2, Word r3)
{
    Word r4;
    r4  = r1;  r1 |= r2;
    r1 ^= r3;  r4 ^= r2;
    r2 ^= r1;  r3 |= r4;
    r3 &= r0;  r4 ^= r2;
    r3 ^= r1;  r1 |= r4;
    r1 ^= r0;  r0 |= r4;
    r0 ^= r2;  r1 ^= r4;
    r2 ^= r1;  r1 &= r0;
    r1 ^= r4;  r2 = ~r2;
    r2 |= r0;
    r4 ^= r2;
    return {r4, r3, r1, r0};
}

} // namespace sosemanuk::detail

#endif
