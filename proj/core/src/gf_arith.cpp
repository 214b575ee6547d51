#include "sosemanuk/gf_arith.hpp"

#include <stdexcept>

namespace sosemanuk {

namespace {

// Q(X) = X^8 + X^7 + X^5 + X^3 + 1
constexpr unsigned kQ = 0x1A9;

Gf8 gf8_pow(Gf8 a, int e)
{
    Gf8 r = 1;
    Gf8 base = a;
    while (e > 0) {
        if (e & 1)
            r = gf8_mul(r, base);
        base = gf8_mul(base, base);
        e >>= 1;
    }
    return r;
}

// a^254 = a^-1 for nonzero a (group order 255)
Gf8 gf8_inv(Gf8 a)
{
    return gf8_pow(a, 254);
}

} // namespace

Gf8 gf8_mul(Gf8 a, Gf8 b)
{
    unsigned acc = 0;
    for (int i = 0; i < 8; ++i)
        if ((b >> i) & 1)
            acc ^= unsigned(a) << i;
    for (int i = 14; i >= 8; --i)
        if ((acc >> i) & 1)
            acc ^= kQ << (i - 8);
    return Gf8(acc);
}

Gf8 gf8_beta_pow(int k)
{
    if (k < 0 || k > 254)
        throw std::domain_error("gf8_beta_pow: exponent out of 0..254");
    Gf8 x = 1;
    for (int i = 0; i < k; ++i)
        x = gf8_mul(x, 0x02);
    return x;
}

AlphaTables build_alpha_tables()
{
    // alpha^4 = c3 alpha^3 + c2 alpha^2 + c1 alpha + c0
    const Gf8 c3 = gf8_beta_pow(23);
    const Gf8 c2 = gf8_beta_pow(245);
    const Gf8 c1 = gf8_beta_pow(48);
    const Gf8 c0 = gf8_beta_pow(239);

    // alpha * (c0 inverse) * (alpha^3 + c3 alpha^2 + c2 alpha + c1) = 1
    const Gf8 c0i = gf8_inv(c0);
    const Gf8 a3 = c0i;
    const Gf8 a2 = gf8_mul(c0i, c3);
    const Gf8 a1 = gf8_mul(c0i, c2);
    const Gf8 a0 = gf8_mul(c0i, c1);

    AlphaTables t;
    for (unsigned b = 0; b < 256; ++b) {
        const Gf8 v = Gf8(b);
        // alpha * (v alpha^3): the shifted-out top coefficient re-enters
        // through the alpha^4 reduction.
        t.mul_mask[b] = Gf32(gf8_mul(v, c0))
            | Gf32(gf8_mul(v, c1)) << 8
            | Gf32(gf8_mul(v, c2)) << 16
            | Gf32(gf8_mul(v, c3)) << 24;
        // alpha^-1 * (v * 1)
        t.div_mask[b] = Gf32(gf8_mul(v, a0))
            | Gf32(gf8_mul(v, a1)) << 8
            | Gf32(gf8_mul(v, a2)) << 16
            | Gf32(gf8_mul(v, a3)) << 24;
    }
    return t;
}

const AlphaTables& alpha_tables()
{
    static const AlphaTables t = build_alpha_tables();
    return t;
}

} // namespace sosemanuk
