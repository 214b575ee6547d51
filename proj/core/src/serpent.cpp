#include "sosemanuk/serpent.hpp"

#include <atomic>
#include <stdexcept>

namespace sosemanuk {

namespace {

std::atomic<std::uint64_t> g_key_schedule_runs{0};
std::atomic<std::uint64_t> g_serpent24_runs{0};

constexpr Word kPhi = 0x9E3779B9;

Word load_le(const std::uint8_t* p)
{
    return Word(p[0]) | Word(p[1]) << 8 | Word(p[2]) << 16 | Word(p[3]) << 24;
}

} // namespace

Quartet sbox_bitslice(int index, Quartet q)
{
    switch (index) {
    case 0: return detail::s0(q.y0, q.y1, q.y2, q.y3);
    case 1: return detail::s1(q.y0, q.y1, q.y2, q.y3);
    case 2: return detail::s2(q.y0, q.y1, q.y2, q.y3);
    case 3: return detail::s3(q.y0, q.y1, q.y2, q.y3);
    case 4: return detail::s4(q.y0, q.y1, q.y2, q.y3);
    case 5: return detail::s5(q.y0, q.y1, q.y2, q.y3);
    case 6: return detail::s6(q.y0, q.y1, q.y2, q.y3);
    case 7: return detail::s7(q.y0, q.y1, q.y2, q.y3);
    default:
        throw std::domain_error("sbox_bitslice: index out of 0..7");
    }
}

Quartet linear_transform(Quartet q)
{
    Word x0 = q.y0, x1 = q.y1, x2 = q.y2, x3 = q.y3;
    x0 = rotl(x0, 13);
    x2 = rotl(x2, 3);
    x1 = x1 ^ x0 ^ x2;
    x3 = x3 ^ x2 ^ (x0 << 3);
    x1 = rotl(x1, 1);
    x3 = rotl(x3, 7);
    x0 = x0 ^ x1 ^ x3;
    x2 = x2 ^ x3 ^ (x1 << 7);
    x0 = rotl(x0, 5);
    x2 = rotl(x2, 22);
    return {x0, x1, x2, x3};
}

KeySchedule serpent_key_schedule(std::span<const std::uint8_t> key)
{
    if (key.size() < 16 || key.size() > 32)
        throw InvalidKeyLength("serpent_key_schedule: key must be 16..32 bytes");
    g_key_schedule_runs.fetch_add(1, std::memory_order_relaxed);

    std::uint8_t padded[32] = {0};
    for (std::size_t i = 0; i < key.size(); ++i)
        padded[i] = key[i];
    if (key.size() < 32)
        padded[key.size()] = 0x01;

    // Rolling window over the prekey recurrence
    //   w_i = (w_{i-8} ^ w_{i-5} ^ w_{i-3} ^ w_{i-1} ^ phi ^ i) <<< 11.
    Word w[8];
    for (int i = 0; i < 8; ++i)
        w[i] = load_le(padded + 4 * i);

    Word pre[100];
    for (int i = 0; i < 100; ++i) {
        Word t = w[i & 7] ^ w[(i + 3) & 7] ^ w[(i + 5) & 7] ^ w[(i + 7) & 7]
            ^ kPhi ^ Word(i);
        w[i & 7] = rotl(t, 11);
        pre[i] = w[i & 7];
    }

    KeySchedule ks;
    for (int i = 0; i < 25; ++i) {
        const int sbox = ((3 - i) % 8 + 8) % 8;
        ks.subkeys[i] = sbox_bitslice(
            sbox, {pre[4 * i], pre[4 * i + 1], pre[4 * i + 2], pre[4 * i + 3]});
    }
    return ks;
}

SerpentTaps serpent24_encrypt_taps(const KeySchedule& ks, Quartet block)
{
    g_serpent24_runs.fetch_add(1, std::memory_order_relaxed);

    SerpentTaps taps;
    Quartet x = block;
    for (int r = 0; r < 24; ++r) {
        x = sbox_bitslice(r & 7, x ^ ks.subkeys[r]);
        x = linear_transform(x);
        if (r == 11)
            taps.y12 = x;
        else if (r == 17)
            taps.y18 = x;
    }
    taps.y24 = x ^ ks.subkeys[24];
    return taps;
}

CallCounters call_counters()
{
    return {g_key_schedule_runs.load(std::memory_order_relaxed),
            g_serpent24_runs.load(std::memory_order_relaxed)};
}

void reset_call_counters()
{
    g_key_schedule_runs.store(0, std::memory_order_relaxed);
    g_serpent24_runs.store(0, std::memory_order_relaxed);
}

} // namespace sosemanuk
