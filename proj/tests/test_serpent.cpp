#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles/oracle_serpent.hpp"
#include "sosemanuk/serpent.hpp"

using namespace sosemanuk;

namespace {

Quartet random_quartet(std::mt19937& rng)
{
    return {Word(rng()), Word(rng()), Word(rng()), Word(rng())};
}

oracle::Block to_block(Quartet q)
{
    return {q.y0, q.y1, q.y2, q.y3};
}

Quartet from_block(oracle::Block b)
{
    return {b[0], b[1], b[2], b[3]};
}

// Expected subkeys for the all-zero 128-bit key, sourced from a
// published reference schedule (first 25 of the full 33).
constexpr Word kZeroKeySubkeys[25][4] = {
    {0x6F579DD2, 0xA7A3A3CE, 0xF29990ED, 0x8ED77392},
    {0x80125B0E, 0xEC264D48, 0x6023C3D7, 0x41D3A19F},
    {0xF8C9EA64, 0x85E629C5, 0xEDC06A3C, 0x5208C226},
    {0x996EDCA3, 0x87C0E675, 0x28D9D59C, 0x0A69F259},
    {0x3B9094E6, 0x0B918E16, 0xEB3F3D7A, 0x81A43B80},
    {0xDE2068FE, 0x3C0A592A, 0x6987F660, 0xB85C1049},
    {0x57FE226C, 0x7E01D297, 0xFE13D038, 0x145FB65A},
    {0x4F5DF0C5, 0x6648582B, 0xC385F12F, 0x984381B0},
    {0x447BCF29, 0x68941F24, 0x523B25D2, 0x086144F0},
    {0xF45443F8, 0x9FE43D24, 0x9CB5B319, 0x3EDA4321},
    {0xB4146DD5, 0x2CD8083E, 0x9ED2F57F, 0x6E55B8B8},
    {0x94D3397A, 0xC6E90A6F, 0x9F35D452, 0x39146B55},
    {0xFCF11184, 0x357BA27F, 0xD1E4E6D0, 0x2EBF4F5E},
    {0x2EAA8274, 0xDE5A7089, 0xE2FF0356, 0x17482FFC},
    {0xEEB5BB44, 0xEE77BDE8, 0x7ECC739D, 0x357BA7EC},
    {0x755C9A06, 0x0DBD73D7, 0x5A16A42E, 0xBD4253F7},
    {0xCAE3885C, 0xA594CC7A, 0x6487DE0E, 0x83CB2331},
    {0x213C9FBB, 0x106C6AF8, 0x0C9C9F4C, 0xD554B5CC},
    {0x656F9008, 0x85DB98CE, 0x04EC632B, 0x83F0FD5E},
    {0x9C72345E, 0x0C547D37, 0x3C580E7B, 0x68C52253},
    {0x5A8033F3, 0xF0F5C3FF, 0xA17AAC1D, 0x48D929C1},
    {0x7275B839, 0xBCD32557, 0x6242379F, 0x9F18AEF2},
    {0x3E641FBF, 0x2BF25532, 0xD80D8936, 0x7A38E7A8},
    {0x75878446, 0x3B59AFDD, 0x6F9A2417, 0xD374C9E8},
    {0x92372BC2, 0x0FE107A2, 0x7EA908D8, 0xD2F3EC0F},
};

} // namespace

TEST_CASE("every S-box table is a permutation of 0..15")
{
    for (const auto& table : oracle::kSboxTables) {
        std::set<int> seen(table.begin(), table.end());
        CHECK(seen.size() == 16);
        CHECK(*seen.begin() == 0);
        CHECK(*seen.rbegin() == 15);
    }
}

TEST_CASE("bitslice S-boxes replicate the nibble tables across slices")
{
    // S2(0) = 8 = 1000b: Y3 lane all ones
    CHECK(sbox_bitslice(2, {0, 0, 0, 0}) == Quartet{0, 0, 0, 0xFFFFFFFF});
    // S2(15) = 2 = 0010b: Y1 lane all ones
    const Word ones = 0xFFFFFFFF;
    CHECK(sbox_bitslice(2, {ones, ones, ones, ones})
          == Quartet{0, 0xFFFFFFFF, 0, 0});
}

TEST_CASE("bitslice equals table lookup for all eight S-boxes")
{
    std::mt19937 rng(10);
    for (int index = 0; index < 8; ++index) {
        for (int i = 0; i < 10000; ++i) {
            const Quartet q = random_quartet(rng);
            CHECK(sbox_bitslice(index, q)
                  == from_block(oracle::sbox_tablewise(index, to_block(q))));
        }
    }
}

TEST_CASE("sbox_bitslice rejects bad indices")
{
    CHECK_THROWS_AS((void)sbox_bitslice(-1, {}), std::domain_error);
    CHECK_THROWS_AS((void)sbox_bitslice(8, {}), std::domain_error);
}

TEST_CASE("linear transform: zero, linearity, transcription equality")
{
    CHECK(linear_transform({0, 0, 0, 0}) == Quartet{0, 0, 0, 0});

    std::mt19937 rng(11);
    for (int i = 0; i < 10000; ++i) {
        const Quartet x = random_quartet(rng);
        const Quartet y = random_quartet(rng);
        CHECK(linear_transform(x ^ y)
              == (linear_transform(x) ^ linear_transform(y)));
    }
    for (int i = 0; i < 1000; ++i) {
        const Quartet x = random_quartet(rng);
        CHECK(linear_transform(x)
              == from_block(oracle::linear_transform(to_block(x))));
    }
}

TEST_CASE("linear transform matrix: basis evaluation and full rank")
{
    const auto m = oracle::derive_matrix([](oracle::Block b) {
        return to_block(linear_transform(from_block(b)));
    });

    // the quartet written (0,0,0,1): least significant bit set
    CHECK(linear_transform({1, 0, 0, 0})
          == from_block(oracle::matrix_apply(m, {1, 0, 0, 0})));

    std::mt19937 rng(12);
    for (int i = 0; i < 1000; ++i) {
        const Quartet x = random_quartet(rng);
        CHECK(linear_transform(x)
              == from_block(oracle::matrix_apply(m, to_block(x))));
    }

    CHECK(oracle::matrix_rank(m) == 128);
}

TEST_CASE("key schedule matches the reference schedule for the zero key")
{
    const std::vector<std::uint8_t> key(16, 0);
    const KeySchedule ks = serpent_key_schedule(key);
    for (int i = 0; i < 25; ++i) {
        CHECK(ks.subkeys[i].y0 == kZeroKeySubkeys[i][0]);
        CHECK(ks.subkeys[i].y1 == kZeroKeySubkeys[i][1]);
        CHECK(ks.subkeys[i].y2 == kZeroKeySubkeys[i][2]);
        CHECK(ks.subkeys[i].y3 == kZeroKeySubkeys[i][3]);
    }
}

TEST_CASE("key schedule spot values for 256-bit and arbitrary keys")
{
    const std::vector<std::uint8_t> zero32(32, 0);
    const KeySchedule a = serpent_key_schedule(zero32);
    CHECK(a.subkeys[0] == Subkey{0x6F5795D0, 0xA7E3A3CE, 0xF2D998ED, 0x8ED77390});
    CHECK(a.subkeys[12] == Subkey{0xD8E083A1, 0x106F0679, 0xF555C276, 0x2B2A6DF9});
    CHECK(a.subkeys[24] == Subkey{0x82B76E53, 0x0DC644AF, 0x58B92C6D, 0xE6712892});

    const std::vector<std::uint8_t> rkey = {0x8A, 0x5F, 0x1C, 0xE3, 0x44, 0x90,
                                            0xB2, 0x7D, 0x16, 0xAD, 0x09, 0xF5,
                                            0x6E, 0xC8, 0x23, 0x71};
    const KeySchedule b = serpent_key_schedule(rkey);
    CHECK(b.subkeys[0] == Subkey{0x7F7B0043, 0xAE46458E, 0x96CF7E11, 0x2F83D2BA});
    CHECK(b.subkeys[12] == Subkey{0xCC2F28D3, 0x242A7148, 0x1CABC896, 0x4EA01156});
    CHECK(b.subkeys[24] == Subkey{0xFA6F2443, 0xACA6C688, 0x9DC18711, 0xE889C1AF});
}

TEST_CASE("key schedule equals the tablewise oracle on random keys")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t len = 16 + rng() % 17;
        std::vector<std::uint8_t> key(len);
        for (auto& b : key)
            b = std::uint8_t(rng());
        const KeySchedule ks = serpent_key_schedule(key);
        const auto expected = oracle::key_schedule_25(key);
        for (int i = 0; i < 25; ++i)
            CHECK(ks.subkeys[i] == from_block(expected[std::size_t(i)]));
    }
}

TEST_CASE("key schedule rejects out-of-range lengths")
{
    CHECK_THROWS_AS((void)serpent_key_schedule(std::vector<std::uint8_t>(15)),
                    InvalidKeyLength);
    CHECK_THROWS_AS((void)serpent_key_schedule(std::vector<std::uint8_t>(33)),
                    InvalidKeyLength);
    CHECK_THROWS_AS((void)serpent_key_schedule(std::vector<std::uint8_t>{}),
                    InvalidKeyLength);
}

TEST_CASE("single key bit flips disturb every subkey")
{
    std::mt19937 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint8_t> key(16);
        for (auto& b : key)
            b = std::uint8_t(rng());
        std::vector<std::uint8_t> twin = key;
        twin[rng() % 16] ^= std::uint8_t(1 << (rng() % 8));

        const KeySchedule a = serpent_key_schedule(key);
        const KeySchedule b = serpent_key_schedule(twin);
        for (int i = 0; i < 25; ++i)
            CHECK(a.subkeys[i] != b.subkeys[i]);
    }
}

TEST_CASE("serpent24 taps: determinism and oracle equality")
{
    std::mt19937 rng(15);
    std::vector<std::uint8_t> key(16);
    for (auto& b : key)
        b = std::uint8_t(rng());
    const KeySchedule ks = serpent_key_schedule(key);

    const Quartet block = random_quartet(rng);
    const SerpentTaps once = serpent24_encrypt_taps(ks, block);
    const SerpentTaps twice = serpent24_encrypt_taps(ks, block);
    CHECK(once.y12 == twice.y12);
    CHECK(once.y18 == twice.y18);
    CHECK(once.y24 == twice.y24);

    const auto oracle_ks = oracle::key_schedule_25(key);
    for (int i = 0; i < 20; ++i) {
        const Quartet b = random_quartet(rng);
        const SerpentTaps got = serpent24_encrypt_taps(ks, b);
        const oracle::Taps want = oracle::serpent24_taps(oracle_ks, to_block(b));
        CHECK(got.y12 == from_block(want.y12));
        CHECK(got.y18 == from_block(want.y18));
        CHECK(got.y24 == from_block(want.y24));
    }
}

TEST_CASE("serpent24 all-zero key and block against the round-by-round oracle")
{
    const std::vector<std::uint8_t> zero_key(16, 0);
    const KeySchedule ks = serpent_key_schedule(zero_key);
    const SerpentTaps got = serpent24_encrypt_taps(ks, {0, 0, 0, 0});
    const oracle::Taps want =
        oracle::serpent24_taps(oracle::key_schedule_25(zero_key), {0, 0, 0, 0});
    CHECK(got.y12 == from_block(want.y12));
    CHECK(got.y18 == from_block(want.y18));
    CHECK(got.y24 == from_block(want.y24));
}

TEST_CASE("serpent24 avalanche across all three taps")
{
    std::mt19937 rng(16);
    std::vector<std::uint8_t> key(16);
    for (auto& b : key)
        b = std::uint8_t(rng());
    const KeySchedule ks = serpent_key_schedule(key);

    const auto popcount_diff = [](Quartet a, Quartet b) {
        const Quartet d = a ^ b;
        return __builtin_popcount(d.y0) + __builtin_popcount(d.y1)
            + __builtin_popcount(d.y2) + __builtin_popcount(d.y3);
    };

    for (int trial = 0; trial < 100; ++trial) {
        const Quartet block = random_quartet(rng);
        Quartet flipped = block;
        const int bit = int(rng() % 128);
        Word* words[4] = {&flipped.y0, &flipped.y1, &flipped.y2, &flipped.y3};
        *words[bit / 32] ^= Word(1) << (bit % 32);

        const SerpentTaps a = serpent24_encrypt_taps(ks, block);
        const SerpentTaps b = serpent24_encrypt_taps(ks, flipped);
        CHECK(popcount_diff(a.y12, b.y12) >= 38); // 30% of 128
        CHECK(popcount_diff(a.y18, b.y18) >= 38);
        CHECK(popcount_diff(a.y24, b.y24) >= 38);
    }
}

TEST_CASE("serpent1 is S2 in bitslice mode and a bijection")
{
    CHECK(serpent1({0, 0, 0, 0}) == Quartet{0, 0, 0, 0xFFFFFFFF});

    std::mt19937 rng(17);
    std::set<std::array<Word, 4>> outputs;
    std::set<std::array<Word, 4>> inputs;
    for (int i = 0; i < 10000; ++i) {
        const Quartet q = random_quartet(rng);
        CHECK(serpent1(q) == sbox_bitslice(2, q));
        if (inputs.insert({q.y0, q.y1, q.y2, q.y3}).second) {
            const Quartet out = serpent1(q);
            CHECK(outputs.insert({out.y0, out.y1, out.y2, out.y3}).second);
        }
    }
}
