#include <doctest.h>

#include <random>
#include <sstream>

#include "sosemanuk/cipher.hpp"
#include "sosemanuk/hex.hpp"
#include "sosemanuk/kat.hpp"

using namespace sosemanuk;

namespace {

std::vector<std::uint8_t> random_bytes(std::mt19937& rng, std::size_t n)
{
    std::vector<std::uint8_t> out(n);
    for (auto& b : out)
        b = std::uint8_t(rng());
    return out;
}

} // namespace

TEST_CASE("trace agrees with the plain keystream API")
{
    std::mt19937 rng(40);
    for (int trial = 0; trial < 100; ++trial) {
        const auto key = random_bytes(rng, trial % 2 ? 32 : 16);
        const auto iv = random_bytes(rng, 16);

        const TraceRecord trace = emit_trace(key, iv);

        const CipherKey ck(key);
        Cipher cipher(ck, iv);
        const auto stream = cipher.keystream(std::size_t(160));
        CHECK(std::equal(trace.stream.begin(), trace.stream.end(),
                         stream.begin()));
    }
}

TEST_CASE("trace against frozen reference internals")
{
    const auto key = from_hex("00112233445566778899aabbccddeeff");
    const auto iv = from_hex("8899aabbccddeeff0011223344556677");
    const TraceRecord trace = emit_trace(key, iv);

    const Word expected_lfsr[10] = {0xB3A3B696, 0x4F9F2596, 0x21A53B2B,
                                    0x1BFABB41, 0xCEC69B9B, 0xDBA99A9F,
                                    0x6076C06F, 0xC0AE3CD2, 0xABB5043B,
                                    0xA93D885C};
    for (int i = 0; i < 10; ++i)
        CHECK(trace.initial_lfsr[std::size_t(i)] == expected_lfsr[i]);
    CHECK(trace.initial_r1 == 0x9AB17002);
    CHECK(trace.initial_r2 == 0x101D095B);

    CHECK(to_hex(trace.stream) == builtin_kat()[1].stream_hex);
}

TEST_CASE("trace structure and first-step inputs")
{
    std::mt19937 rng(41);
    const auto key = random_bytes(rng, 16);
    const auto iv = random_bytes(rng, 16);
    const TraceRecord trace = emit_trace(key, iv);

    CHECK(trace.subkeys.size() == 25);
    CHECK(trace.quads.size() == 10);

    // the first step consumes (s_2, s_9, s_10) and (R1_0, R2_0)
    const Word s2 = trace.initial_lfsr[1];
    const Word s9 = trace.initial_lfsr[8];
    const Word s10 = trace.initial_lfsr[9];
    const Word chosen =
        (trace.initial_r1 & 1) ? (s2 ^ s9) : s2;
    const Word r1_1 = trace.initial_r2 + chosen;
    const Word r2_1 = trans(trace.initial_r1);
    const Word f1 = (s10 + r1_1) ^ r2_1;

    CHECK(trace.quads[0].steps[0].r1 == r1_1);
    CHECK(trace.quads[0].steps[0].r2 == r2_1);
    CHECK(trace.quads[0].steps[0].f == f1);
    CHECK(trace.quads[0].steps[0].dropped == trace.initial_lfsr[0]);
}

TEST_CASE("expanded key padding")
{
    std::mt19937 rng(42);
    const auto key16 = random_bytes(rng, 16);
    const TraceRecord t16 = emit_trace(key16, random_bytes(rng, 16));
    for (int i = 0; i < 16; ++i)
        CHECK(t16.expanded_key[std::size_t(i)] == key16[std::size_t(i)]);
    CHECK(t16.expanded_key[16] == 0x01);
    for (int i = 17; i < 32; ++i)
        CHECK(t16.expanded_key[std::size_t(i)] == 0);

    const auto key32 = random_bytes(rng, 32);
    const TraceRecord t32 = emit_trace(key32, random_bytes(rng, 16));
    for (int i = 0; i < 32; ++i)
        CHECK(t32.expanded_key[std::size_t(i)] == key32[std::size_t(i)]);
}

TEST_CASE("format_trace carries the headline fields")
{
    const auto key = from_hex("00112233445566778899aabbccddeeff");
    const auto iv = from_hex("8899aabbccddeeff0011223344556677");
    const std::string text = format_trace(emit_trace(key, iv));

    CHECK(text.find("key = 00112233445566778899aabbccddeeff") != std::string::npos);
    CHECK(text.find("subkey 24 = ") != std::string::npos);
    CHECK(text.find("iv words = ") != std::string::npos);
    CHECK(text.find("initial fsm state: r1 = 9ab17002") != std::string::npos);
    CHECK(text.find("total stream = " + builtin_kat()[1].stream_hex)
          != std::string::npos);
}

TEST_CASE("kat write/read round trip")
{
    std::mt19937 rng(43);
    std::vector<KatEntry> entries;
    for (int i = 0; i < 5; ++i)
        entries.push_back(
            make_kat_entry(random_bytes(rng, 16), random_bytes(rng, 16)));

    std::ostringstream sink;
    write_kat(entries, sink);
    const std::string once = sink.str();

    std::ostringstream sink2;
    write_kat(entries, sink2);
    CHECK(once == sink2.str()); // byte-stable

    std::istringstream source(once);
    CHECK(read_kat(source) == entries);
}

TEST_CASE("kat parse edge cases")
{
    std::istringstream empty("");
    CHECK(read_kat(empty).empty());

    std::istringstream blank("\n\n\n");
    CHECK(read_kat(blank).empty());

    // stream shortened to 318 digits: error names line 3
    const std::string bad_stream = "KEY=00\nIV=11\nSTREAM=" +
        std::string(318, 'a') + "\n";
    std::istringstream bad(bad_stream);
    try {
        (void)read_kat(bad);
        FAIL("expected KatParseError");
    } catch (const KatParseError& e) {
        CHECK(e.line == 3);
    }

    std::istringstream odd("KEY=0\nIV=11\nSTREAM=" + std::string(320, 'a')
                           + "\n");
    CHECK_THROWS_AS((void)read_kat(odd), KatParseError);

    std::istringstream truncated("KEY=00\nIV=11\n");
    CHECK_THROWS_AS((void)read_kat(truncated), KatParseError);

    std::istringstream misordered("IV=11\nKEY=00\nSTREAM="
                                  + std::string(320, 'a') + "\n");
    CHECK_THROWS_AS((void)read_kat(misordered), KatParseError);
}

TEST_CASE("verify_kat passes fresh entries and flags corruption")
{
    std::mt19937 rng(44);
    std::vector<KatEntry> entries;
    for (int i = 0; i < 4; ++i)
        entries.push_back(
            make_kat_entry(random_bytes(rng, 16), random_bytes(rng, 16)));

    CHECK(verify_kat(entries).all_pass);

    // flip one hex digit in entry 2
    auto corrupted = entries;
    char& digit = corrupted[2].stream_hex[17];
    digit = digit == '0' ? '1' : '0';
    const KatReport report = verify_kat(corrupted);
    CHECK_FALSE(report.all_pass);
    CHECK(report.items[0].pass);
    CHECK(report.items[1].pass);
    CHECK_FALSE(report.items[2].pass);
    CHECK(report.items[3].pass);
}

TEST_CASE("builtin vectors verify")
{
    CHECK(verify_kat(builtin_kat()).all_pass);
}
