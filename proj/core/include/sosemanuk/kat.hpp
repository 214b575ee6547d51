#ifndef SOSEMANUK_KAT_HPP
#define SOSEMANUK_KAT_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sosemanuk/serpent.hpp"
#include "sosemanuk/types.hpp"

namespace sosemanuk {

/// One detailed step of the generator trace: new FSM state, post-update
/// LFSR with the dropped cell, and the intermediate output f_t.
struct TraceStep {
    Word r1 = 0;
    Word r2 = 0;
    Word dropped = 0;
    std::array<Word, 10> lfsr{};
    Word f = 0;
};

/// Four steps plus the output transformation that consumes them.
struct TraceQuad {
    std::array<TraceStep, 4> steps;
    Quartet serpent1_in;
    Quartet serpent1_out;
    std::array<std::uint8_t, 16> bytes{};
};

/// Every intermediate value of one full 160-byte run: key material,
/// subkeys, IV decoding, initial state, 40 steps in 10 quads.
struct TraceRecord {
    std::vector<std::uint8_t> key;
    std::array<std::uint8_t, 32> expanded_key{};
    std::array<Subkey, 25> subkeys;
    std::array<std::uint8_t, 16> iv{};
    Quartet iv_words;
    std::array<Word, 10> initial_lfsr{};
    Word initial_r1 = 0;
    Word initial_r2 = 0;
    std::array<TraceQuad, 10> quads;
    std::array<std::uint8_t, 160> stream{};
};

/// Runs the full pipeline with instrumentation. Propagates invalid
/// key/IV errors.
TraceRecord emit_trace(std::span<const std::uint8_t> key,
                       std::span<const std::uint8_t> iv);

/// Renders a TraceRecord as structured plain text (lowercase hex).
std::string format_trace(const TraceRecord& trace);

/// One known-answer-test record: hex key, hex IV, and the first 160
/// keystream bytes (320 hex digits).
struct KatEntry {
    std::string key_hex;
    std::string iv_hex;
    std::string stream_hex;

    friend bool operator==(const KatEntry&, const KatEntry&) = default;
};

struct KatParseError : std::runtime_error {
    KatParseError(std::size_t line, const std::string& what);
    std::size_t line;
};

/// Line-oriented text format: KEY=<hex>, IV=<hex>, STREAM=<hex>,
/// records separated by blank lines. Writing twice yields identical
/// bytes; read is the exact inverse of write.
void write_kat(const std::vector<KatEntry>& entries, std::ostream& sink);
std::vector<KatEntry> read_kat(std::istream& source);

struct KatReport {
    struct Item {
        std::size_t index;
        bool pass;
    };
    std::vector<Item> items;
    bool all_pass = true;
};

/// Regenerates each entry's stream and compares.
KatReport verify_kat(const std::vector<KatEntry>& entries);

/// Computes a fresh KAT entry for one (key, IV).
KatEntry make_kat_entry(std::span<const std::uint8_t> key,
                        std::span<const std::uint8_t> iv);

/// Well-known vectors carried for self-checks.
const std::vector<KatEntry>& builtin_kat();

} // namespace sosemanuk

#endif
