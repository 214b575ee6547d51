#include "sosemanuk/kat.hpp"

#include <cstdio>
#include <istream>
#include <ostream>

#include "sosemanuk/cipher.hpp"
#include "sosemanuk/hex.hpp"
#include "sosemanuk/keystream.hpp"

namespace sosemanuk {

namespace {

Word load_le(const std::uint8_t* p)
{
    return Word(p[0]) | Word(p[1]) << 8 | Word(p[2]) << 16 | Word(p[3]) << 24;
}

void store_le(std::uint8_t* p, Word v)
{
    p[0] = std::uint8_t(v);
    p[1] = std::uint8_t(v >> 8);
    p[2] = std::uint8_t(v >> 16);
    p[3] = std::uint8_t(v >> 24);
}

std::string word_hex(Word w)
{
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", w);
    return buf;
}

} // namespace

TraceRecord emit_trace(std::span<const std::uint8_t> key,
                       std::span<const std::uint8_t> iv)
{
    if (iv.size() != 16)
        throw InvalidIvLength("emit_trace: IV must be exactly 16 bytes");

    TraceRecord tr;
    tr.key.assign(key.begin(), key.end());

    const KeySchedule ks = serpent_key_schedule(key);
    tr.subkeys = ks.subkeys;
    for (std::size_t i = 0; i < key.size(); ++i)
        tr.expanded_key[i] = key[i];
    if (key.size() < 32)
        tr.expanded_key[key.size()] = 0x01;

    for (int i = 0; i < 16; ++i)
        tr.iv[i] = iv[i];
    tr.iv_words = {load_le(iv.data()), load_le(iv.data() + 4),
                   load_le(iv.data() + 8), load_le(iv.data() + 12)};

    CoreState st = init_from_taps(serpent24_encrypt_taps(ks, tr.iv_words));
    tr.initial_lfsr = st.lfsr.cells;
    tr.initial_r1 = st.fsm.r1;
    tr.initial_r2 = st.fsm.r2;

    const AlphaTables& tables = alpha_tables();
    for (int q = 0; q < 10; ++q) {
        TraceQuad& quad = tr.quads[q];
        Word f[4];
        Word v[4];
        for (int i = 0; i < 4; ++i) {
            const auto& c = st.lfsr.cells;
            f[i] = fsm_step(st.fsm, c[1], c[8], c[9]);
            v[i] = lfsr_step(st.lfsr, tables);
            TraceStep& step = quad.steps[i];
            step.r1 = st.fsm.r1;
            step.r2 = st.fsm.r2;
            step.dropped = v[i];
            step.lfsr = st.lfsr.cells;
            step.f = f[i];
        }
        st.step_index += 4;
        quad.serpent1_in = {f[0], f[1], f[2], f[3]};
        quad.serpent1_out = serpent1(quad.serpent1_in);
        const Quartet& m = quad.serpent1_out;
        store_le(quad.bytes.data(), m.y0 ^ v[0]);
        store_le(quad.bytes.data() + 4, m.y1 ^ v[1]);
        store_le(quad.bytes.data() + 8, m.y2 ^ v[2]);
        store_le(quad.bytes.data() + 12, m.y3 ^ v[3]);
        for (int i = 0; i < 16; ++i)
            tr.stream[16 * q + i] = quad.bytes[i];
    }
    return tr;
}

std::string format_trace(const TraceRecord& tr)
{
    std::string out;
    out += "key = " + to_hex(tr.key) + "\n";

    // The padded key read as one 256-bit little-endian number, most
    // significant 32-bit group first.
    out += "expanded key =";
    for (int i = 7; i >= 0; --i)
        out += " " + word_hex(load_le(tr.expanded_key.data() + 4 * i));
    out += "\n";

    for (int i = 0; i < 25; ++i) {
        const Subkey& k = tr.subkeys[i];
        char head[16];
        std::snprintf(head, sizeof head, "subkey %2d = ", i);
        out += head;
        out += word_hex(k.y3) + " " + word_hex(k.y2) + " " + word_hex(k.y1)
            + " " + word_hex(k.y0) + "\n";
    }

    out += "iv = " + to_hex(tr.iv) + "\n";
    out += "iv words = " + word_hex(tr.iv_words.y3) + " "
        + word_hex(tr.iv_words.y2) + " " + word_hex(tr.iv_words.y1) + " "
        + word_hex(tr.iv_words.y0) + "\n";

    out += "initial lfsr state:\n";
    for (int i = 0; i < 10; ++i) {
        char head[16];
        std::snprintf(head, sizeof head, "  s%-2d = ", i + 1);
        out += head;
        out += word_hex(tr.initial_lfsr[i]) + "\n";
    }
    out += "initial fsm state: r1 = " + word_hex(tr.initial_r1)
        + "  r2 = " + word_hex(tr.initial_r2) + "\n";

    for (int q = 0; q < 10; ++q) {
        const TraceQuad& quad = tr.quads[q];
        for (int i = 0; i < 4; ++i) {
            const TraceStep& st = quad.steps[i];
            out += "new fsm state: r1 = " + word_hex(st.r1)
                + "  r2 = " + word_hex(st.r2) + "\n";
            out += "new lfsr state:\n";
            out += "  dropped = " + word_hex(st.dropped) + "\n";
            for (int j = 0; j < 10; ++j)
                out += "  " + word_hex(st.lfsr[j]) + "\n";
            out += "f = " + word_hex(st.f) + "\n";
        }
        const Quartet& in = quad.serpent1_in;
        const Quartet& so = quad.serpent1_out;
        out += "serpent1 input:  " + word_hex(in.y3) + " " + word_hex(in.y2)
            + " " + word_hex(in.y1) + " " + word_hex(in.y0) + "\n";
        out += "serpent1 output: " + word_hex(so.y3) + " " + word_hex(so.y2)
            + " " + word_hex(so.y1) + " " + word_hex(so.y0) + "\n";
        out += "stream output: " + to_hex(quad.bytes) + "\n";
    }

    out += "total stream = " + to_hex(tr.stream) + "\n";
    return out;
}

KatParseError::KatParseError(std::size_t line_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
      line(line_)
{
}

void write_kat(const std::vector<KatEntry>& entries, std::ostream& sink)
{
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0)
            sink << "\n";
        sink << "KEY=" << entries[i].key_hex << "\n";
        sink << "IV=" << entries[i].iv_hex << "\n";
        sink << "STREAM=" << entries[i].stream_hex << "\n";
    }
}

namespace {

bool is_hex_string(std::string_view s)
{
    if (s.size() % 2 != 0)
        return false;
    for (char c : s)
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')
              || (c >= 'A' && c <= 'F')))
            return false;
    return true;
}

} // namespace

std::vector<KatEntry> read_kat(std::istream& source)
{
    std::vector<KatEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    int field = 0; // next expected: 0 = KEY, 1 = IV, 2 = STREAM
    KatEntry current;

    while (std::getline(source, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty()) {
            if (field != 0)
                throw KatParseError(lineno, "incomplete record");
            continue;
        }
        static constexpr std::string_view prefixes[] = {"KEY=", "IV=",
                                                        "STREAM="};
        const std::string_view want = prefixes[field];
        if (!line.starts_with(want))
            throw KatParseError(lineno,
                                "expected " + std::string(want) + "<hex>");
        const std::string value = line.substr(want.size());
        if (!is_hex_string(value))
            throw KatParseError(lineno, "malformed hex value");
        switch (field) {
        case 0:
            current.key_hex = value;
            break;
        case 1:
            current.iv_hex = value;
            break;
        case 2:
            if (value.size() != 320)
                throw KatParseError(lineno,
                                    "stream must be 320 hex digits, got "
                                        + std::to_string(value.size()));
            current.stream_hex = value;
            entries.push_back(current);
            current = {};
            break;
        }
        field = (field + 1) % 3;
    }
    if (field != 0)
        throw KatParseError(lineno, "truncated record at end of input");
    return entries;
}

KatReport verify_kat(const std::vector<KatEntry>& entries)
{
    KatReport report;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        bool pass = false;
        try {
            const auto key = from_hex(entries[i].key_hex);
            const auto iv = from_hex(entries[i].iv_hex);
            const KatEntry fresh = make_kat_entry(key, iv);
            pass = fresh.stream_hex == entries[i].stream_hex;
        } catch (const std::exception&) {
            pass = false;
        }
        report.items.push_back({i, pass});
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

KatEntry make_kat_entry(std::span<const std::uint8_t> key,
                        std::span<const std::uint8_t> iv)
{
    const CipherKey ck(key);
    Cipher cipher(ck, iv);
    const auto stream = cipher.keystream(std::size_t(160));
    return {to_hex(key), to_hex(iv), to_hex(stream)};
}

const std::vector<KatEntry>& builtin_kat()
{
    static const std::vector<KatEntry> entries = {
        {"00000000000000000000000000000000",
         "00000000000000000000000000000000",
         "761c68bc2eb1912a8edc71807c4f291f80755f3555016bd7fc12ea40a0a1d8aa"
         "bf3ae8f83134157938ea22c407fa7e29e346a018e2f047c8079213791a1d9556"
         "7d62d28cd89b3d29a2d4b97e6ff37499b85ba7fd2d1c0e46009e46d1b4daa807"
         "d60ec4d79b46ea58ae9eeaf3fe99c326f591000236afb34af2435fd5bcb37cc8"
         "0c7dd1868fb699afad02da7bd3852eb48ce14e253c1248028a468ab4eb55477b"},
        {"00112233445566778899aabbccddeeff",
         "8899aabbccddeeff0011223344556677",
         "fa61dbeb71178131a77c714bd2eabf4e1394207a25698aa1308f2f063a0f7606"
         "04cf67569ba59a3dfad7f00145c78d29c5ffe5f964950486424451952c84039d"
         "234d9c37eecbbca1ebfb0dd16ea1194a6afc1a460e33e33fe8d55c48977079c6"
         "87810d74feddee1b3986218fb1e1c1765e4df64d7f6911c19a270c59c74b2446"
         "1717f86ce3b11808facd4f2e714168da44cf6360d54dda2241bcb79401a4edcc"},
    };
    return entries;
}

} // namespace sosemanuk
