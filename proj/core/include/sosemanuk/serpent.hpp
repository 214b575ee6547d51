#ifndef SOSEMANUK_SERPENT_HPP
#define SOSEMANUK_SERPENT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "sosemanuk/sbox_circuits.hpp"
#include "sosemanuk/types.hpp"

namespace sosemanuk {

/// One 128-bit round key, as a bitslice quartet (k3, k2, k1, k0).
using Subkey = Quartet;

/// The first 25 subkeys of the SERPENT key schedule (100 words).
struct KeySchedule {
    std::array<Subkey, 25> subkeys;
};

/// Intermediate outputs of Serpent24: after the linear transformation of
/// rounds 12 and 18, and after the 25th-subkey addition of round 24.
struct SerpentTaps {
    Quartet y12;
    Quartet y18;
    Quartet y24;
};

/// Applies S-box `index` (0..7) to all 32 nibble slices of `q`.
/// Realized as word-wide boolean circuits; the per-nibble permutation
/// tables define the semantics. Throws std::domain_error for a bad index.
Quartet sbox_bitslice(int index, Quartet q);

/// The SERPENT linear transformation (rotate/shift/XOR network).
Quartet linear_transform(Quartet q);

/// Runs the SERPENT key schedule and keeps the first 25 subkeys.
/// Keys shorter than 256 bits are padded with a single 1 bit then zeros.
/// Accepts 16..32 whole bytes; throws InvalidKeyLength otherwise.
KeySchedule serpent_key_schedule(std::span<const std::uint8_t> key);

/// Encrypts one block with SERPENT reduced to 24 rounds (the 24th round
/// keeps its linear transformation and adds the 25th subkey), returning
/// the three tapped round outputs.
SerpentTaps serpent24_encrypt_taps(const KeySchedule& ks, Quartet block);

/// One S-box layer (S2) in bitslice mode, without key addition or the
/// linear transformation.
inline Quartet serpent1(Quartet q)
{
    return detail::s2(q.y0, q.y1, q.y2, q.y3);
}

/// Cumulative invocation counters, for asserting the two-phase
/// initialization split (key schedule vs. per-IV Serpent24 runs).
struct CallCounters {
    std::uint64_t key_schedule_runs = 0;
    std::uint64_t serpent24_runs = 0;
};

CallCounters call_counters();
void reset_call_counters();

} // namespace sosemanuk

#endif
