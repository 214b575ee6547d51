#ifndef SOSEMANUK_KEYSTREAM_HPP
#define SOSEMANUK_KEYSTREAM_HPP

#include <array>
#include <cstdint>

#include "sosemanuk/gf_arith.hpp"
#include "sosemanuk/serpent.hpp"
#include "sosemanuk/types.hpp"

namespace sosemanuk {

/// Ten field elements, logically s_{t+1} .. s_{t+10}; cells[0] is the
/// oldest (next to be dropped).
struct LfsrState {
    std::array<Word, 10> cells{};

    friend bool operator==(const LfsrState&, const LfsrState&) = default;
};

/// 64 bits of FSM memory.
struct FsmState {
    Word r1 = 0;
    Word r2 = 0;

    friend bool operator==(const FsmState&, const FsmState&) = default;
};

/// Full generator state. step_index counts completed steps since
/// initialization; keystream words exist only in groups of four, so
/// step_index is always a multiple of 4 between calls.
struct CoreState {
    LfsrState lfsr;
    FsmState fsm;
    std::uint64_t step_index = 0;

    friend bool operator==(const CoreState&, const CoreState&) = default;
};

/// (M * z mod 2^32) <<< 7 with M = 0x54655307.
inline Word trans(Word z)
{
    return rotl(z * 0x54655307u, 7);
}

/// Branch-free select: x if c has least significant bit 0, else y.
inline Word mux(Word c, Word x, Word y)
{
    const Word m = Word(0) - (c & 1);
    return (x & ~m) | (y & m);
}

/// One FSM transition. Inputs are the LFSR cells at the offsets of
/// s_{t+1}, s_{t+8}, s_{t+9}; updates fsm in place and returns f_t.
inline Word fsm_step(FsmState& fsm, Word s_t1, Word s_t8, Word s_t9)
{
    const Word chosen = mux(fsm.r1, s_t1, s_t1 ^ s_t8);
    const Word r1_new = fsm.r2 + chosen;
    const Word r2_new = trans(fsm.r1);
    fsm.r1 = r1_new;
    fsm.r2 = r2_new;
    return (s_t9 + r1_new) ^ r2_new;
}

/// One physically shifting LFSR step: computes
/// s_{t+10} = s_{t+9} ^ alpha^-1 s_{t+3} ^ alpha s_t, shifts, and
/// returns the dropped s_t.
Word lfsr_step(LfsrState& lfsr, const AlphaTables& t);

/// Maps the Serpent24 round taps onto the initial generator state.
CoreState init_from_taps(const SerpentTaps& taps);

/// Four consecutive steps followed by the Serpent1 output
/// transformation; returns (z_{t+1} .. z_{t+4}) in output order.
std::array<Word, 4> quad_round(CoreState& state, const AlphaTables& t);

/// Twenty steps (lcm of the group size 4 and the register length 10)
/// with no physical shifting, emitting 80 keystream bytes little-endian.
/// State-equivalent to five quad_round calls.
void run_block20(CoreState& state, const AlphaTables& t, std::uint8_t out[80]);

} // namespace sosemanuk

#endif
