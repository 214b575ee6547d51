#include "sosemanuk/keystream.hpp"

namespace sosemanuk {

namespace {

void store_le(std::uint8_t* p, Word v)
{
    p[0] = std::uint8_t(v);
    p[1] = std::uint8_t(v >> 8);
    p[2] = std::uint8_t(v >> 16);
    p[3] = std::uint8_t(v >> 24);
}

} // namespace

Word lfsr_step(LfsrState& lfsr, const AlphaTables& t)
{
    auto& c = lfsr.cells;
    const Word dropped = c[0];
    const Word fresh = c[9] ^ div_alpha(c[3], t) ^ mul_alpha(c[0], t);
    for (int i = 0; i < 9; ++i)
        c[i] = c[i + 1];
    c[9] = fresh;
    return dropped;
}

CoreState init_from_taps(const SerpentTaps& taps)
{
    CoreState st;
    auto& s = st.lfsr.cells; // s[i] holds s_{i+1}
    s[0] = taps.y24.y3;
    s[1] = taps.y24.y2;
    s[2] = taps.y24.y1;
    s[3] = taps.y24.y0;
    s[4] = taps.y18.y1;
    s[5] = taps.y18.y3;
    s[6] = taps.y12.y3;
    s[7] = taps.y12.y2;
    s[8] = taps.y12.y1;
    s[9] = taps.y12.y0;
    st.fsm.r1 = taps.y18.y0;
    st.fsm.r2 = taps.y18.y2;
    st.step_index = 0;
    return st;
}

std::array<Word, 4> quad_round(CoreState& state, const AlphaTables& t)
{
    Word f[4];
    Word v[4];
    for (int i = 0; i < 4; ++i) {
        const auto& c = state.lfsr.cells;
        f[i] = fsm_step(state.fsm, c[1], c[8], c[9]);
        v[i] = lfsr_step(state.lfsr, t);
    }
    state.step_index += 4;
    const Quartet mixed = serpent1({f[0], f[1], f[2], f[3]});
    return {mixed.y0 ^ v[0], mixed.y1 ^ v[1], mixed.y2 ^ v[2], mixed.y3 ^ v[3]};
}

void run_block20(CoreState& state, const AlphaTables& t, std::uint8_t out[80])
{
    auto& c = state.lfsr.cells;
    Word s0 = c[0], s1 = c[1], s2 = c[2], s3 = c[3], s4 = c[4];
    Word s5 = c[5], s6 = c[6], s7 = c[7], s8 = c[8], s9 = c[9];
    FsmState fsm = state.fsm;

    Word u0, u1, u2, u3;
    Word v0, v1, v2, v3;

    const auto emit = [&](std::uint8_t* p) {
        const Quartet m = serpent1({u0, u1, u2, u3});
        store_le(p, m.y0 ^ v0);
        store_le(p + 4, m.y1 ^ v1);
        store_le(p + 8, m.y2 ^ v2);
        store_le(p + 12, m.y3 ^ v3);
    };
    const auto step1 = [&](Word& a0, Word a1, Word a3, Word a8, Word a9,
                           Word& dropped, Word& f) {
        dropped = a0;
        f = fsm_step(fsm, a1, a8, a9);
        a0 = mul_alpha(a0, t) ^ div_alpha(a3, t) ^ a9;
    };

    step1(s0, s1, s3, s8, s9, v0, u0);
    step1(s1, s2, s4, s9, s0, v1, u1);
    step1(s2, s3, s5, s0, s1, v2, u2);
    step1(s3, s4, s6, s1, s2, v3, u3);
    emit(out);
    step1(s4, s5, s7, s2, s3, v0, u0);
    step1(s5, s6, s8, s3, s4, v1, u1);
    step1(s6, s7, s9, s4, s5, v2, u2);
    step1(s7, s8, s0, s5, s6, v3, u3);
    emit(out + 16);
    step1(s8, s9, s1, s6, s7, v0, u0);
    step1(s9, s0, s2, s7, s8, v1, u1);
    step1(s0, s1, s3, s8, s9, v2, u2);
    step1(s1, s2, s4, s9, s0, v3, u3);
    emit(out + 32);
    step1(s2, s3, s5, s0, s1, v0, u0);
    step1(s3, s4, s6, s1, s2, v1, u1);
    step1(s4, s5, s7, s2, s3, v2, u2);
    step1(s5, s6, s8, s3, s4, v3, u3);
    emit(out + 48);
    step1(s6, s7, s9, s4, s5, v0, u0);
    step1(s7, s8, s0, s5, s6, v1, u1);
    step1(s8, s9, s1, s6, s7, v2, u2);
    step1(s9, s0, s2, s7, s8, v3, u3);
    emit(out + 64);

    // 20 steps = two full rotations; cells land back in order.
    c = {s0, s1, s2, s3, s4, s5, s6, s7, s8, s9};
    state.fsm = fsm;
    state.step_index += 20;
}

} // namespace sosemanuk
