#include <benchmark/benchmark.h>

#include <vector>

#include "sosemanuk/bench.hpp"
#include "sosemanuk/cipher.hpp"
#include "sosemanuk/gf_arith.hpp"
#include "sosemanuk/serpent.hpp"

namespace {

using namespace sosemanuk;

std::vector<std::uint8_t> fixed_key()
{
    std::vector<std::uint8_t> key(16);
    for (int i = 0; i < 16; ++i)
        key[i] = std::uint8_t(0x11 * i + 3);
    return key;
}

const std::vector<std::uint8_t> kIv(16, 0x24);

void BM_KeystreamUnrolled(benchmark::State& state)
{
    const CipherKey key(fixed_key());
    Cipher cipher(key, kIv, Backend::unrolled);
    std::vector<std::uint8_t> buf(std::size_t(state.range(0)));
    for (auto _ : state) {
        cipher.keystream(std::span(buf));
        benchmark::DoNotOptimize(buf.data());
    }
    state.SetBytesProcessed(std::int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_KeystreamUnrolled)->Arg(4096)->Arg(65536);

void BM_KeystreamStepwise(benchmark::State& state)
{
    const CipherKey key(fixed_key());
    Cipher cipher(key, kIv, Backend::stepwise);
    std::vector<std::uint8_t> buf(std::size_t(state.range(0)));
    for (auto _ : state) {
        cipher.keystream(std::span(buf));
        benchmark::DoNotOptimize(buf.data());
    }
    state.SetBytesProcessed(std::int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_KeystreamStepwise)->Arg(4096);

void BM_KeySetup(benchmark::State& state)
{
    auto key = fixed_key();
    for (auto _ : state) {
        key[0] = std::uint8_t(key[0] + 1);
        const CipherKey ck(key);
        benchmark::DoNotOptimize(ck.schedule().subkeys[0].y0);
    }
}
BENCHMARK(BM_KeySetup);

void BM_IvSetup(benchmark::State& state)
{
    const CipherKey key(fixed_key());
    auto iv = kIv;
    for (auto _ : state) {
        iv[0] = std::uint8_t(iv[0] + 1);
        Cipher cipher(key, iv);
        benchmark::DoNotOptimize(cipher.core().lfsr.cells[0]);
    }
}
BENCHMARK(BM_IvSetup);

void BM_Serpent24(benchmark::State& state)
{
    const KeySchedule ks = serpent_key_schedule(fixed_key());
    Quartet block{1, 2, 3, 4};
    for (auto _ : state) {
        const SerpentTaps taps = serpent24_encrypt_taps(ks, block);
        block = taps.y24;
        benchmark::DoNotOptimize(block.y0);
    }
}
BENCHMARK(BM_Serpent24);

void BM_BuildAlphaTables(benchmark::State& state)
{
    for (auto _ : state) {
        const AlphaTables t = build_alpha_tables();
        benchmark::DoNotOptimize(t.mul_mask[1]);
    }
}
BENCHMARK(BM_BuildAlphaTables);

} // namespace

BENCHMARK_MAIN();
