#ifndef SOSEMANUK_BENCH_HPP
#define SOSEMANUK_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

namespace sosemanuk {

/// Workload knobs. Defaults mirror the measurement style this harness
/// is modeled on: 4 KB chunks for long streams, packets of 40/576/1500
/// bytes each paying one IV setup, and an agility test that fills a
/// memory budget with sessions and hops between them in 256-byte blocks.
struct BenchConfig {
    double seconds_per_workload = 2.0;
    std::size_t session_memory_bytes = 16u << 20;
    double cpu_ghz = 0.0;      // 0 = no cycles/byte derivation
    bool compare_backends = true;
    unsigned threads = 1;      // >1 adds a shared-key multi-thread run
};

struct BenchReport {
    double long_stream_rate = 0.0; // bytes/second, unrolled backend
    std::map<std::size_t, double> packet_rates; // {40, 576, 1500}
    double agility_rate = 0.0;
    double key_setup_seconds = 0.0;
    double iv_setup_seconds = 0.0;

    double stepwise_long_stream_rate = 0.0; // 0 when comparison skipped
    double threaded_long_stream_rate = 0.0; // 0 when single-threaded
    unsigned threads = 1;

    // Counter audit of the packet workload: one IV setup per packet,
    // no key schedule.
    std::uint64_t packet_count = 0;
    std::uint64_t packet_serpent24_runs = 0;
    std::uint64_t packet_key_schedule_runs = 0;

    // Keystream correctness checked against the built-in vectors
    // before and after the timed workloads.
    bool kat_before_ok = false;
    bool kat_after_ok = false;

    double cpu_ghz = 0.0;
    std::uint32_t checksum = 0; // folded workload output, keeps work live
};

BenchReport run_bench(const BenchConfig& config);

/// Cycles per byte for a measured rate, from the frequency hint.
double cycles_per_byte(double rate_bytes_per_second, double cpu_ghz);

/// Aligned human-readable table.
std::string format_bench_table(const BenchReport& report);

/// Line-oriented key=value pairs for scripting.
std::string format_bench_kv(const BenchReport& report);

} // namespace sosemanuk

#endif
