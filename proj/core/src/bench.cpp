#include "sosemanuk/bench.hpp"

#include <chrono>
#include <cstdio>
#include <thread>
#include <vector>

#include "sosemanuk/cipher.hpp"
#include "sosemanuk/kat.hpp"

namespace sosemanuk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::uint8_t> bench_key()
{
    std::vector<std::uint8_t> key(16);
    for (int i = 0; i < 16; ++i)
        key[i] = std::uint8_t(0x35 + 7 * i);
    return key;
}

std::array<std::uint8_t, 16> nth_iv(std::uint64_t n)
{
    std::array<std::uint8_t, 16> iv{};
    for (int i = 0; i < 8; ++i)
        iv[i] = std::uint8_t(n >> (8 * i));
    return iv;
}

std::uint32_t fold(const std::vector<std::uint8_t>& buf)
{
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i + 3 < buf.size(); i += 4)
        acc ^= std::uint32_t(buf[i]) | std::uint32_t(buf[i + 1]) << 8
            | std::uint32_t(buf[i + 2]) << 16 | std::uint32_t(buf[i + 3]) << 24;
    return acc;
}

double long_stream_rate(const CipherKey& key, Backend backend, double seconds,
                        std::uint32_t& checksum)
{
    constexpr std::size_t kChunk = 4096;
    std::vector<std::uint8_t> buf(kChunk, 0xA5);
    Cipher cipher(key, nth_iv(1), backend);

    // warm up one chunk outside the timed region
    cipher.process(buf, buf);

    std::uint64_t bytes = 0;
    const auto start = Clock::now();
    double elapsed = 0.0;
    do {
        for (int i = 0; i < 64; ++i)
            cipher.process(buf, buf);
        bytes += 64 * kChunk;
        elapsed = seconds_since(start);
    } while (elapsed < seconds);
    checksum ^= fold(buf);
    return double(bytes) / elapsed;
}

double packet_rate(const CipherKey& key, std::size_t packet_size,
                   double seconds, std::uint64_t& packets,
                   std::uint32_t& checksum)
{
    std::vector<std::uint8_t> buf(packet_size, 0x5A);
    std::uint64_t n = 0;
    const auto start = Clock::now();
    double elapsed = 0.0;
    do {
        for (int i = 0; i < 32; ++i) {
            Cipher cipher(key, nth_iv(++n));
            cipher.process(buf, buf);
        }
        elapsed = seconds_since(start);
    } while (elapsed < seconds);
    packets = n;
    checksum ^= fold(buf);
    return double(n) * double(packet_size) / elapsed;
}

double agility_rate(const CipherKey& key, std::size_t memory_bytes,
                    double seconds, std::uint32_t& checksum)
{
    constexpr std::size_t kBlock = 256;
    const std::size_t sessions =
        std::max<std::size_t>(1, memory_bytes / sizeof(Cipher));
    std::vector<Cipher> pool;
    pool.reserve(sessions);
    for (std::size_t i = 0; i < sessions; ++i)
        pool.emplace_back(key, nth_iv(i));

    std::vector<std::uint8_t> buf(kBlock, 0x3C);
    std::uint64_t bytes = 0;
    std::size_t next = 0;
    const auto start = Clock::now();
    double elapsed = 0.0;
    do {
        for (int i = 0; i < 64; ++i) {
            pool[next].process(buf, buf);
            next = (next + 1) % sessions;
        }
        bytes += 64 * kBlock;
        elapsed = seconds_since(start);
    } while (elapsed < seconds);
    checksum ^= fold(buf);
    return double(bytes) / elapsed;
}

double key_setup_seconds(double seconds, std::uint32_t& checksum)
{
    auto key = bench_key();
    std::uint64_t n = 0;
    const auto start = Clock::now();
    double elapsed = 0.0;
    do {
        for (int i = 0; i < 256; ++i) {
            key[0] = std::uint8_t(n + i);
            const CipherKey ck(key);
            checksum ^= ck.schedule().subkeys[0].y0;
        }
        n += 256;
        elapsed = seconds_since(start);
    } while (elapsed < seconds);
    return elapsed / double(n);
}

double iv_setup_seconds(const CipherKey& key, double seconds,
                        std::uint32_t& checksum)
{
    std::uint64_t n = 0;
    const auto start = Clock::now();
    double elapsed = 0.0;
    do {
        for (int i = 0; i < 256; ++i) {
            Cipher cipher(key, nth_iv(n + i));
            checksum ^= cipher.core().lfsr.cells[0];
        }
        n += 256;
        elapsed = seconds_since(start);
    } while (elapsed < seconds);
    return elapsed / double(n);
}

double threaded_long_stream_rate(const CipherKey& key, unsigned threads,
                                 double seconds)
{
    std::vector<std::uint64_t> bytes(threads, 0);
    std::vector<std::thread> pool;
    const auto start = Clock::now();
    for (unsigned ti = 0; ti < threads; ++ti) {
        pool.emplace_back([&, ti] {
            constexpr std::size_t kChunk = 4096;
            std::vector<std::uint8_t> buf(kChunk, 0x11);
            Cipher cipher(key, nth_iv(1000 + ti));
            while (seconds_since(start) < seconds) {
                for (int i = 0; i < 64; ++i)
                    cipher.process(buf, buf);
                bytes[ti] += 64 * kChunk;
            }
        });
    }
    for (auto& t : pool)
        t.join();
    const double elapsed = seconds_since(start);
    std::uint64_t total = 0;
    for (auto b : bytes)
        total += b;
    return double(total) / elapsed;
}

bool builtin_kat_passes()
{
    return verify_kat(builtin_kat()).all_pass;
}

} // namespace

BenchReport run_bench(const BenchConfig& config)
{
    BenchReport report;
    report.cpu_ghz = config.cpu_ghz;
    report.threads = config.threads;
    const double secs = config.seconds_per_workload;

    report.kat_before_ok = builtin_kat_passes();

    const CipherKey key(bench_key());

    report.long_stream_rate =
        long_stream_rate(key, Backend::unrolled, secs, report.checksum);
    if (config.compare_backends)
        report.stepwise_long_stream_rate =
            long_stream_rate(key, Backend::stepwise, secs, report.checksum);

    const auto before = call_counters();
    for (std::size_t size : {std::size_t(40), std::size_t(576),
                             std::size_t(1500)}) {
        std::uint64_t packets = 0;
        report.packet_rates[size] =
            packet_rate(key, size, secs / 3.0, packets, report.checksum);
        report.packet_count += packets;
    }
    const auto after = call_counters();
    report.packet_serpent24_runs = after.serpent24_runs - before.serpent24_runs;
    report.packet_key_schedule_runs =
        after.key_schedule_runs - before.key_schedule_runs;

    report.agility_rate = agility_rate(key, config.session_memory_bytes, secs,
                                       report.checksum);
    report.key_setup_seconds = key_setup_seconds(secs / 4.0, report.checksum);
    report.iv_setup_seconds =
        iv_setup_seconds(key, secs / 4.0, report.checksum);

    if (config.threads > 1)
        report.threaded_long_stream_rate =
            threaded_long_stream_rate(key, config.threads, secs);

    report.kat_after_ok = builtin_kat_passes();
    return report;
}

double cycles_per_byte(double rate_bytes_per_second, double cpu_ghz)
{
    if (rate_bytes_per_second <= 0.0 || cpu_ghz <= 0.0)
        return 0.0;
    return cpu_ghz * 1e9 / rate_bytes_per_second;
}

namespace {

std::string rate_cell(double rate, double ghz)
{
    char buf[64];
    if (ghz > 0.0)
        std::snprintf(buf, sizeof buf, "%10.2f MB/s  %6.2f c/b", rate / 1e6,
                      cycles_per_byte(rate, ghz));
    else
        std::snprintf(buf, sizeof buf, "%10.2f MB/s", rate / 1e6);
    return buf;
}

} // namespace

std::string format_bench_table(const BenchReport& r)
{
    std::string out;
    char line[128];

    out += "workload                 rate\n";
    out += "-----------------------  ----------------------------\n";
    std::snprintf(line, sizeof line, "%-23s  %s\n", "long stream (4 KB)",
                  rate_cell(r.long_stream_rate, r.cpu_ghz).c_str());
    out += line;
    for (const auto& [size, rate] : r.packet_rates) {
        char name[32];
        std::snprintf(name, sizeof name, "packets (%zu B + IV)", size);
        std::snprintf(line, sizeof line, "%-23s  %s\n", name,
                      rate_cell(rate, r.cpu_ghz).c_str());
        out += line;
    }
    std::snprintf(line, sizeof line, "%-23s  %s\n", "agility (256 B hops)",
                  rate_cell(r.agility_rate, r.cpu_ghz).c_str());
    out += line;
    if (r.stepwise_long_stream_rate > 0.0) {
        std::snprintf(line, sizeof line, "%-23s  %s\n", "stepwise long stream",
                      rate_cell(r.stepwise_long_stream_rate, r.cpu_ghz).c_str());
        out += line;
        std::snprintf(line, sizeof line, "%-23s  %10.2fx\n",
                      "unrolled speedup",
                      r.long_stream_rate / r.stepwise_long_stream_rate);
        out += line;
    }
    if (r.threaded_long_stream_rate > 0.0) {
        char name[32];
        std::snprintf(name, sizeof name, "long stream x%u threads", r.threads);
        std::snprintf(line, sizeof line, "%-23s  %s\n", name,
                      rate_cell(r.threaded_long_stream_rate, r.cpu_ghz).c_str());
        out += line;
    }

    std::snprintf(line, sizeof line, "%-23s  %10.1f ns\n", "key setup",
                  r.key_setup_seconds * 1e9);
    out += line;
    std::snprintf(line, sizeof line, "%-23s  %10.1f ns\n", "iv setup",
                  r.iv_setup_seconds * 1e9);
    out += line;

    std::snprintf(line, sizeof line,
                  "packet audit: %llu packets, %llu iv setups, %llu key schedules\n",
                  (unsigned long long)r.packet_count,
                  (unsigned long long)r.packet_serpent24_runs,
                  (unsigned long long)r.packet_key_schedule_runs);
    out += line;
    std::snprintf(line, sizeof line, "kat self-check: before=%s after=%s\n",
                  r.kat_before_ok ? "ok" : "FAIL",
                  r.kat_after_ok ? "ok" : "FAIL");
    out += line;
    return out;
}

std::string format_bench_kv(const BenchReport& r)
{
    std::string out;
    char line[128];
    std::snprintf(line, sizeof line, "long_stream_rate=%.0f\n",
                  r.long_stream_rate);
    out += line;
    for (const auto& [size, rate] : r.packet_rates) {
        std::snprintf(line, sizeof line, "packet_rate_%zu=%.0f\n", size, rate);
        out += line;
    }
    std::snprintf(line, sizeof line, "agility_rate=%.0f\n", r.agility_rate);
    out += line;
    std::snprintf(line, sizeof line, "key_setup_seconds=%.9g\n",
                  r.key_setup_seconds);
    out += line;
    std::snprintf(line, sizeof line, "iv_setup_seconds=%.9g\n",
                  r.iv_setup_seconds);
    out += line;
    std::snprintf(line, sizeof line, "stepwise_long_stream_rate=%.0f\n",
                  r.stepwise_long_stream_rate);
    out += line;
    std::snprintf(line, sizeof line, "threaded_long_stream_rate=%.0f\n",
                  r.threaded_long_stream_rate);
    out += line;
    std::snprintf(line, sizeof line, "packet_count=%llu\n",
                  (unsigned long long)r.packet_count);
    out += line;
    std::snprintf(line, sizeof line, "packet_serpent24_runs=%llu\n",
                  (unsigned long long)r.packet_serpent24_runs);
    out += line;
    std::snprintf(line, sizeof line, "packet_key_schedule_runs=%llu\n",
                  (unsigned long long)r.packet_key_schedule_runs);
    out += line;
    std::snprintf(line, sizeof line, "kat_before_ok=%d\n",
                  int(r.kat_before_ok));
    out += line;
    std::snprintf(line, sizeof line, "kat_after_ok=%d\n", int(r.kat_after_ok));
    out += line;
    if (r.cpu_ghz > 0.0) {
        std::snprintf(line, sizeof line, "long_stream_cycles_per_byte=%.3f\n",
                      cycles_per_byte(r.long_stream_rate, r.cpu_ghz));
        out += line;
    }
    return out;
}

} // namespace sosemanuk
