// Command-line front end: keystream generation, encrypt/decrypt, the
// detailed trace, KAT files, and the performance harness.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sosemanuk/bench.hpp"
#include "sosemanuk/cipher.hpp"
#include "sosemanuk/hex.hpp"
#include "sosemanuk/kat.hpp"

namespace {

using Bytes = std::vector<std::uint8_t>;

Bytes read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string& s = buf.str();
    return Bytes(s.begin(), s.end());
}

void write_file(const std::string& path, std::span<const std::uint8_t> data)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              std::streamsize(data.size()));
    if (!out)
        throw std::runtime_error("write failed for " + path);
}

// a key or IV arrives as a hex flag or as a raw-bytes file
struct SecretInput {
    std::string hex;
    std::string file;

    Bytes resolve(const char* what) const
    {
        if (!hex.empty() && !file.empty())
            throw std::runtime_error(std::string(what)
                                     + ": give either hex or a file, not both");
        if (!hex.empty())
            return sosemanuk::from_hex(hex);
        if (!file.empty())
            return read_file(file);
        throw std::runtime_error(std::string(what) + " is required");
    }
};

void add_secret_options(CLI::App* cmd, SecretInput& key, SecretInput& iv)
{
    cmd->add_option("--key", key.hex, "key as hex (16..32 bytes)");
    cmd->add_option("--key-file", key.file, "file holding the raw key bytes");
    cmd->add_option("--iv", iv.hex, "IV as hex (exactly 16 bytes)");
    cmd->add_option("--iv-file", iv.file, "file holding the raw IV bytes");
}

int run(int argc, char** argv)
{
    CLI::App app{"Sosemanuk stream cipher tool"};
    app.require_subcommand(1);

    SecretInput key, iv;

    // keystream
    auto* keystream_cmd =
        app.add_subcommand("keystream", "emit raw keystream bytes");
    std::uint64_t length = 160;
    std::string out_path;
    add_secret_options(keystream_cmd, key, iv);
    keystream_cmd->add_option("--len", length, "byte count (decimal)");
    keystream_cmd->add_option("--out", out_path,
                              "write raw bytes to a file instead of hex "
                              "to stdout");

    // encrypt / decrypt (the same XOR operation)
    std::string in_path;
    auto* encrypt_cmd = app.add_subcommand("encrypt", "XOR a file with the keystream");
    auto* decrypt_cmd = app.add_subcommand("decrypt", "alias of encrypt");
    for (auto* cmd : {encrypt_cmd, decrypt_cmd}) {
        add_secret_options(cmd, key, iv);
        cmd->add_option("--in", in_path, "input file")->required();
        cmd->add_option("--out", out_path, "output file")->required();
    }

    // trace
    auto* trace_cmd =
        app.add_subcommand("trace", "emit the detailed test-vector trace");
    add_secret_options(trace_cmd, key, iv);
    trace_cmd->add_option("--out", out_path, "write the trace to a file");

    // kat-emit
    auto* kat_emit_cmd =
        app.add_subcommand("kat-emit", "write known-answer-test records");
    std::vector<std::string> kat_keys, kat_ivs;
    std::uint64_t random_count = 0, seed = 1;
    kat_emit_cmd->add_option("--key", kat_keys, "key hex (repeatable)");
    kat_emit_cmd->add_option("--iv", kat_ivs, "IV hex (repeatable)");
    kat_emit_cmd->add_option("--random", random_count,
                             "append N seeded random entries");
    kat_emit_cmd->add_option("--seed", seed, "seed for --random");
    kat_emit_cmd->add_option("--out", out_path, "output file (default stdout)");

    // kat-verify
    auto* kat_verify_cmd =
        app.add_subcommand("kat-verify", "check a KAT file against this build");
    kat_verify_cmd->add_option("--in", in_path, "KAT file")->required();

    // bench
    auto* bench_cmd =
        app.add_subcommand("bench", "run the performance workloads");
    sosemanuk::BenchConfig config;
    bool kv_output = false;
    bool no_compare = false;
    bench_cmd->add_option("--seconds", config.seconds_per_workload,
                          "seconds per workload");
    double memory_mb = 16.0;
    bench_cmd->add_option("--session-mb", memory_mb,
                          "memory filled with agility sessions, in MB");
    bench_cmd->add_option("--freq", config.cpu_ghz,
                          "nominal CPU frequency in GHz for cycles/byte");
    bench_cmd->add_option("--threads", config.threads,
                          "extra shared-key multi-thread long-stream run");
    bench_cmd->add_flag("--kv", kv_output, "print key=value lines");
    bench_cmd->add_flag("--no-compare", no_compare,
                        "skip the stepwise-backend comparison");

    CLI11_PARSE(app, argc, argv);

    if (keystream_cmd->parsed()) {
        const sosemanuk::CipherKey ck(key.resolve("--key"));
        sosemanuk::Cipher cipher(ck, iv.resolve("--iv"));
        const auto bytes = cipher.keystream(std::size_t(length));
        if (out_path.empty())
            std::cout << sosemanuk::to_hex(bytes) << "\n";
        else
            write_file(out_path, bytes);
        return 0;
    }

    if (encrypt_cmd->parsed() || decrypt_cmd->parsed()) {
        const sosemanuk::CipherKey ck(key.resolve("--key"));
        sosemanuk::Cipher cipher(ck, iv.resolve("--iv"));
        write_file(out_path, cipher.process(read_file(in_path)));
        return 0;
    }

    if (trace_cmd->parsed()) {
        const auto text = sosemanuk::format_trace(
            sosemanuk::emit_trace(key.resolve("--key"), iv.resolve("--iv")));
        if (out_path.empty()) {
            std::cout << text;
        } else {
            const std::vector<std::uint8_t> bytes(text.begin(), text.end());
            write_file(out_path, bytes);
        }
        return 0;
    }

    if (kat_emit_cmd->parsed()) {
        if (kat_keys.size() != kat_ivs.size())
            throw std::runtime_error("kat-emit: --key and --iv counts differ");
        std::vector<sosemanuk::KatEntry> entries;
        for (std::size_t i = 0; i < kat_keys.size(); ++i)
            entries.push_back(sosemanuk::make_kat_entry(
                sosemanuk::from_hex(kat_keys[i]),
                sosemanuk::from_hex(kat_ivs[i])));
        std::mt19937_64 rng(seed);
        for (std::uint64_t i = 0; i < random_count; ++i) {
            Bytes k(16), v(16);
            for (auto& b : k)
                b = std::uint8_t(rng());
            for (auto& b : v)
                b = std::uint8_t(rng());
            entries.push_back(sosemanuk::make_kat_entry(k, v));
        }
        if (out_path.empty()) {
            sosemanuk::write_kat(entries, std::cout);
        } else {
            std::ofstream out(out_path);
            if (!out)
                throw std::runtime_error("cannot open " + out_path);
            sosemanuk::write_kat(entries, out);
        }
        return 0;
    }

    if (kat_verify_cmd->parsed()) {
        std::ifstream in(in_path);
        if (!in)
            throw std::runtime_error("cannot open " + in_path);
        const auto entries = sosemanuk::read_kat(in);
        const auto report = sosemanuk::verify_kat(entries);
        for (const auto& item : report.items)
            std::printf("entry %zu: %s\n", item.index,
                        item.pass ? "pass" : "FAIL");
        std::printf("%s (%zu entries)\n",
                    report.all_pass ? "all pass" : "FAILURES", entries.size());
        return report.all_pass ? 0 : 1;
    }

    if (bench_cmd->parsed()) {
        config.session_memory_bytes =
            std::size_t(memory_mb * 1024.0 * 1024.0);
        config.compare_backends = !no_compare;
        const auto report = sosemanuk::run_bench(config);
        std::cout << (kv_output ? sosemanuk::format_bench_kv(report)
                                : sosemanuk::format_bench_table(report));
        return report.kat_before_ok && report.kat_after_ok ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
