#ifndef SOSEMANUK_CIPHER_HPP
#define SOSEMANUK_CIPHER_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sosemanuk/gf_arith.hpp"
#include "sosemanuk/keystream.hpp"
#include "sosemanuk/serpent.hpp"
#include "sosemanuk/types.hpp"

namespace sosemanuk {

/// Key-only phase of initialization. Reusable across many IVs; never
/// re-runs the key schedule.
class CipherKey {
public:
    /// Accepts 16..32 bytes; throws InvalidKeyLength otherwise.
    explicit CipherKey(std::span<const std::uint8_t> key)
        : schedule_(serpent_key_schedule(key)), key_bits_(int(key.size()) * 8)
    {
    }

    const KeySchedule& schedule() const { return schedule_; }
    int key_bits() const { return key_bits_; }

private:
    KeySchedule schedule_;
    int key_bits_;
};

/// Keystream generation strategy. Both produce identical bytes;
/// `stepwise` keeps the plainly shifting register as a measurable
/// reference point for the unrolled path.
enum class Backend {
    unrolled,
    stepwise,
};

/// A running cipher session: one (key, IV) pair, a monotone keystream
/// position, and up to 79 buffered bytes. Single-owner mutable; movable
/// between threads, never shared. Many instances may share one CipherKey.
class Cipher {
public:
    /// IV setup: one Serpent24 run over the IV, no key schedule.
    /// The IV must be exactly 16 bytes; throws InvalidIvLength otherwise.
    Cipher(const CipherKey& key, std::span<const std::uint8_t> iv,
           Backend backend = Backend::unrolled);

    /// Appends n keystream bytes to out. n = 0 is a no-op.
    void keystream(std::span<std::uint8_t> out);
    std::vector<std::uint8_t> keystream(std::size_t n);

    /// XORs data with the keystream; encryption and decryption alike.
    void process(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);
    std::vector<std::uint8_t> process(std::span<const std::uint8_t> in);

    /// Total keystream bytes consumed so far.
    std::uint64_t position() const { return position_; }

    Backend backend() const { return backend_; }
    const CoreState& core() const { return core_; }

private:
    void generate_block(std::uint8_t* dst);
    void refill();

    CoreState core_;
    const AlphaTables* tables_;
    Backend backend_;
    std::array<std::uint8_t, 80> buffer_{};
    std::size_t buffer_pos_ = sizeof(buffer_);
    std::uint64_t position_ = 0;
};

} // namespace sosemanuk

#endif
