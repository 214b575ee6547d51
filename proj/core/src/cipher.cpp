#include "sosemanuk/cipher.hpp"

#include <algorithm>

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

} // namespace

Cipher::Cipher(const CipherKey& key, std::span<const std::uint8_t> iv,
               Backend backend)
    : tables_(&alpha_tables()), backend_(backend)
{
    if (iv.size() != 16)
        throw InvalidIvLength("Cipher: IV must be exactly 16 bytes");
    // SERPENT block I/O convention: Y0 from the first four bytes,
    // words little-endian.
    const Quartet block{load_le(iv.data()), load_le(iv.data() + 4),
                        load_le(iv.data() + 8), load_le(iv.data() + 12)};
    core_ = init_from_taps(serpent24_encrypt_taps(key.schedule(), block));
}

void Cipher::generate_block(std::uint8_t* dst)
{
    if (backend_ == Backend::unrolled) {
        run_block20(core_, *tables_, dst);
    } else {
        for (int q = 0; q < 5; ++q) {
            const auto z = quad_round(core_, *tables_);
            for (int i = 0; i < 4; ++i)
                store_le(dst + 16 * q + 4 * i, z[i]);
        }
    }
}

void Cipher::refill()
{
    generate_block(buffer_.data());
    buffer_pos_ = 0;
}

void Cipher::keystream(std::span<std::uint8_t> out)
{
    std::size_t done = 0;
    if (buffer_pos_ < buffer_.size()) {
        const std::size_t take =
            std::min(out.size(), buffer_.size() - buffer_pos_);
        std::copy_n(buffer_.data() + buffer_pos_, take, out.data());
        buffer_pos_ += take;
        done += take;
    }
    while (out.size() - done >= buffer_.size()) {
        generate_block(out.data() + done);
        done += buffer_.size();
    }
    if (done < out.size()) {
        refill();
        const std::size_t take = out.size() - done;
        std::copy_n(buffer_.data(), take, out.data() + done);
        buffer_pos_ = take;
    }
    position_ += out.size();
}

std::vector<std::uint8_t> Cipher::keystream(std::size_t n)
{
    std::vector<std::uint8_t> out(n);
    keystream(std::span(out));
    return out;
}

void Cipher::process(std::span<const std::uint8_t> in,
                     std::span<std::uint8_t> out)
{
    std::size_t done = 0;
    if (buffer_pos_ < buffer_.size()) {
        const std::size_t take =
            std::min(in.size(), buffer_.size() - buffer_pos_);
        for (std::size_t i = 0; i < take; ++i)
            out[i] = in[i] ^ buffer_[buffer_pos_ + i];
        buffer_pos_ += take;
        done += take;
    }
    while (in.size() - done >= buffer_.size()) {
        std::uint8_t block[sizeof(buffer_)];
        generate_block(block);
        for (std::size_t i = 0; i < sizeof(block); ++i)
            out[done + i] = in[done + i] ^ block[i];
        done += sizeof(block);
    }
    if (done < in.size()) {
        refill();
        const std::size_t take = in.size() - done;
        for (std::size_t i = 0; i < take; ++i)
            out[done + i] = in[done + i] ^ buffer_[i];
        buffer_pos_ = take;
    }
    position_ += in.size();
}

std::vector<std::uint8_t> Cipher::process(std::span<const std::uint8_t> in)
{
    std::vector<std::uint8_t> out(in.size());
    process(in, std::span(out));
    return out;
}

} // namespace sosemanuk
