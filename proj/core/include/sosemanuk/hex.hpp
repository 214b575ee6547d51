#ifndef SOSEMANUK_HEX_HPP
#define SOSEMANUK_HEX_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sosemanuk {

/// Lowercase hex, no separators.
std::string to_hex(std::span<const std::uint8_t> data);

/// Accepts either case; throws std::invalid_argument on odd length or a
/// non-hex digit.
std::vector<std::uint8_t> from_hex(std::string_view hex);

} // namespace sosemanuk

#endif
