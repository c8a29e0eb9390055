// Compressed point encodings. 48 bytes for G1, 96 for G2; the top three bits
// of the first byte carry (compressed, infinity, y-is-lexically-larger).
// Decoding validates curve membership and prime-order subgroup membership.
#pragma once

#include <array>
#include <optional>

#include "pepsi/detail/curve.hpp"

namespace pepsi::bls {

constexpr size_t kG1CompressedSize = 48;
constexpr size_t kG2CompressedSize = 96;

std::array<uint8_t, kG1CompressedSize> g1_compress(const G1Point& p);
std::array<uint8_t, kG2CompressedSize> g2_compress(const G2Point& p);

// nullopt on any malformed input: bad flags, x >= p, x off curve, or point
// outside the r-order subgroup.
std::optional<G1Point> g1_decompress(std::span<const uint8_t> in);
std::optional<G2Point> g2_decompress(std::span<const uint8_t> in);

}  // namespace pepsi::bls
