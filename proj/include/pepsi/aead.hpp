// AES-256-GCM via OpenSSL EVP. 12-byte nonces, 16-byte authentication tag
// appended to the ciphertext.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pepsi/core.hpp"

namespace pepsi {

std::vector<uint8_t> aead_encrypt(const SymmetricKey& key,
                                  std::span<const uint8_t> nonce12,
                                  std::span<const uint8_t> aad,
                                  std::span<const uint8_t> plaintext);

// nullopt on authentication failure.
std::optional<std::vector<uint8_t>> aead_decrypt(const SymmetricKey& key,
                                                 std::span<const uint8_t> nonce12,
                                                 std::span<const uint8_t> aad,
                                                 std::span<const uint8_t> ct_with_tag);

}  // namespace pepsi
