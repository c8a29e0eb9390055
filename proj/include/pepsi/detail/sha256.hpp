// Thin wrapper over the OpenSSL EVP digest API plus the expand_message_xmd
// construction from RFC 9380.
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include <openssl/evp.h>

namespace pepsi::bls {

using Digest = std::array<uint8_t, 32>;
using ByteView = std::span<const uint8_t>;

inline Digest sha256(std::initializer_list<ByteView> parts) {
    Digest out;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw std::runtime_error("EVP_MD_CTX_new failed");
    unsigned int len = 0;
    int ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    for (const auto& part : parts)
        ok = ok && EVP_DigestUpdate(ctx, part.data(), part.size());
    ok = ok && EVP_DigestFinal_ex(ctx, out.data(), &len);
    EVP_MD_CTX_free(ctx);
    if (!ok || len != out.size()) throw std::runtime_error("sha256 failed");
    return out;
}

inline Digest sha256(ByteView data) { return sha256({data}); }

// expand_message_xmd with SHA-256 (block size 64, output size 32).
inline std::vector<uint8_t> expand_message_xmd(ByteView msg, ByteView dst,
                                               size_t len) {
    if (dst.size() > 255) throw std::invalid_argument("DST too long");
    size_t ell = (len + 31) / 32;
    if (ell > 255 || len == 0) throw std::invalid_argument("bad xmd length");

    std::vector<uint8_t> dst_prime(dst.begin(), dst.end());
    dst_prime.push_back((uint8_t)dst.size());
    std::array<uint8_t, 64> z_pad{};
    std::array<uint8_t, 2> lib = {(uint8_t)(len >> 8), (uint8_t)len};
    std::array<uint8_t, 1> zero = {0};

    Digest b0 = sha256({z_pad, msg, lib, zero, dst_prime});
    std::array<uint8_t, 1> idx = {1};
    Digest bi = sha256({b0, idx, dst_prime});

    std::vector<uint8_t> out(bi.begin(), bi.end());
    for (size_t i = 2; i <= ell; ++i) {
        Digest x;
        for (size_t j = 0; j < 32; ++j) x[j] = b0[j] ^ bi[j];
        idx[0] = (uint8_t)i;
        bi = sha256({x, idx, dst_prime});
        out.insert(out.end(), bi.begin(), bi.end());
    }
    out.resize(len);
    return out;
}

}  // namespace pepsi::bls
