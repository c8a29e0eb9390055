#include "pepsi/aead.hpp"

#include <stdexcept>

#include <openssl/evp.h>

namespace pepsi {

namespace {

struct CipherCtx {
    EVP_CIPHER_CTX* ctx;
    CipherCtx() : ctx(EVP_CIPHER_CTX_new()) {
        if (ctx == nullptr) throw std::runtime_error("EVP_CIPHER_CTX_new failed");
    }
    ~CipherCtx() { EVP_CIPHER_CTX_free(ctx); }
};

}  // namespace

std::vector<uint8_t> aead_encrypt(const SymmetricKey& key,
                                  std::span<const uint8_t> nonce12,
                                  std::span<const uint8_t> aad,
                                  std::span<const uint8_t> plaintext) {
    CipherCtx c;
    int len = 0;
    std::vector<uint8_t> out(plaintext.size() + 16);
    int ok = EVP_EncryptInit_ex(c.ctx, EVP_aes_256_gcm(), nullptr, nullptr, nullptr);
    ok = ok && EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_SET_IVLEN, (int)nonce12.size(), nullptr);
    ok = ok && EVP_EncryptInit_ex(c.ctx, nullptr, nullptr, key.bytes.data(), nonce12.data());
    if (!aad.empty())
        ok = ok && EVP_EncryptUpdate(c.ctx, nullptr, &len, aad.data(), (int)aad.size());
    ok = ok && EVP_EncryptUpdate(c.ctx, out.data(), &len, plaintext.data(),
                                 (int)plaintext.size());
    int total = len;
    ok = ok && EVP_EncryptFinal_ex(c.ctx, out.data() + total, &len);
    total += len;
    ok = ok && EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_GET_TAG, 16,
                                   out.data() + plaintext.size());
    if (!ok || total != (int)plaintext.size())
        throw std::runtime_error("AES-GCM encryption failed");
    return out;
}

std::optional<std::vector<uint8_t>> aead_decrypt(const SymmetricKey& key,
                                                 std::span<const uint8_t> nonce12,
                                                 std::span<const uint8_t> aad,
                                                 std::span<const uint8_t> ct_with_tag) {
    if (ct_with_tag.size() < 16) return std::nullopt;
    size_t ct_len = ct_with_tag.size() - 16;
    CipherCtx c;
    int len = 0;
    std::vector<uint8_t> out(ct_len);
    int ok = EVP_DecryptInit_ex(c.ctx, EVP_aes_256_gcm(), nullptr, nullptr, nullptr);
    ok = ok && EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_SET_IVLEN, (int)nonce12.size(), nullptr);
    ok = ok && EVP_DecryptInit_ex(c.ctx, nullptr, nullptr, key.bytes.data(), nonce12.data());
    if (!aad.empty())
        ok = ok && EVP_DecryptUpdate(c.ctx, nullptr, &len, aad.data(), (int)aad.size());
    ok = ok && EVP_DecryptUpdate(c.ctx, out.data(), &len, ct_with_tag.data(), (int)ct_len);
    int total = len;
    ok = ok && EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_SET_TAG, 16,
                                   const_cast<uint8_t*>(ct_with_tag.data() + ct_len));
    if (!ok) throw std::runtime_error("AES-GCM setup failed");
    if (EVP_DecryptFinal_ex(c.ctx, out.data() + total, &len) != 1) return std::nullopt;
    total += len;
    if (total != (int)ct_len) return std::nullopt;
    return out;
}

}  // namespace pepsi
