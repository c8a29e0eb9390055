// Entropy sources. SeededRng is a SHA-256 counter generator with a stable
// byte stream: the simulation harness and the offline test tooling reproduce
// it independently, so its derivation must never change within a protocol
// version.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace pepsi {

class EntropySource {
  public:
    virtual ~EntropySource() = default;
    virtual void fill(std::span<uint8_t> out) = 0;
};

// OS-backed randomness for production key material.
class SystemRng final : public EntropySource {
  public:
    void fill(std::span<uint8_t> out) override;
};

// Deterministic stream: block_i = SHA256(key || "blk" || be64(i)), with
// key = SHA256("PEPSI-RNG-v1" || seed bytes). Children derive fresh keys via
// SHA256(key || "sub" || tag) and share nothing with the parent stream.
class SeededRng final : public EntropySource {
  public:
    explicit SeededRng(uint64_t seed);
    explicit SeededRng(std::span<const uint8_t> seed_bytes);

    void fill(std::span<uint8_t> out) override;
    uint64_t next_u64();
    uint64_t uniform(uint64_t n);  // next_u64 % n

    SeededRng child(std::span<const uint8_t> tag) const;
    SeededRng child(std::string_view tag) const;
    SeededRng child_indexed(std::string_view tag, uint64_t index) const;

  private:
    struct RawKey {};
    SeededRng(RawKey, const std::array<uint8_t, 32>& key);

    std::array<uint8_t, 32> key_{};
    uint64_t counter_ = 0;
    std::array<uint8_t, 32> buf_{};
    size_t buf_used_ = 32;  // empty
};

}  // namespace pepsi
