#include "pepsi/rng.hpp"

#include <cstring>
#include <stdexcept>
#include <string_view>

#include <openssl/rand.h>

#include "pepsi/detail/sha256.hpp"

namespace pepsi {

namespace {

bls::ByteView sv_bytes(std::string_view s) {
    return {(const uint8_t*)s.data(), s.size()};
}

std::array<uint8_t, 8> be64(uint64_t v) {
    std::array<uint8_t, 8> out;
    for (int i = 0; i < 8; ++i) out[i] = (uint8_t)(v >> (56 - 8 * i));
    return out;
}

}  // namespace

void SystemRng::fill(std::span<uint8_t> out) {
    if (RAND_bytes(out.data(), (int)out.size()) != 1)
        throw std::runtime_error("RAND_bytes failed");
}

SeededRng::SeededRng(uint64_t seed) : SeededRng(be64(seed)) {}

SeededRng::SeededRng(std::span<const uint8_t> seed_bytes) {
    key_ = bls::sha256({sv_bytes("PEPSI-RNG-v1"), seed_bytes});
}

SeededRng::SeededRng(RawKey, const std::array<uint8_t, 32>& key) : key_(key) {}

void SeededRng::fill(std::span<uint8_t> out) {
    size_t off = 0;
    while (off < out.size()) {
        if (buf_used_ == 32) {
            auto ctr = be64(counter_++);
            buf_ = bls::sha256({key_, sv_bytes("blk"), ctr});
            buf_used_ = 0;
        }
        size_t take = std::min(out.size() - off, 32 - buf_used_);
        std::memcpy(out.data() + off, buf_.data() + buf_used_, take);
        buf_used_ += take;
        off += take;
    }
}

uint64_t SeededRng::next_u64() {
    std::array<uint8_t, 8> b;
    fill(b);
    uint64_t v = 0;
    for (uint8_t x : b) v = (v << 8) | x;
    return v;
}

uint64_t SeededRng::uniform(uint64_t n) { return next_u64() % n; }

SeededRng SeededRng::child(std::span<const uint8_t> tag) const {
    return SeededRng(RawKey{}, bls::sha256({key_, sv_bytes("sub"), tag}));
}

SeededRng SeededRng::child(std::string_view tag) const {
    return child(sv_bytes(tag));
}

SeededRng SeededRng::child_indexed(std::string_view tag, uint64_t index) const {
    auto idx = be64(index);
    std::array<uint8_t, 64> buf;
    if (tag.size() + 8 > buf.size()) throw std::invalid_argument("tag too long");
    std::memcpy(buf.data(), tag.data(), tag.size());
    std::memcpy(buf.data() + tag.size(), idx.data(), 8);
    return child(std::span<const uint8_t>(buf.data(), tag.size() + 8));
}

}  // namespace pepsi
