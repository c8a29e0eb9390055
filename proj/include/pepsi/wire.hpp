// Wire-level artifacts shared by every party: the 20-byte matching tag and
// the report/subscription frame formats. This header has no cryptographic
// dependencies; the matching broker builds against it alone.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pepsi/errors.hpp"

namespace pepsi::wire {

constexpr uint8_t kProtocolVersion = 1;
constexpr size_t kTagSize = 20;
constexpr size_t kNonceSize = 12;
constexpr size_t kAeadTagSize = 16;
constexpr size_t kMaxPayload = 4096;

// magic(4) + version(1) + tag(20) + nonce(12) + length(4) + aead tag(16)
constexpr size_t kReportOverhead = 57;
constexpr size_t kReportHeaderSize = 4 + 1 + kTagSize + kNonceSize + 4;

// The only handle the Service Provider ever matches on.
struct Tag {
    std::array<uint8_t, kTagSize> bytes{};

    bool operator==(const Tag&) const = default;
};

struct TagHash {
    size_t operator()(const Tag& t) const {
        // FNV-1a; tag bytes are already uniformly distributed in honest use.
        uint64_t h = 0xcbf29ce484222325ull;
        for (uint8_t b : t.bytes) h = (h ^ b) * 0x100000001b3ull;
        return (size_t)h;
    }
};

// "PEPR" frame: tag + nonce + authenticated ciphertext.
struct ReportFrame {
    Tag tag;
    std::array<uint8_t, kNonceSize> nonce{};
    std::vector<uint8_t> ciphertext;  // payload length + 16 byte auth tag

    std::vector<uint8_t> encode() const;
    static ReportFrame parse(std::span<const uint8_t> bytes);  // MalformedReport
};

// "PEPS" frame: tag + opaque delivery endpoint.
struct SubscriptionFrame {
    Tag tag;
    std::vector<uint8_t> endpoint;

    std::vector<uint8_t> encode() const;
    static SubscriptionFrame parse(std::span<const uint8_t> bytes);  // MalformedSubscription
};

// Frame validation without copying the body: checks magic, version and the
// length arithmetic, returns the tag. This is all the broker reads.
Tag peek_report_tag(std::span<const uint8_t> report_bytes);

}  // namespace pepsi::wire
