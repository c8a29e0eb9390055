#include "pepsi/wire.hpp"

#include <cstring>

namespace pepsi::wire {

namespace {

constexpr char kReportMagic[4] = {'P', 'E', 'P', 'R'};
constexpr char kSubscriptionMagic[4] = {'P', 'E', 'P', 'S'};

uint32_t read_u32_be(const uint8_t* p) {
    return ((uint32_t)p[0] << 24) | ((uint32_t)p[1] << 16) | ((uint32_t)p[2] << 8) | p[3];
}

uint16_t read_u16_be(const uint8_t* p) { return (uint16_t)((p[0] << 8) | p[1]); }

}  // namespace

std::vector<uint8_t> ReportFrame::encode() const {
    const size_t payload_len = ciphertext.size() - kAeadTagSize;
    std::vector<uint8_t> out;
    out.reserve(kReportHeaderSize + ciphertext.size());
    out.insert(out.end(), kReportMagic, kReportMagic + 4);
    out.push_back(kProtocolVersion);
    out.insert(out.end(), tag.bytes.begin(), tag.bytes.end());
    out.insert(out.end(), nonce.begin(), nonce.end());
    out.push_back((uint8_t)(payload_len >> 24));
    out.push_back((uint8_t)(payload_len >> 16));
    out.push_back((uint8_t)(payload_len >> 8));
    out.push_back((uint8_t)payload_len);
    out.insert(out.end(), ciphertext.begin(), ciphertext.end());
    return out;
}

ReportFrame ReportFrame::parse(std::span<const uint8_t> bytes) {
    if (bytes.size() < kReportHeaderSize + kAeadTagSize)
        throw Error(Err::MalformedReport, "report frame truncated");
    if (std::memcmp(bytes.data(), kReportMagic, 4) != 0)
        throw Error(Err::MalformedReport, "bad report magic");
    if (bytes[4] != kProtocolVersion)
        throw Error(Err::MalformedReport, "unsupported report version");
    uint32_t payload_len = read_u32_be(bytes.data() + 4 + 1 + kTagSize + kNonceSize);
    if (payload_len == 0 || payload_len > kMaxPayload)
        throw Error(Err::MalformedReport, "report payload length out of range");
    if (bytes.size() != kReportHeaderSize + payload_len + kAeadTagSize)
        throw Error(Err::MalformedReport, "report length mismatch");

    ReportFrame f;
    std::memcpy(f.tag.bytes.data(), bytes.data() + 5, kTagSize);
    std::memcpy(f.nonce.data(), bytes.data() + 5 + kTagSize, kNonceSize);
    f.ciphertext.assign(bytes.begin() + kReportHeaderSize, bytes.end());
    return f;
}

Tag peek_report_tag(std::span<const uint8_t> report_bytes) {
    if (report_bytes.size() < kReportHeaderSize + kAeadTagSize)
        throw Error(Err::MalformedReport, "report frame truncated");
    if (std::memcmp(report_bytes.data(), kReportMagic, 4) != 0)
        throw Error(Err::MalformedReport, "bad report magic");
    if (report_bytes[4] != kProtocolVersion)
        throw Error(Err::MalformedReport, "unsupported report version");
    uint32_t payload_len =
        read_u32_be(report_bytes.data() + 4 + 1 + kTagSize + kNonceSize);
    if (payload_len == 0 || payload_len > kMaxPayload)
        throw Error(Err::MalformedReport, "report payload length out of range");
    if (report_bytes.size() != kReportHeaderSize + payload_len + kAeadTagSize)
        throw Error(Err::MalformedReport, "report length mismatch");
    Tag t;
    std::memcpy(t.bytes.data(), report_bytes.data() + 5, kTagSize);
    return t;
}

std::vector<uint8_t> SubscriptionFrame::encode() const {
    if (endpoint.size() > 0xFFFF)
        throw Error(Err::MalformedSubscription, "endpoint exceeds 65535 bytes");
    std::vector<uint8_t> out;
    out.reserve(4 + 1 + kTagSize + 2 + endpoint.size());
    out.insert(out.end(), kSubscriptionMagic, kSubscriptionMagic + 4);
    out.push_back(kProtocolVersion);
    out.insert(out.end(), tag.bytes.begin(), tag.bytes.end());
    out.push_back((uint8_t)(endpoint.size() >> 8));
    out.push_back((uint8_t)endpoint.size());
    out.insert(out.end(), endpoint.begin(), endpoint.end());
    return out;
}

SubscriptionFrame SubscriptionFrame::parse(std::span<const uint8_t> bytes) {
    if (bytes.size() < 4 + 1 + kTagSize + 2)
        throw Error(Err::MalformedSubscription, "subscription frame truncated");
    if (std::memcmp(bytes.data(), kSubscriptionMagic, 4) != 0)
        throw Error(Err::MalformedSubscription, "bad subscription magic");
    if (bytes[4] != kProtocolVersion)
        throw Error(Err::MalformedSubscription, "unsupported subscription version");
    uint16_t ep_len = read_u16_be(bytes.data() + 5 + kTagSize);
    if (bytes.size() != 4 + 1 + kTagSize + 2 + (size_t)ep_len)
        throw Error(Err::MalformedSubscription, "subscription length mismatch");

    SubscriptionFrame f;
    std::memcpy(f.tag.bytes.data(), bytes.data() + 5, kTagSize);
    f.endpoint.assign(bytes.begin() + 5 + kTagSize + 2, bytes.end());
    return f;
}

}  // namespace pepsi::wire
