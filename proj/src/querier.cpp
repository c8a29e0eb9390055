#include "pepsi/querier.hpp"

#include "pepsi/aead.hpp"

namespace pepsi {

GTElement querier_shared_secret(const QuerierKey& qk, const SystemParams&) {
    auto ident = qk.label.encode_identity();
    return pair(hash_to_g1(ident, kDomainH1), qk.key);
}

Querier::Querier(QuerierKey key, const SystemParams& params)
    : key_(std::move(key)) {
    GTElement shared = querier_shared_secret(key_, params);
    tag_ = derive_tag(shared);
    enc_key_ = derive_key(shared);
}

wire::SubscriptionFrame Querier::make_subscription(
    std::span<const uint8_t> endpoint) const {
    wire::SubscriptionFrame f;
    f.tag = tag_;
    f.endpoint.assign(endpoint.begin(), endpoint.end());
    return f;
}

wire::SubscriptionFrame Querier::make_subscription(std::string_view endpoint) const {
    return make_subscription(
        std::span<const uint8_t>((const uint8_t*)endpoint.data(), endpoint.size()));
}

std::vector<uint8_t> Querier::decrypt_report(const wire::ReportFrame& report) const {
    std::array<uint8_t, wire::kTagSize + wire::kNonceSize> aad;
    std::copy(report.tag.bytes.begin(), report.tag.bytes.end(), aad.begin());
    std::copy(report.nonce.begin(), report.nonce.end(),
              aad.begin() + wire::kTagSize);
    auto payload = aead_decrypt(enc_key_, report.nonce, aad, report.ciphertext);
    if (!payload)
        throw Error(Err::AuthenticationFailed,
                    "report does not authenticate under this label's key");
    return std::move(*payload);
}

std::vector<uint8_t> Querier::decrypt_report(
    std::span<const uint8_t> frame_bytes) const {
    return decrypt_report(wire::ReportFrame::parse(frame_bytes));
}

}  // namespace pepsi
