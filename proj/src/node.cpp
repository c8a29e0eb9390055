#include "pepsi/node.hpp"

#include "pepsi/aead.hpp"

namespace pepsi {

namespace {

wire::ReportFrame build_report(const Tag& tag, const SymmetricKey& key,
                               std::span<const uint8_t> payload,
                               EntropySource& rng) {
    if (payload.empty() || payload.size() > wire::kMaxPayload)
        throw Error(Err::PayloadTooLarge, "payload must be 1..4096 bytes");

    wire::ReportFrame frame;
    frame.tag = tag;
    rng.fill(frame.nonce);

    // Associated data binds tag and nonce so a forwarded report cannot be
    // re-tagged without tripping authentication.
    std::array<uint8_t, wire::kTagSize + wire::kNonceSize> aad;
    std::copy(tag.bytes.begin(), tag.bytes.end(), aad.begin());
    std::copy(frame.nonce.begin(), frame.nonce.end(),
              aad.begin() + wire::kTagSize);
    frame.ciphertext = aead_encrypt(key, frame.nonce, aad, payload);
    return frame;
}

}  // namespace

GTElement node_shared_secret(const NodeKey& nk, const SystemParams&) {
    auto ident = nk.label.encode_identity();
    return pair(nk.key, hash_to_g2(ident, kDomainH2));
}

wire::ReportFrame make_report(const NodeKey& nk, std::span<const uint8_t> payload,
                              const SystemParams& params, EntropySource& rng) {
    GTElement shared = node_shared_secret(nk, params);
    return build_report(derive_tag(shared), derive_key(shared), payload, rng);
}

MobileNode::MobileNode(NodeKey key, const SystemParams& params)
    : key_(std::move(key)) {
    GTElement shared = node_shared_secret(key_, params);
    tag_ = derive_tag(shared);
    enc_key_ = derive_key(shared);
}

wire::ReportFrame MobileNode::make_report(std::span<const uint8_t> payload,
                                          EntropySource& rng) const {
    return build_report(tag_, enc_key_, payload, rng);
}

}  // namespace pepsi
