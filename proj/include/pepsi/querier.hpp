// Querier pipeline: subscription tags and report decryption.
#pragma once

#include "pepsi/ra.hpp"

namespace pepsi {

// The querier's side of the matching value: e(H1(id), yellow key); equal to
// the node's value for the same label by bilinearity.
GTElement querier_shared_secret(const QuerierKey& qk, const SystemParams& params);

class Querier {
  public:
    Querier(QuerierKey key, const SystemParams& params);

    const Tag& tag() const { return tag_; }
    const QuerierKey& key() const { return key_; }

    // The subscription carries the 20 tag bytes and the delivery endpoint,
    // nothing else.
    wire::SubscriptionFrame make_subscription(std::span<const uint8_t> endpoint) const;
    wire::SubscriptionFrame make_subscription(std::string_view endpoint) const;

    // Throws AuthenticationFailed on a wrong-label report or tampering;
    // MalformedReport is raised by the frame parser in the bytes overload.
    std::vector<uint8_t> decrypt_report(const wire::ReportFrame& report) const;
    std::vector<uint8_t> decrypt_report(std::span<const uint8_t> frame_bytes) const;

  private:
    QuerierKey key_;
    Tag tag_;
    SymmetricKey enc_key_;
};

}  // namespace pepsi
