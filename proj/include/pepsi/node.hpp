// Mobile Node report pipeline: shared-secret derivation, tagging, and
// authenticated encryption of the measurement.
#pragma once

#include "pepsi/ra.hpp"

namespace pepsi {

// The node's side of the matching value: e(grey key, H2(id)) = e(H1, H2)^z.
GTElement node_shared_secret(const NodeKey& nk, const SystemParams& params);

// One-shot report construction; recomputes the pairing every call. This is
// the per-report cost model the benchmark measures.
wire::ReportFrame make_report(const NodeKey& nk, std::span<const uint8_t> payload,
                              const SystemParams& params, EntropySource& rng);

// Normal publishing path: the shared secret, tag and symmetric key are
// computed once per key and reused; each report costs one AEAD call.
class MobileNode {
  public:
    MobileNode(NodeKey key, const SystemParams& params);

    const Tag& tag() const { return tag_; }
    const NodeKey& key() const { return key_; }

    wire::ReportFrame make_report(std::span<const uint8_t> payload,
                                  EntropySource& rng) const;

  private:
    NodeKey key_;
    Tag tag_;
    SymmetricKey enc_key_;
};

}  // namespace pepsi
