// The offline Registration Authority: owns the master scalar, issues
// per-label keys to nodes (G1 side) and queriers (G2 side), and records
// issuance in an append-only ledger. No network surface; everything is
// file-based.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "pepsi/core.hpp"
#include "pepsi/labels.hpp"

namespace pepsi {

struct SystemParams {
    uint8_t protocol_version = wire::kProtocolVersion;
    std::string curve_id = "BLS12-381";
    G1Element g1_generator = G1Element::generator();
    G2Element g2_generator = G2Element::generator();

    static SystemParams current() { return {}; }
};

class MasterSecret {
  public:
    static MasterSecret generate(EntropySource& rng) {
        return MasterSecret(random_scalar(rng));
    }
    // Needed for the z = 1 regression vectors and for file import.
    static MasterSecret from_scalar(const Scalar& z) { return MasterSecret(z); }

    const Scalar& scalar() const { return z_; }

  private:
    explicit MasterSecret(const Scalar& z) : z_(z) {}
    Scalar z_;
};

struct SetupResult {
    MasterSecret master;
    SystemParams params;
};

SetupResult setup(EntropySource& rng);

enum class KeyRole : uint8_t { Node = 0, Querier = 1 };

// "Grey key": the node-side tagging secret for one label.
struct NodeKey {
    Label label;
    G1Element key;
};

// "Yellow key": the querier-side decryption/tagging secret for one label.
struct QuerierKey {
    Label label;
    G2Element key;
};

using AnyKey = std::variant<NodeKey, QuerierKey>;

struct LedgerEntry {
    std::string party_id;
    KeyRole role;
    std::vector<uint8_t> label_identity;
    int64_t unix_time;
};

// Append-only, line-oriented issuance record. A crash-truncated final line
// is ignored on load.
class RegistrationLedger {
  public:
    explicit RegistrationLedger(std::filesystem::path path);

    void append(const LedgerEntry& entry);  // LedgerWriteFailed
    const std::vector<LedgerEntry>& entries() const { return entries_; }
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
    std::vector<LedgerEntry> entries_;
};

NodeKey register_node(const MasterSecret& ms, const Label& label,
                      std::string_view node_id,
                      RegistrationLedger* ledger = nullptr);
QuerierKey register_querier(const MasterSecret& ms, const Label& label,
                            std::string_view querier_id,
                            RegistrationLedger* ledger = nullptr);

// "PEPK" container, bit-exact:
// magic(4) version(1) role(1) id_len(u16 be) identity bytes, then the
// compressed group point (48 bytes node / 96 bytes querier).
void export_key(const NodeKey& key, const std::filesystem::path& path);
void export_key(const QuerierKey& key, const std::filesystem::path& path);
std::vector<uint8_t> encode_key(const NodeKey& key);
std::vector<uint8_t> encode_key(const QuerierKey& key);

// Throws MalformedKeyFile, VersionMismatch or GroupMembershipFailed.
AnyKey import_key(const std::filesystem::path& path);
AnyKey decode_key(std::span<const uint8_t> bytes);

// Master secret at rest: "PEPM" container, AES-256-GCM over the scalar under
// a PBKDF2-HMAC-SHA256 key. Setup rng draw order is scalar, salt, nonce, so
// a seeded rng reproduces the file byte-for-byte.
constexpr uint32_t kMasterKdfIters = 16384;

void save_master(const MasterSecret& ms, const std::filesystem::path& path,
                 std::string_view passphrase, EntropySource& rng,
                 uint32_t kdf_iters = kMasterKdfIters);
MasterSecret load_master(const std::filesystem::path& path,
                         std::string_view passphrase);

}  // namespace pepsi
