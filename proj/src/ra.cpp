#include "pepsi/ra.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <unistd.h>

#include <openssl/evp.h>

#include "pepsi/aead.hpp"

namespace pepsi {

namespace {

constexpr char kKeyMagic[4] = {'P', 'E', 'P', 'K'};
constexpr char kMasterMagic[4] = {'P', 'E', 'P', 'M'};

std::vector<uint8_t> read_file(const std::filesystem::path& path, Err err_code) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(err_code, "cannot open " + path.string());
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    return data;
}

void write_file(const std::filesystem::path& path,
                std::span<const uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write((const char*)data.data(), (std::streamsize)data.size());
    if (!out) throw Error(Err::IoError, "cannot write " + path.string());
}

const char* role_name(KeyRole role) {
    return role == KeyRole::Node ? "node" : "querier";
}

std::string hex_of(std::span<const uint8_t> bytes) {
    static const char* kDigits = "0123456789abcdef";
    std::string out;
    for (uint8_t b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0xF]);
    }
    return out;
}

std::vector<uint8_t> encode_key_common(KeyRole role, const Label& label,
                                       std::span<const uint8_t> point) {
    std::vector<uint8_t> out;
    auto ident = label.encode_identity();
    out.insert(out.end(), kKeyMagic, kKeyMagic + 4);
    out.push_back(wire::kProtocolVersion);
    out.push_back((uint8_t)role);
    out.push_back((uint8_t)(ident.size() >> 8));
    out.push_back((uint8_t)ident.size());
    out.insert(out.end(), ident.begin(), ident.end());
    out.insert(out.end(), point.begin(), point.end());
    return out;
}

}  // namespace

SetupResult setup(EntropySource& rng) {
    return SetupResult{MasterSecret::generate(rng), SystemParams::current()};
}

NodeKey register_node(const MasterSecret& ms, const Label& label,
                      std::string_view node_id, RegistrationLedger* ledger) {
    auto ident = label.encode_identity();
    G1Element base = hash_to_g1(ident, kDomainH1);
    NodeKey nk{label, scalar_mul(ms.scalar(), base)};
    if (ledger != nullptr)
        ledger->append({std::string(node_id), KeyRole::Node, ident,
                        (int64_t)::time(nullptr)});
    return nk;
}

QuerierKey register_querier(const MasterSecret& ms, const Label& label,
                            std::string_view querier_id,
                            RegistrationLedger* ledger) {
    auto ident = label.encode_identity();
    G2Element base = hash_to_g2(ident, kDomainH2);
    QuerierKey qk{label, scalar_mul(ms.scalar(), base)};
    if (ledger != nullptr)
        ledger->append({std::string(querier_id), KeyRole::Querier, ident,
                        (int64_t)::time(nullptr)});
    return qk;
}

std::vector<uint8_t> encode_key(const NodeKey& key) {
    return encode_key_common(KeyRole::Node, key.label, key.key.to_bytes());
}

std::vector<uint8_t> encode_key(const QuerierKey& key) {
    return encode_key_common(KeyRole::Querier, key.label, key.key.to_bytes());
}

void export_key(const NodeKey& key, const std::filesystem::path& path) {
    write_file(path, encode_key(key));
}

void export_key(const QuerierKey& key, const std::filesystem::path& path) {
    write_file(path, encode_key(key));
}

AnyKey decode_key(std::span<const uint8_t> bytes) {
    if (bytes.size() < 8) throw Error(Err::MalformedKeyFile, "key file truncated");
    if (std::memcmp(bytes.data(), kKeyMagic, 4) != 0)
        throw Error(Err::MalformedKeyFile, "bad key file magic");
    if (bytes[4] != wire::kProtocolVersion)
        throw Error(Err::VersionMismatch, "unsupported key file version");
    uint8_t role_byte = bytes[5];
    if (role_byte > 1) throw Error(Err::MalformedKeyFile, "unknown key role");
    KeyRole role = (KeyRole)role_byte;
    size_t id_len = ((size_t)bytes[6] << 8) | bytes[7];
    size_t point_len = role == KeyRole::Node ? kG1Size : kG2Size;
    if (bytes.size() != 8 + id_len + point_len)
        throw Error(Err::MalformedKeyFile, "key file length mismatch");

    auto label = Label::decode_identity(bytes.subspan(8, id_len));
    if (!label) throw Error(Err::MalformedKeyFile, "key file identity not canonical");

    auto point = bytes.subspan(8 + id_len, point_len);
    if (role == KeyRole::Node) {
        auto g1 = G1Element::from_bytes(point);
        if (!g1)
            throw Error(Err::GroupMembershipFailed, "node key point rejected");
        return NodeKey{*label, *g1};
    }
    auto g2 = G2Element::from_bytes(point);
    if (!g2) throw Error(Err::GroupMembershipFailed, "querier key point rejected");
    return QuerierKey{*label, *g2};
}

AnyKey import_key(const std::filesystem::path& path) {
    return decode_key(read_file(path, Err::MalformedKeyFile));
}

void save_master(const MasterSecret& ms, const std::filesystem::path& path,
                 std::string_view passphrase, EntropySource& rng,
                 uint32_t kdf_iters) {
    auto scalar_bytes = ms.scalar().to_bytes();
    std::array<uint8_t, 16> salt;
    std::array<uint8_t, 12> nonce;
    rng.fill(salt);
    rng.fill(nonce);

    std::vector<uint8_t> header;
    header.insert(header.end(), kMasterMagic, kMasterMagic + 4);
    header.push_back(wire::kProtocolVersion);
    header.push_back((uint8_t)(kdf_iters >> 24));
    header.push_back((uint8_t)(kdf_iters >> 16));
    header.push_back((uint8_t)(kdf_iters >> 8));
    header.push_back((uint8_t)kdf_iters);
    header.insert(header.end(), salt.begin(), salt.end());
    header.insert(header.end(), nonce.begin(), nonce.end());

    SymmetricKey kek;
    if (PKCS5_PBKDF2_HMAC(passphrase.data(), (int)passphrase.size(), salt.data(),
                          (int)salt.size(), (int)kdf_iters, EVP_sha256(),
                          (int)kek.bytes.size(), kek.bytes.data()) != 1)
        throw std::runtime_error("PBKDF2 failed");

    auto ct = aead_encrypt(kek, nonce, header, scalar_bytes);
    std::vector<uint8_t> out = header;
    out.insert(out.end(), ct.begin(), ct.end());
    write_file(path, out);
}

MasterSecret load_master(const std::filesystem::path& path,
                         std::string_view passphrase) {
    auto data = read_file(path, Err::MalformedKeyFile);
    constexpr size_t kHeaderLen = 4 + 1 + 4 + 16 + 12;
    if (data.size() != kHeaderLen + 32 + 16)
        throw Error(Err::MalformedKeyFile, "master file length mismatch");
    if (std::memcmp(data.data(), kMasterMagic, 4) != 0)
        throw Error(Err::MalformedKeyFile, "bad master file magic");
    if (data[4] != wire::kProtocolVersion)
        throw Error(Err::VersionMismatch, "unsupported master file version");
    uint32_t iters = ((uint32_t)data[5] << 24) | ((uint32_t)data[6] << 16) |
                     ((uint32_t)data[7] << 8) | data[8];
    std::span<const uint8_t> salt(data.data() + 9, 16);
    std::span<const uint8_t> nonce(data.data() + 25, 12);
    std::span<const uint8_t> header(data.data(), kHeaderLen);
    std::span<const uint8_t> ct(data.data() + kHeaderLen, 48);

    SymmetricKey kek;
    if (PKCS5_PBKDF2_HMAC(passphrase.data(), (int)passphrase.size(), salt.data(),
                          (int)salt.size(), (int)iters, EVP_sha256(),
                          (int)kek.bytes.size(), kek.bytes.data()) != 1)
        throw std::runtime_error("PBKDF2 failed");

    auto pt = aead_decrypt(kek, nonce, header, ct);
    if (!pt) throw Error(Err::AuthenticationFailed, "master file authentication failed");
    auto z = Scalar::from_bytes(*pt);
    if (!z || z->is_zero())
        throw Error(Err::MalformedKeyFile, "master scalar out of range");
    return MasterSecret::from_scalar(*z);
}

RegistrationLedger::RegistrationLedger(std::filesystem::path path)
    : path_(std::move(path)) {
    std::ifstream in(path_, std::ios::binary);
    if (!in) return;  // fresh ledger
    std::string all((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    in.close();
    size_t pos = 0;
    size_t committed = 0;  // end of the last newline-terminated record
    while (pos < all.size()) {
        size_t nl = all.find('\n', pos);
        if (nl == std::string::npos) break;  // torn trailing write
        std::string line = all.substr(pos, nl - pos);
        pos = nl + 1;
        committed = pos;
        std::istringstream row(line);
        LedgerEntry e;
        std::string role_str, label_hex, time_str;
        if (!std::getline(row, e.party_id, '\t') ||
            !std::getline(row, role_str, '\t') ||
            !std::getline(row, label_hex, '\t') ||
            !std::getline(row, time_str))
            continue;  // torn or foreign line; skip
        if (role_str == "node") {
            e.role = KeyRole::Node;
        } else if (role_str == "querier") {
            e.role = KeyRole::Querier;
        } else {
            continue;
        }
        if (label_hex.size() % 2 != 0) continue;
        bool ok = true;
        for (size_t i = 0; i < label_hex.size(); i += 2) {
            auto nib = [&ok](char c) -> uint8_t {
                if (c >= '0' && c <= '9') return (uint8_t)(c - '0');
                if (c >= 'a' && c <= 'f') return (uint8_t)(c - 'a' + 10);
                ok = false;
                return 0;
            };
            uint8_t hi = nib(label_hex[i]), lo = nib(label_hex[i + 1]);
            e.label_identity.push_back((uint8_t)((hi << 4) | lo));
        }
        try {
            e.unix_time = std::stoll(time_str);
        } catch (...) {
            continue;
        }
        if (ok) entries_.push_back(std::move(e));
    }
    // Drop a crash-torn tail so the next append starts on a line boundary.
    if (committed < all.size()) {
        std::error_code ec;
        std::filesystem::resize_file(path_, committed, ec);
    }
}

void RegistrationLedger::append(const LedgerEntry& entry) {
    std::string line = entry.party_id;
    line += '\t';
    line += role_name(entry.role);
    line += '\t';
    line += hex_of(entry.label_identity);
    line += '\t';
    line += std::to_string(entry.unix_time);
    line += '\n';

    // Single O_APPEND write so a concurrent reader sees whole lines only.
    int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0600);
    if (fd < 0) throw Error(Err::LedgerWriteFailed, "cannot open ledger");
    ssize_t n = ::write(fd, line.data(), line.size());
    int saved = errno;
    ::close(fd);
    if (n != (ssize_t)line.size())
        throw Error(Err::LedgerWriteFailed,
                    "ledger write failed: " + std::string(strerror(saved)));
    entries_.push_back(entry);
}

}  // namespace pepsi
