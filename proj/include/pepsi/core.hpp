// Public surface of the pairing layer: scalars, the two source groups, the
// target group, and the tag/key derivations built on them. Everything here
// is an immutable value type, safe to share across threads.
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "pepsi/detail/curve.hpp"
#include "pepsi/rng.hpp"
#include "pepsi/wire.hpp"

namespace pepsi {

using wire::Tag;

// Domain-separation constants, bit-exact protocol values.
inline constexpr std::string_view kDomainH1 = "PEPSI-v1-H1";
inline constexpr std::string_view kDomainH2 = "PEPSI-v1-H2";
inline constexpr std::string_view kDomainTag = "PEPSI-v1-TAG";
inline constexpr std::string_view kDomainEnc = "PEPSI-v1-ENC";

constexpr size_t kScalarSize = 32;
constexpr size_t kG1Size = 48;
constexpr size_t kG2Size = 96;
constexpr size_t kGTSize = 576;

// Keys for the symmetric layer never touch a wire format or a log line.
struct SymmetricKey {
    std::array<uint8_t, 32> bytes{};

    bool operator==(const SymmetricKey&) const = default;
};

class Scalar {
  public:
    Scalar() = default;

    static Scalar one() { return Scalar(bls::Fr::one()); }
    bool is_zero() const { return v_.is_zero(); }
    bool operator==(const Scalar&) const = default;

    Scalar mul(const Scalar& o) const { return Scalar(v_ * o.v_); }

    std::array<uint8_t, kScalarSize> to_bytes() const {
        std::array<uint8_t, kScalarSize> out;
        v_.to_bytes(out);
        return out;
    }
    static std::optional<Scalar> from_bytes(std::span<const uint8_t> in);

    const bls::Fr& raw() const { return v_; }

  private:
    explicit Scalar(const bls::Fr& v) : v_(v) {}
    friend Scalar random_scalar(EntropySource&);
    bls::Fr v_;
};

// Uniform nonzero scalar; deterministic under a SeededRng.
Scalar random_scalar(EntropySource& rng);

class GTElement {
  public:
    GTElement() = default;

    static GTElement identity() { return GTElement(bls::Fp12::one()); }
    bool is_identity() const { return v_.is_one(); }
    bool operator==(const GTElement&) const = default;

    std::array<uint8_t, kGTSize> to_bytes() const {
        std::array<uint8_t, kGTSize> out;
        v_.to_bytes(out);
        return out;
    }
    static std::optional<GTElement> from_bytes(std::span<const uint8_t> in);

  private:
    explicit GTElement(const bls::Fp12& v) : v_(v) {}
    friend class G1Element;
    friend class G2Element;
    friend GTElement pair(const class G1Element&, const class G2Element&);
    bls::Fp12 v_;
};

class G1Element {
  public:
    G1Element() = default;  // identity

    static G1Element generator() { return G1Element(bls::g1_generator()); }
    static G1Element identity() { return G1Element(); }
    bool is_identity() const { return p_.is_identity(); }
    bool operator==(const G1Element& o) const { return p_ == o.p_; }

    std::array<uint8_t, kG1Size> to_bytes() const;
    // Validates curve and subgroup membership.
    static std::optional<G1Element> from_bytes(std::span<const uint8_t> in);

    const bls::G1Point& raw() const { return p_; }

  private:
    explicit G1Element(const bls::G1Point& p) : p_(p) {}
    friend G1Element hash_to_g1(std::span<const uint8_t>, std::string_view);
    friend G1Element scalar_mul(const Scalar&, const G1Element&);
    friend GTElement pair(const G1Element&, const class G2Element&);
    bls::G1Point p_ = bls::G1Point::identity();
};

class G2Element {
  public:
    G2Element() = default;

    static G2Element generator() { return G2Element(bls::g2_generator()); }
    static G2Element identity() { return G2Element(); }
    bool is_identity() const { return p_.is_identity(); }
    bool operator==(const G2Element& o) const { return p_ == o.p_; }

    std::array<uint8_t, kG2Size> to_bytes() const;
    static std::optional<G2Element> from_bytes(std::span<const uint8_t> in);

    const bls::G2Point& raw() const { return p_; }

  private:
    explicit G2Element(const bls::G2Point& p) : p_(p) {}
    friend G2Element hash_to_g2(std::span<const uint8_t>, std::string_view);
    friend G2Element scalar_mul(const Scalar&, const G2Element&);
    friend GTElement pair(const G1Element&, const G2Element&);
    bls::G2Point p_ = bls::G2Point::identity();
};

// Deterministic maps from identity bytes into the source groups. The domain
// string must be one of the kDomain* constants above.
G1Element hash_to_g1(std::span<const uint8_t> identity, std::string_view domain);
G2Element hash_to_g2(std::span<const uint8_t> identity, std::string_view domain);

G1Element scalar_mul(const Scalar& k, const G1Element& p);
G2Element scalar_mul(const Scalar& k, const G2Element& p);

GTElement pair(const G1Element& a, const G2Element& b);

// 20-byte tag and 32-byte symmetric key from a shared GT value, domain
// separated from each other.
Tag derive_tag(const GTElement& shared);
SymmetricKey derive_key(const GTElement& shared);

}  // namespace pepsi
