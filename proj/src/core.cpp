#include "pepsi/core.hpp"

#include "pepsi/detail/hash_to_curve.hpp"
#include "pepsi/detail/pairing.hpp"
#include "pepsi/detail/serialize.hpp"
#include "pepsi/detail/sha256.hpp"

namespace pepsi {

namespace {

bls::ByteView sv_bytes(std::string_view s) {
    return {(const uint8_t*)s.data(), s.size()};
}

}  // namespace

std::optional<Scalar> Scalar::from_bytes(std::span<const uint8_t> in) {
    if (in.size() != kScalarSize) return std::nullopt;
    auto v = bls::Fr::from_bytes(in);
    if (!v) return std::nullopt;
    Scalar s;
    s.v_ = *v;
    return s;
}

Scalar random_scalar(EntropySource& rng) {
    std::array<uint8_t, 64> wide;
    rng.fill(wide);
    bls::Fr v = bls::Fr::from_wide_be(wide);
    if (v.is_zero()) v = bls::Fr::one();
    return Scalar(v);
}

std::optional<GTElement> GTElement::from_bytes(std::span<const uint8_t> in) {
    if (in.size() != kGTSize) return std::nullopt;
    auto v = bls::Fp12::from_bytes(in);
    if (!v) return std::nullopt;
    GTElement g;
    g.v_ = *v;
    return g;
}

std::array<uint8_t, kG1Size> G1Element::to_bytes() const { return bls::g1_compress(p_); }

std::optional<G1Element> G1Element::from_bytes(std::span<const uint8_t> in) {
    auto p = bls::g1_decompress(in);
    if (!p) return std::nullopt;
    return G1Element(*p);
}

std::array<uint8_t, kG2Size> G2Element::to_bytes() const { return bls::g2_compress(p_); }

std::optional<G2Element> G2Element::from_bytes(std::span<const uint8_t> in) {
    auto p = bls::g2_decompress(in);
    if (!p) return std::nullopt;
    return G2Element(*p);
}

G1Element hash_to_g1(std::span<const uint8_t> identity, std::string_view domain) {
    return G1Element(bls::hash_to_g1(identity, sv_bytes(domain)));
}

G2Element hash_to_g2(std::span<const uint8_t> identity, std::string_view domain) {
    return G2Element(bls::hash_to_g2(identity, sv_bytes(domain)));
}

G1Element scalar_mul(const Scalar& k, const G1Element& p) {
    return G1Element(p.p_.mul_be_bytes(k.to_bytes()));
}

G2Element scalar_mul(const Scalar& k, const G2Element& p) {
    return G2Element(p.p_.mul_be_bytes(k.to_bytes()));
}

GTElement pair(const G1Element& a, const G2Element& b) {
    return GTElement(bls::pairing(a.p_, b.p_));
}

Tag derive_tag(const GTElement& shared) {
    auto digest = bls::sha256({sv_bytes(kDomainTag), shared.to_bytes()});
    Tag t;
    std::copy(digest.begin(), digest.begin() + wire::kTagSize, t.bytes.begin());
    return t;
}

SymmetricKey derive_key(const GTElement& shared) {
    auto digest = bls::sha256({sv_bytes(kDomainEnc), shared.to_bytes()});
    SymmetricKey k;
    k.bytes = digest;
    return k;
}

}  // namespace pepsi
