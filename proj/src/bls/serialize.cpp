#include "pepsi/detail/serialize.hpp"

#include <cstring>

namespace pepsi::bls {

namespace {

constexpr uint8_t kFlagCompressed = 0x80;
constexpr uint8_t kFlagInfinity = 0x40;
constexpr uint8_t kFlagYLarger = 0x20;

bool fp_lex_gt(const Fp& a, const Fp& b) {
    Limbs<6> ca = a.canonical(), cb = b.canonical();
    for (size_t i = 6; i-- > 0;) {
        if (ca[i] != cb[i]) return ca[i] > cb[i];
    }
    return false;
}

// Lexicographic order on (c1, c0), matching the byte order of the encoding.
bool fp2_lex_gt(const Fp2& a, const Fp2& b) {
    if (a.c1 == b.c1) return fp_lex_gt(a.c0, b.c0);
    return fp_lex_gt(a.c1, b.c1);
}

}  // namespace

std::array<uint8_t, kG1CompressedSize> g1_compress(const G1Point& p) {
    std::array<uint8_t, kG1CompressedSize> out{};
    if (p.is_identity()) {
        out[0] = kFlagCompressed | kFlagInfinity;
        return out;
    }
    Fp ax, ay;
    p.to_affine(ax, ay);
    ax.to_bytes(out);
    out[0] |= kFlagCompressed;
    if (fp_lex_gt(ay, -ay)) out[0] |= kFlagYLarger;
    return out;
}

std::array<uint8_t, kG2CompressedSize> g2_compress(const G2Point& p) {
    std::array<uint8_t, kG2CompressedSize> out{};
    if (p.is_identity()) {
        out[0] = kFlagCompressed | kFlagInfinity;
        return out;
    }
    Fp2 ax, ay;
    p.to_affine(ax, ay);
    ax.c1.to_bytes(std::span(out).subspan(0, 48));
    ax.c0.to_bytes(std::span(out).subspan(48, 48));
    out[0] |= kFlagCompressed;
    if (fp2_lex_gt(ay, -ay)) out[0] |= kFlagYLarger;
    return out;
}

std::optional<G1Point> g1_decompress(std::span<const uint8_t> in) {
    if (in.size() != kG1CompressedSize) return std::nullopt;
    uint8_t flags = in[0] & 0xE0;
    if (!(flags & kFlagCompressed)) return std::nullopt;
    std::array<uint8_t, kG1CompressedSize> buf;
    std::memcpy(buf.data(), in.data(), in.size());
    buf[0] &= 0x1F;
    if (flags & kFlagInfinity) {
        if (flags & kFlagYLarger) return std::nullopt;
        for (uint8_t b : buf)
            if (b != 0) return std::nullopt;
        return G1Point::identity();
    }
    auto x = Fp::from_bytes(buf);
    if (!x) return std::nullopt;
    auto y = (x->sqr() * *x + G1Curve::b()).sqrt();
    if (!y) return std::nullopt;
    bool want_larger = (flags & kFlagYLarger) != 0;
    Fp ay = *y;
    if (fp_lex_gt(ay, -ay) != want_larger) ay = -ay;
    G1Point p = G1Point::from_affine(*x, ay);
    if (!p.in_subgroup()) return std::nullopt;
    return p;
}

std::optional<G2Point> g2_decompress(std::span<const uint8_t> in) {
    if (in.size() != kG2CompressedSize) return std::nullopt;
    uint8_t flags = in[0] & 0xE0;
    if (!(flags & kFlagCompressed)) return std::nullopt;
    std::array<uint8_t, kG2CompressedSize> buf;
    std::memcpy(buf.data(), in.data(), in.size());
    buf[0] &= 0x1F;
    if (flags & kFlagInfinity) {
        if (flags & kFlagYLarger) return std::nullopt;
        for (uint8_t b : buf)
            if (b != 0) return std::nullopt;
        return G2Point::identity();
    }
    auto x1 = Fp::from_bytes(std::span(buf).subspan(0, 48));
    auto x0 = Fp::from_bytes(std::span(buf).subspan(48, 48));
    if (!x0 || !x1) return std::nullopt;
    Fp2 x{*x0, *x1};
    auto y = (x.sqr() * x + G2Curve::b()).sqrt();
    if (!y) return std::nullopt;
    bool want_larger = (flags & kFlagYLarger) != 0;
    Fp2 ay = *y;
    if (fp2_lex_gt(ay, -ay) != want_larger) ay = -ay;
    G2Point p = G2Point::from_affine(x, ay);
    if (!p.in_subgroup()) return std::nullopt;
    return p;
}

}  // namespace pepsi::bls
