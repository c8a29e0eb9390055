// Base field Fp (381-bit) and scalar field Fr (255-bit) of BLS12-381.
// Values are kept in Montgomery form throughout.
#pragma once

#include <cstdint>
#include <cstring>
#include <optional>
#include <span>

#include "pepsi/detail/bls_constants.hpp"
#include "pepsi/detail/mont.hpp"

namespace pepsi::bls {

struct Fp {
    Limbs<6> v{};

    static constexpr Fp zero() { return Fp{}; }
    static constexpr Fp one() { return Fp{consts::kFpOne}; }

    bool is_zero() const { return limbs_is_zero(v); }
    bool operator==(const Fp&) const = default;

    friend Fp operator+(const Fp& a, const Fp& b) {
        Fp r;
        mont_add(r.v, a.v, b.v, consts::kP);
        return r;
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        Fp r;
        mont_sub(r.v, a.v, b.v, consts::kP);
        return r;
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        Fp r;
        mont_mul(r.v, a.v, b.v, consts::kP, consts::kPInv);
        return r;
    }
    Fp operator-() const {
        Fp r;
        mont_neg(r.v, v, consts::kP);
        return r;
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp sqr() const { return *this * *this; }
    Fp dbl() const { return *this + *this; }

    Fp halve() const {
        Fp r;
        mont_halve(r.v, v, consts::kP);
        return r;
    }

    Fp pow(std::span<const uint8_t> exp_be) const {
        Fp r;
        mont_pow(r.v, v, exp_be, consts::kP, consts::kPInv, consts::kFpOne);
        return r;
    }

    Fp inv() const { return pow(consts::kFpInvExp); }

    bool is_square() const {
        if (is_zero()) return true;
        return pow(consts::kFpLegendreExp) == one();
    }

    std::optional<Fp> sqrt() const {
        Fp cand = pow(consts::kFpSqrtExp);
        if (cand.sqr() == *this) return cand;
        return std::nullopt;
    }

    // Montgomery -> canonical limbs (multiply by 1).
    Limbs<6> canonical() const {
        static constexpr Limbs<6> kOneRaw = {1, 0, 0, 0, 0, 0};
        Limbs<6> r;
        mont_mul(r, v, kOneRaw, consts::kP, consts::kPInv);
        return r;
    }

    // Parity of the canonical representative (RFC 9380 sgn0 for prime fields).
    int sgn0() const { return (int)(canonical()[0] & 1); }

    void to_bytes(std::span<uint8_t> out48) const { limbs_to_be<6>(out48, canonical()); }

    static std::optional<Fp> from_bytes(std::span<const uint8_t> in48) {
        Limbs<6> raw;
        if (!limbs_from_be(raw, in48, consts::kP)) return std::nullopt;
        Fp r{raw};
        mont_mul(r.v, r.v, consts::kFpR2, consts::kP, consts::kPInv);
        return r;
    }

    static Fp from_u64(uint64_t x) {
        Fp r{Limbs<6>{x, 0, 0, 0, 0, 0}};
        mont_mul(r.v, r.v, consts::kFpR2, consts::kP, consts::kPInv);
        return r;
    }

    // Wide big-endian input reduced mod p (used by hash_to_field; 64 bytes).
    static Fp from_wide_be(std::span<const uint8_t> bytes) {
        Fp acc = zero();
        Fp shift = from_u64(256);
        for (uint8_t b : bytes) acc = acc * shift + from_u64(b);
        return acc;
    }
};

struct Fr {
    Limbs<4> v{};

    static constexpr Fr zero() { return Fr{}; }
    static constexpr Fr one() { return Fr{consts::kFrOne}; }

    bool is_zero() const { return limbs_is_zero(v); }
    bool operator==(const Fr&) const = default;

    friend Fr operator+(const Fr& a, const Fr& b) {
        Fr r;
        mont_add(r.v, a.v, b.v, consts::kR);
        return r;
    }
    friend Fr operator-(const Fr& a, const Fr& b) {
        Fr r;
        mont_sub(r.v, a.v, b.v, consts::kR);
        return r;
    }
    friend Fr operator*(const Fr& a, const Fr& b) {
        Fr r;
        mont_mul(r.v, a.v, b.v, consts::kR, consts::kRInv);
        return r;
    }

    Fr inv() const {
        Fr r;
        mont_pow(r.v, v, std::span<const uint8_t>(consts::kFrInvExp), consts::kR,
                 consts::kRInv, consts::kFrOne);
        return r;
    }

    Limbs<4> canonical() const {
        static constexpr Limbs<4> kOneRaw = {1, 0, 0, 0};
        Limbs<4> r;
        mont_mul(r, v, kOneRaw, consts::kR, consts::kRInv);
        return r;
    }

    void to_bytes(std::span<uint8_t> out32) const { limbs_to_be<4>(out32, canonical()); }

    static std::optional<Fr> from_bytes(std::span<const uint8_t> in32) {
        Limbs<4> raw;
        if (!limbs_from_be(raw, in32, consts::kR)) return std::nullopt;
        Fr r{raw};
        mont_mul(r.v, r.v, consts::kFrR2, consts::kR, consts::kRInv);
        return r;
    }

    static Fr from_u64(uint64_t x) {
        Fr r{Limbs<4>{x, 0, 0, 0}};
        mont_mul(r.v, r.v, consts::kFrR2, consts::kR, consts::kRInv);
        return r;
    }

    // 64 wide bytes reduced mod r; byte-Horner keeps this portable.
    static Fr from_wide_be(std::span<const uint8_t> bytes) {
        Fr acc = zero();
        Fr shift = from_u64(256);
        for (uint8_t b : bytes) acc = acc * shift + from_u64(b);
        return acc;
    }
};

}  // namespace pepsi::bls
