// Fp2 = Fp[u] / (u^2 + 1).
#pragma once

#include <optional>

#include "pepsi/detail/fp.hpp"

namespace pepsi::bls {

struct Fp2 {
    Fp c0, c1;

    static constexpr Fp2 zero() { return {}; }
    static constexpr Fp2 one() { return {Fp::one(), Fp::zero()}; }

    // The Fp6/Fp12 tower non-residue xi = 1 + u.
    static constexpr Fp2 xi() { return {Fp{consts::kXi[0]}, Fp{consts::kXi[1]}}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fp2&) const = default;

    friend Fp2 operator+(const Fp2& a, const Fp2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend Fp2 operator-(const Fp2& a, const Fp2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
    Fp2 operator-() const { return {-c0, -c1}; }

    friend Fp2 operator*(const Fp2& a, const Fp2& b) {
        // Karatsuba with u^2 = -1.
        Fp t0 = a.c0 * b.c0;
        Fp t1 = a.c1 * b.c1;
        Fp t2 = (a.c0 + a.c1) * (b.c0 + b.c1);
        return {t0 - t1, t2 - t0 - t1};
    }

    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

    Fp2 sqr() const {
        Fp t0 = (c0 + c1) * (c0 - c1);
        Fp t1 = c0 * c1;
        return {t0, t1.dbl()};
    }

    Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }
    Fp2 halve() const { return {c0.halve(), c1.halve()}; }
    Fp2 conj() const { return {c0, -c1}; }

    Fp2 mul_fp(const Fp& k) const { return {c0 * k, c1 * k}; }

    // Multiplication by xi = 1 + u: (c0 - c1) + (c0 + c1) u.
    Fp2 mul_xi() const { return {c0 - c1, c0 + c1}; }

    Fp norm() const { return c0.sqr() + c1.sqr(); }

    Fp2 inv() const {
        Fp n = norm().inv();
        return {c0 * n, -(c1 * n)};
    }

    bool is_square() const { return is_zero() || norm().is_square(); }

    // Norm-based square root; valid because p = 3 mod 4.
    std::optional<Fp2> sqrt() const {
        if (is_zero()) return zero();
        if (c1.is_zero()) {
            if (auto s = c0.sqrt()) return Fp2{*s, Fp::zero()};
            if (auto s = (-c0).sqrt()) return Fp2{Fp::zero(), *s};
            return std::nullopt;
        }
        auto n = norm().sqrt();
        if (!n) return std::nullopt;
        Fp lam = (c0 + *n).halve();
        auto c = lam.sqrt();
        if (!c) {
            lam = (c0 - *n).halve();
            c = lam.sqrt();
            if (!c) return std::nullopt;
        }
        Fp d = c1 * c->dbl().inv();
        Fp2 cand{*c, d};
        if (cand.sqr() == *this) return cand;
        return std::nullopt;
    }

    int sgn0() const {
        Limbs<6> r0 = c0.canonical();
        int s0 = (int)(r0[0] & 1);
        bool z0 = limbs_is_zero(r0);
        int s1 = (int)(c1.canonical()[0] & 1);
        return s0 | ((int)z0 & s1);
    }

    void to_bytes(std::span<uint8_t> out96) const {
        c0.to_bytes(out96.subspan(0, 48));
        c1.to_bytes(out96.subspan(48, 48));
    }

    static std::optional<Fp2> from_bytes(std::span<const uint8_t> in96) {
        auto a = Fp::from_bytes(in96.subspan(0, 48));
        auto b = Fp::from_bytes(in96.subspan(48, 48));
        if (!a || !b) return std::nullopt;
        return Fp2{*a, *b};
    }
};

}  // namespace pepsi::bls
