// Fp12 = Fp6[w] / (w^2 - v). The nested basis corresponds to w-powers
// (1, w^2, w^4 | w, w^3, w^5); serialization uses that coefficient order.
#pragma once

#include <span>

#include "pepsi/detail/fp6.hpp"

namespace pepsi::bls {

struct Fp12 {
    Fp6 c0, c1;

    static constexpr Fp12 zero() { return {}; }
    static constexpr Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool is_one() const { return *this == one(); }
    bool operator==(const Fp12&) const = default;

    friend Fp12 operator*(const Fp12& a, const Fp12& b) {
        Fp6 t0 = a.c0 * b.c0;
        Fp6 t1 = a.c1 * b.c1;
        Fp6 t2 = (a.c0 + a.c1) * (b.c0 + b.c1);
        return {t0 + t1.mul_v(), t2 - t0 - t1};
    }
    Fp12& operator*=(const Fp12& o) { return *this = *this * o; }

    Fp12 sqr() const {
        Fp6 t = c0 * c1;
        Fp6 s = (c0 + c1) * (c0 + c1.mul_v());
        return {s - t - t.mul_v(), t + t};
    }

    // f^(p^6): conjugation over Fp6.
    Fp12 conj() const { return {c0, -c1}; }

    Fp12 inv() const {
        Fp6 d = (c0.sqr() - c1.sqr().mul_v()).inv();
        return {c0 * d, -(c1 * d)};
    }

    // f^p. Coefficient-wise Fp2 conjugation followed by the gamma twists for
    // each w-power slot.
    Fp12 frobenius() const {
        auto g = [](const consts::Fp2Limbs& k) {
            return Fp2{Fp{k[0]}, Fp{k[1]}};
        };
        return {
            Fp6{c0.c0.conj(),
                c0.c1.conj() * g(consts::kFrob1Gamma2),
                c0.c2.conj() * g(consts::kFrob1Gamma4)},
            Fp6{c1.c0.conj() * g(consts::kFrob1Gamma1),
                c1.c1.conj() * g(consts::kFrob1Gamma3),
                c1.c2.conj() * g(consts::kFrob1Gamma5)},
        };
    }

    // Plain square-and-multiply by a big-endian byte exponent.
    Fp12 pow(std::span<const uint8_t> exp_be) const {
        Fp12 acc = one();
        bool started = false;
        for (uint8_t byte : exp_be) {
            for (int bit = 7; bit >= 0; --bit) {
                if (started) acc = acc.sqr();
                if ((byte >> bit) & 1) {
                    if (started) {
                        acc *= *this;
                    } else {
                        acc = *this;
                        started = true;
                    }
                }
            }
        }
        return acc;
    }

    // 576-byte canonical form, coefficients in w-power slot order
    // (1, w^2, w^4, w, w^3, w^5).
    void to_bytes(std::span<uint8_t> out576) const {
        c0.c0.to_bytes(out576.subspan(0, 96));
        c0.c1.to_bytes(out576.subspan(96, 96));
        c0.c2.to_bytes(out576.subspan(192, 96));
        c1.c0.to_bytes(out576.subspan(288, 96));
        c1.c1.to_bytes(out576.subspan(384, 96));
        c1.c2.to_bytes(out576.subspan(480, 96));
    }

    static std::optional<Fp12> from_bytes(std::span<const uint8_t> in576) {
        auto a = Fp2::from_bytes(in576.subspan(0, 96));
        auto b = Fp2::from_bytes(in576.subspan(96, 96));
        auto c = Fp2::from_bytes(in576.subspan(192, 96));
        auto d = Fp2::from_bytes(in576.subspan(288, 96));
        auto e = Fp2::from_bytes(in576.subspan(384, 96));
        auto f = Fp2::from_bytes(in576.subspan(480, 96));
        if (!a || !b || !c || !d || !e || !f) return std::nullopt;
        return Fp12{Fp6{*a, *b, *c}, Fp6{*d, *e, *f}};
    }
};

}  // namespace pepsi::bls
