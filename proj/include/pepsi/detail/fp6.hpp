// Fp6 = Fp2[v] / (v^3 - xi), xi = 1 + u.
#pragma once

#include "pepsi/detail/fp2.hpp"

namespace pepsi::bls {

struct Fp6 {
    Fp2 c0, c1, c2;

    static constexpr Fp6 zero() { return {}; }
    static constexpr Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fp6&) const = default;

    friend Fp6 operator+(const Fp6& a, const Fp6& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    friend Fp6 operator-(const Fp6& a, const Fp6& b) {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
    }
    Fp6 operator-() const { return {-c0, -c1, -c2}; }

    friend Fp6 operator*(const Fp6& a, const Fp6& b) {
        // Toom-style 6-multiplication schedule.
        Fp2 v0 = a.c0 * b.c0;
        Fp2 v1 = a.c1 * b.c1;
        Fp2 v2 = a.c2 * b.c2;
        Fp2 t0 = ((a.c1 + a.c2) * (b.c1 + b.c2) - v1 - v2).mul_xi() + v0;
        Fp2 t1 = (a.c0 + a.c1) * (b.c0 + b.c1) - v0 - v1 + v2.mul_xi();
        Fp2 t2 = (a.c0 + a.c2) * (b.c0 + b.c2) - v0 - v2 + v1;
        return {t0, t1, t2};
    }

    Fp6 sqr() const { return *this * *this; }

    Fp6 mul_fp2(const Fp2& k) const { return {c0 * k, c1 * k, c2 * k}; }

    // Multiplication by v: (c0, c1, c2) -> (xi c2, c0, c1).
    Fp6 mul_v() const { return {c2.mul_xi(), c0, c1}; }

    Fp6 inv() const {
        Fp2 a = c0.sqr() - (c1 * c2).mul_xi();
        Fp2 b = c2.sqr().mul_xi() - c0 * c1;
        Fp2 c = c1.sqr() - c0 * c2;
        Fp2 f = (c0 * a + (c2 * b + c1 * c).mul_xi()).inv();
        return {a * f, b * f, c * f};
    }
};

}  // namespace pepsi::bls
