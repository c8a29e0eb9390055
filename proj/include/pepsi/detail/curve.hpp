// Projective short-Weierstrass arithmetic shared by G1 (over Fp) and G2
// (over Fp2). Uses the Renes-Costello-Batina complete formulas for a = 0, so
// identity and doubling need no special cases in the group law.
#pragma once

#include <cstdint>
#include <span>

#include "pepsi/detail/fp12.hpp"

namespace pepsi::bls {

struct G1Curve {
    using Field = Fp;
    static Field b() { return Field{consts::kCurveB}; }
    static Field b3() { return Field{consts::kCurveB3}; }
};

struct G2Curve {
    using Field = Fp2;
    static Field b() { return Field{Fp{consts::kTwistB[0]}, Fp{consts::kTwistB[1]}}; }
    static Field b3() { return Field{Fp{consts::kTwistB3[0]}, Fp{consts::kTwistB3[1]}}; }
};

template <class Curve>
struct ProjPoint {
    using F = typename Curve::Field;
    // Default state is the identity (0 : 1 : 0).
    F x{};
    F y = F::one();
    F z{};

    static ProjPoint identity() { return {}; }

    bool is_identity() const { return z.is_zero(); }

    static ProjPoint from_affine(const F& ax, const F& ay) { return {ax, ay, F::one()}; }

    bool on_curve() const {
        if (is_identity()) return true;
        // Y^2 Z = X^3 + b Z^3
        F lhs = y.sqr() * z;
        F rhs = x.sqr() * x + Curve::b() * z.sqr() * z;
        return lhs == rhs;
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        if (a.is_identity() || b.is_identity())
            return a.is_identity() && b.is_identity();
        return a.x * b.z == b.x * a.z && a.y * b.z == b.y * a.z;
    }

    ProjPoint operator-() const { return {x, -y, z}; }

    // Complete addition (Renes-Costello-Batina, algorithm 7 specialized to
    // a = 0).
    friend ProjPoint operator+(const ProjPoint& p, const ProjPoint& q) {
        F t0 = p.x * q.x;
        F t1 = p.y * q.y;
        F t2 = p.z * q.z;
        F t3 = (p.x + p.y) * (q.x + q.y) - t0 - t1;  // X1 Y2 + X2 Y1
        F t4 = (p.y + p.z) * (q.y + q.z) - t1 - t2;  // Y1 Z2 + Y2 Z1
        F ty = (p.x + p.z) * (q.x + q.z) - t0 - t2;  // X1 Z2 + X2 Z1
        F t0_3 = t0 + t0 + t0;                       // 3 X1 X2
        F tb = Curve::b3() * t2;                     // 3 b Z1 Z2
        F zl = t1 + tb;
        F tm = t1 - tb;
        F yb = Curve::b3() * ty;
        ProjPoint r;
        r.x = t3 * tm - t4 * yb;
        r.y = yb * t0_3 + tm * zl;
        r.z = zl * t4 + t0_3 * t3;
        return r;
    }

    // Complete doubling (algorithm 9, a = 0).
    ProjPoint dbl() const {
        F t0 = y.sqr();
        F z3 = t0 + t0;
        z3 = z3 + z3;
        z3 = z3 + z3;             // 8 Y^2
        F t1 = y * z;
        F t2 = Curve::b3() * z.sqr();
        F x3 = t2 * z3;
        F y3 = t0 + t2;
        z3 = t1 * z3;
        t1 = t2 + t2;
        t2 = t1 + t2;
        t0 = t0 - t2;
        y3 = t0 * y3;
        y3 = x3 + y3;
        t1 = x * y;
        x3 = t0 * t1;
        ProjPoint r;
        r.x = x3 + x3;
        r.y = y3;
        r.z = z3;
        return r;
    }

    ProjPoint& operator+=(const ProjPoint& o) { return *this = *this + o; }

    // Double-and-add over a big-endian byte exponent; used for scalar
    // multiplication, cofactor clearing and subgroup checks alike.
    ProjPoint mul_be_bytes(std::span<const uint8_t> k) const {
        ProjPoint acc = identity();
        bool started = false;
        for (uint8_t byte : k) {
            for (int bit = 7; bit >= 0; --bit) {
                if (started) acc = acc.dbl();
                if ((byte >> bit) & 1) {
                    if (started) {
                        acc += *this;
                    } else {
                        acc = *this;
                        started = true;
                    }
                }
            }
        }
        return acc;
    }

    bool in_subgroup() const {
        return mul_be_bytes(consts::kGroupOrder).is_identity();
    }

    // Affine coordinates; callers must exclude the identity first.
    void to_affine(F& ax, F& ay) const {
        F zi = z.inv();
        ax = x * zi;
        ay = y * zi;
    }
};

using G1Point = ProjPoint<G1Curve>;
using G2Point = ProjPoint<G2Curve>;

inline G1Point g1_generator() {
    return G1Point::from_affine(Fp{consts::kG1GenX}, Fp{consts::kG1GenY});
}

inline G2Point g2_generator() {
    return G2Point::from_affine(
        Fp2{Fp{consts::kG2GenX[0]}, Fp{consts::kG2GenX[1]}},
        Fp2{Fp{consts::kG2GenY[0]}, Fp{consts::kG2GenY[1]}});
}

}  // namespace pepsi::bls
