#include "pepsi/detail/hash_to_curve.hpp"

#include <stdexcept>

namespace pepsi::bls {

namespace {

// Shared svdw skeleton (RFC 9380 section 6.6.1). The per-curve constants:
//   c1 = g(Z), c2 = -Z/2, c3 = sqrt(-g(Z) (3 Z^2 + 4 A)) with sgn0 = 0,
//   c4 = -4 g(Z) / (3 Z^2 + 4 A); here A = 0.
template <class F, class Curve>
ProjPoint<Curve> svdw_map(const F& u, const F& z, const F& c1, const F& c2,
                          const F& c3, const F& c4) {
    auto g = [](const F& x) { return x.sqr() * x + Curve::b(); };

    F tv1 = u.sqr() * c1;
    F tv2 = F::one() + tv1;
    tv1 = F::one() - tv1;
    F prod = tv1 * tv2;
    F tv3 = prod.is_zero() ? F::zero() : prod.inv();
    F tv5 = u * tv1 * tv3 * c3;
    F x1 = c2 - tv5;
    F x2 = c2 + tv5;
    F t = tv2.sqr() * tv3;
    F x3 = z + c4 * t.sqr();

    F x, gx;
    if (gx = g(x1); gx.is_square()) {
        x = x1;
    } else if (gx = g(x2); gx.is_square()) {
        x = x2;
    } else {
        x = x3;
        gx = g(x3);
    }
    // One of the three candidates is always square; a miss here means the
    // field arithmetic itself is broken.
    auto y = gx.sqrt();
    if (!y) throw std::logic_error("svdw map found no square candidate");
    if (u.sgn0() != y->sgn0()) *y = -*y;
    return ProjPoint<Curve>::from_affine(x, *y);
}

}  // namespace

G1Point map_to_curve_g1(const Fp& u) {
    return svdw_map<Fp, G1Curve>(u, Fp{consts::kSvdwG1Z}, Fp{consts::kSvdwG1C1},
                                 Fp{consts::kSvdwG1C2}, Fp{consts::kSvdwG1C3},
                                 Fp{consts::kSvdwG1C4});
}

G2Point map_to_curve_g2(const Fp2& u) {
    auto f2 = [](const consts::Fp2Limbs& k) { return Fp2{Fp{k[0]}, Fp{k[1]}}; };
    return svdw_map<Fp2, G2Curve>(u, f2(consts::kSvdwG2Z), f2(consts::kSvdwG2C1),
                                  f2(consts::kSvdwG2C2), f2(consts::kSvdwG2C3),
                                  f2(consts::kSvdwG2C4));
}

G1Point hash_to_g1(ByteView msg, ByteView dst) {
    auto uniform = expand_message_xmd(msg, dst, 2 * 64);
    Fp u0 = Fp::from_wide_be(ByteView(uniform).subspan(0, 64));
    Fp u1 = Fp::from_wide_be(ByteView(uniform).subspan(64, 64));
    G1Point q = map_to_curve_g1(u0) + map_to_curve_g1(u1);
    return q.mul_be_bytes(consts::kH1Cofactor);
}

G2Point hash_to_g2(ByteView msg, ByteView dst) {
    auto uniform = expand_message_xmd(msg, dst, 4 * 64);
    ByteView view(uniform);
    Fp2 u0{Fp::from_wide_be(view.subspan(0, 64)), Fp::from_wide_be(view.subspan(64, 64))};
    Fp2 u1{Fp::from_wide_be(view.subspan(128, 64)), Fp::from_wide_be(view.subspan(192, 64))};
    G2Point q = map_to_curve_g2(u0) + map_to_curve_g2(u1);
    return q.mul_be_bytes(consts::kH2Cofactor);
}

}  // namespace pepsi::bls
