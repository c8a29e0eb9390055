"""Internal consistency checks for the reference implementation.

These validate the hardcoded curve constants against their defining
polynomial identities, confirm the group structure, and exercise the pairing
for bilinearity and non-degeneracy. Run before regenerating any vectors.
"""

import random

import sympy

import bls_ref as B


def check(name, cond):
    status = "ok" if cond else "FAIL"
    print(f"  {name:<58} {status}")
    if not cond:
        raise SystemExit(f"self-check failed: {name}")


def main():
    x = B.X_PARAM
    print("[constants]")
    check("p prime", sympy.isprime(B.P))
    check("r prime", sympy.isprime(B.R_ORDER))
    check("r = x^4 - x^2 + 1", B.R_ORDER == x**4 - x**2 + 1)
    check("p = (x-1)^2 r / 3 + x", B.P == (x - 1) ** 2 * B.R_ORDER // 3 + x)
    check("p = 3 mod 4", B.P % 4 == 3)
    check("h1 r = p + 1 - t (t = x+1)", B.H1_COFACTOR * B.R_ORDER == B.P + 1 - (x + 1))
    hasse = abs(B.H2_COFACTOR * B.R_ORDER - (B.P**2 + 1)) <= 2 * sympy.integer_nthroot(B.P**2, 2)[0] + 2
    check("h2 r within Hasse interval of p^2", hasse)

    # Hayashida-Hayasaka-Teruya decomposition of the hard part, checked
    # symbolically: 3 (p^4 - p^2 + 1)/r == (x-1)^2 (x+p) (x^2 + p^2 - 1) + 3.
    xs = sympy.symbols("x")
    p_poly = sympy.expand((xs - 1) ** 2 * (xs**4 - xs**2 + 1) / 3 + xs)
    r_poly = xs**4 - xs**2 + 1
    quot, rem = sympy.div(sympy.expand(3 * (p_poly**4 - p_poly**2 + 1)), r_poly, xs)
    rhs = sympy.expand((xs - 1) ** 2 * (xs + p_poly) * (xs**2 + p_poly**2 - 1) + 3)
    check("HHT hard-part identity (symbolic)",
          rem == 0 and sympy.expand(quot - rhs) == 0)
    check("HHT hard-part identity (numeric)",
          B.HARD_EXP == (x - 1) ** 2 * (x + B.P) * (x**2 + B.P**2 - 1) + 3)

    print("[groups]")
    check("G1 generator on curve", B.g1_on_curve(B.G1_GEN))
    check("G2 generator on curve", B.g2_on_curve(B.G2_GEN))
    check("r G1 = inf", B.ec_mul(B.FP_FIELD, B.G1_GEN, B.R_ORDER) is None)
    check("r G2 = inf", B.ec_mul(B.FP2_FIELD, B.G2_GEN, B.R_ORDER) is None)

    rnd = random.Random(7)

    def random_g2_curve_point():
        while True:
            x0 = rnd.randrange(B.P)
            x1 = rnd.randrange(B.P)
            rhs = B.fp2_add(B.fp2_mul(B.fp2_sqr((x0, x1)), (x0, x1)), B.B_G2)
            y = B.fp2_sqrt(rhs)
            if y is not None:
                return ((x0, x1), y)

    for i in range(2):
        q = random_g2_curve_point()
        check(f"random E'(Fp2) point killed by h2*r (#{i})",
              B.ec_mul(B.FP2_FIELD, q, B.H2_COFACTOR * B.R_ORDER) is None)

    print("[hash-to-curve]")
    print(f"  svdw Z for G1: {B.Z_SVDW_G1 if B.Z_SVDW_G1 < 100 else B.Z_SVDW_G1 - B.P}")
    z2 = tuple(c if c < 100 else c - B.P for c in B.Z_SVDW_G2)
    print(f"  svdw Z for G2: {z2}")
    h1a = B.hash_to_g1(b"check-a", b"DST-A")
    h1b = B.hash_to_g1(b"check-a", b"DST-B")
    check("hash_to_g1 on curve", B.g1_on_curve(h1a))
    check("hash_to_g1 in subgroup", B.ec_mul(B.FP_FIELD, h1a, B.R_ORDER) is None)
    check("hash_to_g1 nonzero", h1a is not None)
    check("hash_to_g1 domain-separated", h1a != h1b)
    check("hash_to_g1 deterministic", h1a == B.hash_to_g1(b"check-a", b"DST-A"))
    h2a = B.hash_to_g2(b"check-a", b"DST-A")
    h2b = B.hash_to_g2(b"check-b", b"DST-A")
    check("hash_to_g2 on curve", B.g2_on_curve(h2a))
    check("hash_to_g2 in subgroup", B.ec_mul(B.FP2_FIELD, h2a, B.R_ORDER) is None)
    check("hash_to_g2 message-separated", h2a != h2b)

    print("[pairing]")
    e_gg = B.pairing(B.G1_GEN, B.G2_GEN)
    check("e(G1, G2) != 1", not B.fp12_eq(e_gg, B.FP12_ONE))
    check("e(G1, G2)^r = 1", B.fp12_eq(B.fp12_pow(e_gg, B.R_ORDER), B.FP12_ONE))
    a = rnd.randrange(1, B.R_ORDER)
    b = rnd.randrange(1, B.R_ORDER)
    pa = B.ec_mul(B.FP_FIELD, B.G1_GEN, a)
    qb = B.ec_mul(B.FP2_FIELD, B.G2_GEN, b)
    lhs_e = B.pairing(pa, qb)
    rhs_e = B.fp12_pow(e_gg, a * b % B.R_ORDER)
    check("e(aP, bQ) = e(P, Q)^(ab)", B.fp12_eq(lhs_e, rhs_e))
    check("e(aP, Q) = e(P, aQ)",
          B.fp12_eq(B.pairing(pa, B.G2_GEN), B.pairing(B.G1_GEN, B.ec_mul(B.FP2_FIELD, B.G2_GEN, a))))
    check("e(inf, Q) = 1", B.fp12_eq(B.pairing(None, B.G2_GEN), B.FP12_ONE))

    print("[protocol]")
    ident = B.encode_identity(B.canonicalize(["Temp", "Irvine, CA"]))
    check("canonical identity bytes",
          ident == b"\x00\x0airvine, ca\x00\x04temp")
    z = 0x1F3A
    nk = B.node_key(z, ident)
    qk = B.querier_key(z, ident)
    s_node = B.node_shared_secret(nk, ident)
    s_querier = B.querier_shared_secret(qk, ident)
    check("node and querier shared secrets agree", B.fp12_eq(s_node, s_querier))
    check("tags agree", B.derive_tag(s_node) == B.derive_tag(s_querier))
    check("tag != key prefix", B.derive_tag(s_node) != B.derive_key(s_node)[:20])
    print("all self-checks passed")


if __name__ == "__main__":
    main()
