"""Emits include/pepsi/detail/bls_constants.hpp from the reference values.

Field constants are stored in Montgomery form (little-endian 64-bit limbs) so
the C++ side never converts at runtime; exponents used for powering and
cofactor clearing are stored as big-endian byte strings.
"""

import os

import bls_ref as B

R384 = 1 << 384
R256 = 1 << 256


def limbs(v, n):
    return [(v >> (64 * i)) & 0xFFFFFFFFFFFFFFFF for i in range(n)]


def fmt_limbs(v, n):
    return "{" + ", ".join(f"0x{w:016x}ull" for w in limbs(v, n)) + "}"


def mont_p(v):
    return v * R384 % B.P


def mont_r(v):
    return v * R256 % B.R_ORDER


def fmt_fp(v):
    return fmt_limbs(mont_p(v), 6)


def fmt_fp2(v):
    return ("{{Limbs6" + fmt_limbs(mont_p(v[0]), 6)
            + ", Limbs6" + fmt_limbs(mont_p(v[1]), 6) + "}}")


def fmt_bytes(v, pad=None):
    data = v.to_bytes(pad or (v.bit_length() + 7) // 8, "big")
    body = ", ".join(f"0x{b:02x}" for b in data)
    return len(data), "{" + body + "}"


def main():
    lines = []
    add = lines.append
    add("// Generated by tools/refimpl/gen_constants.py -- do not edit by hand.")
    add("#pragma once")
    add("")
    add("#include <array>")
    add("#include <cstdint>")
    add("")
    add("namespace pepsi::bls::consts {")
    add("")
    add("using Limbs6 = std::array<uint64_t, 6>;")
    add("using Limbs4 = std::array<uint64_t, 4>;")
    add("using Fp2Limbs = std::array<Limbs6, 2>;")
    add("")

    p_inv = pow(B.P, -1, 1 << 64)
    add("// Base field p (381 bits), Montgomery radix 2^384.")
    add(f"inline constexpr Limbs6 kP = {fmt_limbs(B.P, 6)};")
    add(f"inline constexpr uint64_t kPInv = 0x{(-p_inv) % (1 << 64):016x}ull;  // -p^-1 mod 2^64")
    add(f"inline constexpr Limbs6 kFpOne = {fmt_limbs(R384 % B.P, 6)};  // mont(1)")
    add(f"inline constexpr Limbs6 kFpR2 = {fmt_limbs(R384 * R384 % B.P, 6)};  // mont(2^384)")
    add("")

    r_inv = pow(B.R_ORDER, -1, 1 << 64)
    add("// Scalar field r (255 bits), Montgomery radix 2^256.")
    add(f"inline constexpr Limbs4 kR = {fmt_limbs(B.R_ORDER, 4)};")
    add(f"inline constexpr uint64_t kRInv = 0x{(-r_inv) % (1 << 64):016x}ull;")
    add(f"inline constexpr Limbs4 kFrOne = {fmt_limbs(R256 % B.R_ORDER, 4)};")
    add(f"inline constexpr Limbs4 kFrR2 = {fmt_limbs(R256 * R256 % B.R_ORDER, 4)};")
    add("")

    add("// Powering exponents, big-endian bytes.")
    for name, val, pad, note in [
        ("kFpInvExp", B.P - 2, 48, "p - 2 (Fermat inversion)"),
        ("kFpSqrtExp", (B.P + 1) // 4, 48, "(p + 1) / 4 (p = 3 mod 4)"),
        ("kFpLegendreExp", (B.P - 1) // 2, 48, "(p - 1) / 2"),
        ("kGroupOrder", B.R_ORDER, 32, "r"),
        ("kFrInvExp", B.R_ORDER - 2, 32, "r - 2"),
        ("kMillerLoopCount", abs(B.X_PARAM), 8, "|x|; the curve parameter x is negative"),
        ("kH1Cofactor", B.H1_COFACTOR, None, "(x - 1)^2 / 3"),
        ("kH2Cofactor", B.H2_COFACTOR, None, "(x^8 - 4x^7 + 5x^6 - 4x^4 + 6x^3 - 4x^2 - 4x + 13) / 9"),
        ("kHardPartExp", B.HARD_EXP, None, "3 (p^4 - p^2 + 1) / r, reference route"),
    ]:
        n, body = fmt_bytes(val, pad)
        add(f"// {note}")
        add(f"inline constexpr std::array<uint8_t, {n}> {name} = {body};")
    add("")

    add("// Curve coefficients (Montgomery form).")
    add(f"inline constexpr Limbs6 kCurveB = {fmt_fp(4)};      // E: y^2 = x^3 + 4")
    add(f"inline constexpr Limbs6 kCurveB3 = {fmt_fp(12)};")
    add(f"inline constexpr Fp2Limbs kTwistB = {fmt_fp2((4, 4))};   // E': y^2 = x^3 + 4(1+u)")
    add(f"inline constexpr Fp2Limbs kTwistB3 = {fmt_fp2((12, 12))};")
    add(f"inline constexpr Fp2Limbs kXi = {fmt_fp2((1, 1))};       // tower non-residue 1 + u")
    add("")

    add("// Standard generators (affine, Montgomery form).")
    add(f"inline constexpr Limbs6 kG1GenX = {fmt_fp(B.G1_X)};")
    add(f"inline constexpr Limbs6 kG1GenY = {fmt_fp(B.G1_Y)};")
    add(f"inline constexpr Fp2Limbs kG2GenX = {fmt_fp2((B.G2_X0, B.G2_X1))};")
    add(f"inline constexpr Fp2Limbs kG2GenY = {fmt_fp2((B.G2_Y0, B.G2_Y1))};")
    add("")

    add("// Frobenius coefficients xi^(k (p-1) / 6) for the w^k basis slots.")
    for k in range(1, 6):
        gamma = B.fp2_pow(B.XI, k * (B.P - 1) // 6)
        add(f"inline constexpr Fp2Limbs kFrob1Gamma{k} = {fmt_fp2(gamma)};")
    add("")

    add("// Shallue-van de Woestijne map constants (RFC 9380 section 6.6.1 naming).")
    z1 = B.Z_SVDW_G1
    gz1 = (z1 ** 3 + B.B_G1) % B.P
    c3_1 = B.fp_sqrt(-gz1 * (3 * z1 * z1) % B.P)
    if B.fp_sgn0(c3_1) == 1:
        c3_1 = -c3_1 % B.P
    c4_1 = -4 * gz1 % B.P * B.fp_inv(3 * z1 * z1 % B.P) % B.P
    add(f"inline constexpr Limbs6 kSvdwG1Z = {fmt_fp(z1)};")
    add(f"inline constexpr Limbs6 kSvdwG1C1 = {fmt_fp(gz1)};            // g(Z)")
    add(f"inline constexpr Limbs6 kSvdwG1C2 = {fmt_fp(-z1 * B.fp_inv(2) % B.P)};  // -Z/2")
    add(f"inline constexpr Limbs6 kSvdwG1C3 = {fmt_fp(c3_1)};           // sqrt(-g(Z) 3Z^2), sgn0 = 0")
    add(f"inline constexpr Limbs6 kSvdwG1C4 = {fmt_fp(c4_1)};           // -4 g(Z) / (3 Z^2)")
    add("")

    z2 = B.Z_SVDW_G2
    gz2 = B.fp2_add(B.fp2_mul(B.fp2_sqr(z2), z2), B.B_G2)
    three_z2 = B.fp2_muls(B.fp2_sqr(z2), 3)
    c3_2 = B.fp2_sqrt(B.fp2_neg(B.fp2_mul(gz2, three_z2)))
    if B.fp2_sgn0(c3_2) == 1:
        c3_2 = B.fp2_neg(c3_2)
    c4_2 = B.fp2_mul(B.fp2_muls(gz2, -4 % B.P), B.fp2_inv(three_z2))
    c2_2 = B.fp2_muls(B.fp2_neg(z2), B.fp_inv(2))
    add(f"inline constexpr Fp2Limbs kSvdwG2Z = {fmt_fp2(z2)};")
    add(f"inline constexpr Fp2Limbs kSvdwG2C1 = {fmt_fp2(gz2)};")
    add(f"inline constexpr Fp2Limbs kSvdwG2C2 = {fmt_fp2(c2_2)};")
    add(f"inline constexpr Fp2Limbs kSvdwG2C3 = {fmt_fp2(c3_2)};")
    add(f"inline constexpr Fp2Limbs kSvdwG2C4 = {fmt_fp2(c4_2)};")
    add("")
    add("}  // namespace pepsi::bls::consts")
    add("")

    out = os.path.join(os.path.dirname(__file__), "..", "..",
                       "include", "pepsi", "detail", "bls_constants.hpp")
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {os.path.normpath(out)}")


if __name__ == "__main__":
    main()
