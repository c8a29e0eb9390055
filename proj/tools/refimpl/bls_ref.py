"""Reference implementation of the BLS12-381 pairing stack and the PEPSI
protocol derivations, written for clarity rather than speed.

Everything here is textbook: affine point arithmetic, schoolbook polynomial
towers, final exponentiation by plain integer powering. The C++ library under
src/ uses projective coordinates, Montgomery arithmetic and a structured
final-exponentiation chain; this module is the independent route the frozen
test vectors come from. Keep the two codebases free of shared shortcuts.

Run `python3 self_check.py` after editing anything in this file.
"""

import hashlib

# ---------------------------------------------------------------------------
# Curve constants. The parameter x generates the whole family; p and r are
# checked against their polynomial forms in self_check.py.
# ---------------------------------------------------------------------------

X_PARAM = -0xD201000000010000

P = 0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFAAAB
R_ORDER = 0x73EDA753299D7D483339D80809A1D80553BDA402FFFE5BFEFFFFFFFF00000001

G1_X = 0x17F1D3A73197D7942695638C4FA9AC0FC3688C4F9774B905A14E3A3F171BAC586C55E83FF97A1AEFFB3AF00ADB22C6BB
G1_Y = 0x08B3F481E3AAA0F1A09E30ED741D8AE4FCF5E095D5D00AF600DB18CB2C04B3EDD03CC744A2888AE40CAA232946C5E7E1

G2_X0 = 0x024AA2B2F08F0A91260805272DC51051C6E47AD4FA403B02B4510B647AE3D1770BAC0326A805BBEFD48056C8C121BDB8
G2_X1 = 0x13E02B6052719F607DACD3A088274F65596BD0D09920B61AB5DA61BBDC7F5049334CF11213945D57E5AC7D055D042B7E
G2_Y0 = 0x0CE5D527727D6E118CC9CDC6DA2E351AADFD9BAA8CBDD3A76D429A695160D12C923AC9CC3BACA289E193548608B82801
G2_Y1 = 0x0606C4A02EA734CC32ACD2B02BC28B99CB3E287E85A763AF267492AB572E99AB3F370D275CEC1DA1AAA9075FF05F79BE

B_G1 = 4                  # E  : y^2 = x^3 + 4         over Fp
B_G2 = (4, 4)             # E' : y^2 = x^3 + 4(1 + u)  over Fp2

H1_COFACTOR = (X_PARAM - 1) ** 2 // 3
H2_COFACTOR = (X_PARAM ** 8 - 4 * X_PARAM ** 7 + 5 * X_PARAM ** 6 - 4 * X_PARAM ** 4
               + 6 * X_PARAM ** 3 - 4 * X_PARAM ** 2 - 4 * X_PARAM + 13) // 9

# Final exponentiation: e = m^(3 * (p^12 - 1) / r). The factor 3 comes from
# the Hayashida-Hayasaka-Teruya decomposition of the hard part, which the C++
# side evaluates as (x-1)^2 * (x+p) * (x^2+p^2-1) + 3; composing a fixed cube
# with a pairing keeps bilinearity and non-degeneracy (gcd(3, r) = 1).
FINAL_EXP = 3 * (P ** 12 - 1) // R_ORDER
HARD_EXP = 3 * (P ** 4 - P ** 2 + 1) // R_ORDER


# ---------------------------------------------------------------------------
# Fp
# ---------------------------------------------------------------------------

def fp_inv(a):
    return pow(a, P - 2, P)


def fp_sqrt(a):
    """p = 3 mod 4. Returns None when a is not a square."""
    s = pow(a, (P + 1) // 4, P)
    return s if s * s % P == a % P else None


def fp_is_square(a):
    return a % P == 0 or pow(a, (P - 1) // 2, P) == 1


def fp_sgn0(a):
    return a & 1


# ---------------------------------------------------------------------------
# Fp2 = Fp[u] / (u^2 + 1), elements are (c0, c1) tuples
# ---------------------------------------------------------------------------

FP2_ZERO = (0, 0)
FP2_ONE = (1, 0)
XI = (1, 1)  # the Fp6/Fp12 tower non-residue 1 + u


def fp2_add(a, b):
    return ((a[0] + b[0]) % P, (a[1] + b[1]) % P)


def fp2_sub(a, b):
    return ((a[0] - b[0]) % P, (a[1] - b[1]) % P)


def fp2_neg(a):
    return (-a[0] % P, -a[1] % P)


def fp2_mul(a, b):
    return ((a[0] * b[0] - a[1] * b[1]) % P, (a[0] * b[1] + a[1] * b[0]) % P)


def fp2_muls(a, k):
    return (a[0] * k % P, a[1] * k % P)


def fp2_sqr(a):
    return fp2_mul(a, a)


def fp2_conj(a):
    return (a[0], -a[1] % P)


def fp2_norm(a):
    return (a[0] * a[0] + a[1] * a[1]) % P


def fp2_inv(a):
    n = fp_inv(fp2_norm(a))
    return (a[0] * n % P, -a[1] * n % P)


def fp2_is_zero(a):
    return a[0] % P == 0 and a[1] % P == 0


def fp2_is_square(a):
    return fp2_is_zero(a) or fp_is_square(fp2_norm(a))


def fp2_sqrt(a):
    """Norm-based square root for p = 3 mod 4. Returns None for non-squares."""
    if fp2_is_zero(a):
        return FP2_ZERO
    x, y = a[0] % P, a[1] % P
    if y == 0:
        s = fp_sqrt(x)
        if s is not None:
            return (s, 0)
        return (0, fp_sqrt(-x % P))
    n = fp_sqrt(fp2_norm(a))
    if n is None:
        return None
    lam = (x + n) * fp_inv(2) % P
    c = fp_sqrt(lam)
    if c is None:
        lam = (x - n) * fp_inv(2) % P
        c = fp_sqrt(lam)
        if c is None:
            return None
    d = y * fp_inv(2 * c % P) % P
    cand = (c, d)
    return cand if fp2_sqr(cand) == (x, y) else None


def fp2_sgn0(a):
    # RFC 9380 sgn0 for extension fields.
    s0 = a[0] & 1
    z0 = a[0] % P == 0
    return s0 | (int(z0) & (a[1] & 1))


def fp2_pow(a, e):
    acc = FP2_ONE
    base = a
    while e:
        if e & 1:
            acc = fp2_mul(acc, base)
        base = fp2_sqr(base)
        e >>= 1
    return acc


# ---------------------------------------------------------------------------
# Fp12 = Fp2[w] / (w^6 - xi), elements are lists of six Fp2 coefficients.
# The nested-tower basis the serialization uses is (1, w^2, w^4, w, w^3, w^5).
# ---------------------------------------------------------------------------

FP12_ONE = [FP2_ONE, FP2_ZERO, FP2_ZERO, FP2_ZERO, FP2_ZERO, FP2_ZERO]
FP12_ZERO = [FP2_ZERO] * 6


def fp12_from_fp2(a):
    return [a, FP2_ZERO, FP2_ZERO, FP2_ZERO, FP2_ZERO, FP2_ZERO]


def fp12_from_fp(a):
    return fp12_from_fp2((a % P, 0))


def fp12_add(a, b):
    return [fp2_add(x, y) for x, y in zip(a, b)]


def fp12_sub(a, b):
    return [fp2_sub(x, y) for x, y in zip(a, b)]


def fp12_neg(a):
    return [fp2_neg(x) for x in a]


def fp12_mul(a, b):
    acc = [FP2_ZERO] * 11
    for i in range(6):
        if fp2_is_zero(a[i]):
            continue
        for j in range(6):
            acc[i + j] = fp2_add(acc[i + j], fp2_mul(a[i], b[j]))
    out = acc[:6]
    for k in range(6, 11):
        out[k - 6] = fp2_add(out[k - 6], fp2_mul(acc[k], XI))
    return out


def fp12_sqr(a):
    return fp12_mul(a, a)


def fp12_eq(a, b):
    return all((x[0] - y[0]) % P == 0 and (x[1] - y[1]) % P == 0 for x, y in zip(a, b))


def fp12_is_zero(a):
    return all(fp2_is_zero(c) for c in a)


def _poly_divmod(num, den):
    """Division in Fp2[t]; polynomials are coefficient lists, low degree first."""
    num = list(num)
    deg_d = len(den) - 1
    while deg_d >= 0 and fp2_is_zero(den[deg_d]):
        deg_d -= 1
    inv_lead = fp2_inv(den[deg_d])
    quot = [FP2_ZERO] * max(1, len(num) - deg_d)
    for k in range(len(num) - 1, deg_d - 1, -1):
        if fp2_is_zero(num[k]):
            continue
        q = fp2_mul(num[k], inv_lead)
        quot[k - deg_d] = q
        for j in range(deg_d + 1):
            num[k - deg_d + j] = fp2_sub(num[k - deg_d + j], fp2_mul(q, den[j]))
    return quot, num[:deg_d]


def fp12_inv(a):
    """Extended Euclid in Fp2[t] against t^6 - xi."""
    modulus = [fp2_neg(XI), FP2_ZERO, FP2_ZERO, FP2_ZERO, FP2_ZERO, FP2_ZERO, FP2_ONE]
    r0, r1 = modulus, list(a)
    s0, s1 = [FP2_ZERO], [FP2_ONE]

    def deg(poly):
        for k in range(len(poly) - 1, -1, -1):
            if not fp2_is_zero(poly[k]):
                return k
        return -1

    def p_mul(x, y):
        out = [FP2_ZERO] * (len(x) + len(y) - 1)
        for i, xi_ in enumerate(x):
            if fp2_is_zero(xi_):
                continue
            for j, yj in enumerate(y):
                out[i + j] = fp2_add(out[i + j], fp2_mul(xi_, yj))
        return out

    def p_sub(x, y):
        n = max(len(x), len(y))
        x = x + [FP2_ZERO] * (n - len(x))
        y = y + [FP2_ZERO] * (n - len(y))
        return [fp2_sub(a_, b_) for a_, b_ in zip(x, y)]

    while deg(r1) > 0:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, p_sub(s0, p_mul(q, s1))
    assert deg(r1) == 0, "element not invertible"
    lead_inv = fp2_inv(r1[0])
    out = [fp2_mul(c, lead_inv) for c in s1]
    out = out + [FP2_ZERO] * (6 - len(out))
    return out[:6]


def fp12_pow(a, e):
    if e < 0:
        return fp12_pow(fp12_inv(a), -e)
    acc = FP12_ONE
    base = a
    while e:
        if e & 1:
            acc = fp12_mul(acc, base)
        base = fp12_sqr(base)
        e >>= 1
    return acc


def fp12_conj(a):
    """a^(p^6): negates the odd w-powers."""
    return [a[0], fp2_neg(a[1]), a[2], fp2_neg(a[3]), a[4], fp2_neg(a[5])]


# ---------------------------------------------------------------------------
# Affine curve arithmetic, generic over the coordinate field.
# Points are (x, y) tuples or None for infinity.
# ---------------------------------------------------------------------------

class Field:
    def __init__(self, add, sub, neg, mul, inv, eq_zero, from_int):
        self.add, self.sub, self.neg, self.mul = add, sub, neg, mul
        self.inv, self.eq_zero, self.from_int = inv, eq_zero, from_int


FP_FIELD = Field(lambda a, b: (a + b) % P, lambda a, b: (a - b) % P,
                 lambda a: -a % P, lambda a, b: a * b % P,
                 fp_inv, lambda a: a % P == 0, lambda k: k % P)

FP2_FIELD = Field(fp2_add, fp2_sub, fp2_neg, fp2_mul, fp2_inv, fp2_is_zero,
                  lambda k: (k % P, 0))

FP12_FIELD = Field(fp12_add, fp12_sub, fp12_neg, fp12_mul, fp12_inv,
                   fp12_is_zero, fp12_from_fp)


def ec_add(F, p1, p2):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if F.eq_zero(F.sub(x1, x2)):
        if F.eq_zero(F.add(y1, y2)):
            return None
        lam = F.mul(F.mul(F.from_int(3), F.mul(x1, x1)),
                    F.inv(F.add(y1, y1)))
    else:
        lam = F.mul(F.sub(y2, y1), F.inv(F.sub(x2, x1)))
    x3 = F.sub(F.sub(F.mul(lam, lam), x1), x2)
    y3 = F.sub(F.mul(lam, F.sub(x1, x3)), y1)
    return (x3, y3)


def ec_mul(F, pt, k):
    if k < 0:
        pt = None if pt is None else (pt[0], F.neg(pt[1]))
        k = -k
    acc = None
    add = pt
    while k:
        if k & 1:
            acc = ec_add(F, acc, add)
        add = ec_add(F, add, add)
        k >>= 1
    return acc


def g1_on_curve(pt):
    if pt is None:
        return True
    x, y = pt
    return (y * y - (x * x * x + B_G1)) % P == 0


def g2_on_curve(pt):
    if pt is None:
        return True
    x, y = pt
    lhs = fp2_sqr(y)
    rhs = fp2_add(fp2_mul(fp2_sqr(x), x), B_G2)
    return fp2_is_zero(fp2_sub(lhs, rhs))


G1_GEN = (G1_X, G1_Y)
G2_GEN = ((G2_X0, G2_X1), (G2_Y0, G2_Y1))


# ---------------------------------------------------------------------------
# hash-to-curve: expand_message_xmd(SHA-256) + Shallue-van de Woestijne map
# ---------------------------------------------------------------------------

def expand_message_xmd(msg, dst, length):
    if len(dst) > 255:
        raise ValueError("DST too long")
    ell = (length + 31) // 32
    if ell > 255:
        raise ValueError("requested length too long")
    dst_prime = dst + bytes([len(dst)])
    z_pad = bytes(64)
    l_i_b = length.to_bytes(2, "big")
    b0 = hashlib.sha256(z_pad + msg + l_i_b + b"\x00" + dst_prime).digest()
    b_prev = hashlib.sha256(b0 + b"\x01" + dst_prime).digest()
    out = b_prev
    for i in range(2, ell + 1):
        xored = bytes(a ^ b for a, b in zip(b0, b_prev))
        b_prev = hashlib.sha256(xored + bytes([i]) + dst_prime).digest()
        out += b_prev
    return out[:length]


def hash_to_field_fp(msg, dst, count):
    L = 64
    uniform = expand_message_xmd(msg, dst, count * L)
    return [int.from_bytes(uniform[i * L:(i + 1) * L], "big") % P
            for i in range(count)]


def hash_to_field_fp2(msg, dst, count):
    L = 64
    uniform = expand_message_xmd(msg, dst, count * 2 * L)
    out = []
    for i in range(count):
        c0 = int.from_bytes(uniform[(2 * i) * L:(2 * i + 1) * L], "big") % P
        c1 = int.from_bytes(uniform[(2 * i + 1) * L:(2 * i + 2) * L], "big") % P
        out.append((c0, c1))
    return out


def _find_z_svdw_fp():
    def g(x):
        return (x * x * x + B_G1) % P

    def h(z):
        return -(3 * z * z) * fp_inv(4 * g(z) % P) % P

    ctr = 1
    while True:
        for z in (ctr % P, -ctr % P):
            gz = g(z)
            if gz == 0:
                continue
            hz = h(z)
            if hz == 0 or not fp_is_square(hz):
                continue
            if fp_is_square(gz) or fp_is_square(g(-z * fp_inv(2) % P)):
                return z
        ctr += 1


def _find_z_svdw_fp2():
    def g(x):
        return fp2_add(fp2_mul(fp2_sqr(x), x), B_G2)

    def h(z):
        num = fp2_neg(fp2_muls(fp2_sqr(z), 3))
        return fp2_mul(num, fp2_inv(fp2_muls(g(z), 4)))

    candidates = []
    for ctr in range(1, 66):
        candidates.append((ctr % P, 0))
        candidates.append((-ctr % P, 0))
        candidates.append((0, ctr % P))
        candidates.append((0, -ctr % P))
        candidates.append((ctr % P, ctr % P))
        candidates.append((-ctr % P, -ctr % P))
    for z in candidates:
        gz = g(z)
        if fp2_is_zero(gz):
            continue
        hz = h(z)
        if fp2_is_zero(hz) or not fp2_is_square(hz):
            continue
        neg_half_z = fp2_muls(fp2_neg(z), fp_inv(2))
        if fp2_is_square(gz) or fp2_is_square(g(neg_half_z)):
            return z
    raise RuntimeError("no svdw Z found")


Z_SVDW_G1 = _find_z_svdw_fp()
Z_SVDW_G2 = _find_z_svdw_fp2()


def map_to_curve_svdw_g1(u):
    def g(x):
        return (x * x * x + B_G1) % P

    z = Z_SVDW_G1
    gz = g(z)
    tv1 = u * u % P * gz % P
    tv2 = (1 + tv1) % P
    tv1 = (1 - tv1) % P
    tv3 = tv1 * tv2 % P
    tv3 = fp_inv(tv3) if tv3 != 0 else 0
    tv4 = fp_sqrt(-gz * (3 * z * z) % P)
    assert tv4 is not None
    if fp_sgn0(tv4) == 1:
        tv4 = -tv4 % P
    tv5 = u * tv1 % P * tv3 % P * tv4 % P
    tv6 = -4 * gz % P * fp_inv(3 * z * z % P) % P
    x1 = (-z * fp_inv(2) - tv5) % P
    x2 = (-z * fp_inv(2) + tv5) % P
    x3 = (z + tv6 * pow(tv2 * tv2 % P * tv3 % P, 2, P)) % P
    if fp_is_square(g(x1)):
        x, y = x1, fp_sqrt(g(x1))
    elif fp_is_square(g(x2)):
        x, y = x2, fp_sqrt(g(x2))
    else:
        x, y = x3, fp_sqrt(g(x3))
    if fp_sgn0(u) != fp_sgn0(y):
        y = -y % P
    return (x, y)


def map_to_curve_svdw_g2(u):
    def g(x):
        return fp2_add(fp2_mul(fp2_sqr(x), x), B_G2)

    z = Z_SVDW_G2
    gz = g(z)
    three_z2 = fp2_muls(fp2_sqr(z), 3)
    tv1 = fp2_mul(fp2_sqr(u), gz)
    tv2 = fp2_add(FP2_ONE, tv1)
    tv1 = fp2_sub(FP2_ONE, tv1)
    prod = fp2_mul(tv1, tv2)
    tv3 = fp2_inv(prod) if not fp2_is_zero(prod) else FP2_ZERO
    tv4 = fp2_sqrt(fp2_neg(fp2_mul(gz, three_z2)))
    assert tv4 is not None
    if fp2_sgn0(tv4) == 1:
        tv4 = fp2_neg(tv4)
    tv5 = fp2_mul(fp2_mul(fp2_mul(u, tv1), tv3), tv4)
    tv6 = fp2_mul(fp2_muls(gz, -4 % P), fp2_inv(three_z2))
    neg_half_z = fp2_muls(fp2_neg(z), fp_inv(2))
    x1 = fp2_sub(neg_half_z, tv5)
    x2 = fp2_add(neg_half_z, tv5)
    t = fp2_mul(fp2_sqr(tv2), tv3)
    x3 = fp2_add(z, fp2_mul(tv6, fp2_sqr(t)))
    if fp2_is_square(g(x1)):
        x, y = x1, fp2_sqrt(g(x1))
    elif fp2_is_square(g(x2)):
        x, y = x2, fp2_sqrt(g(x2))
    else:
        x, y = x3, fp2_sqrt(g(x3))
    if fp2_sgn0(u) != fp2_sgn0(y):
        y = fp2_neg(y)
    return (x, y)


def hash_to_g1(msg, dst):
    u = hash_to_field_fp(msg, dst, 2)
    q = ec_add(FP_FIELD, map_to_curve_svdw_g1(u[0]), map_to_curve_svdw_g1(u[1]))
    return ec_mul(FP_FIELD, q, H1_COFACTOR)


def hash_to_g2(msg, dst):
    u = hash_to_field_fp2(msg, dst, 2)
    q = ec_add(FP2_FIELD, map_to_curve_svdw_g2(u[0]), map_to_curve_svdw_g2(u[1]))
    return ec_mul(FP2_FIELD, q, H2_COFACTOR)


# ---------------------------------------------------------------------------
# Pairing: untwist, textbook affine Miller loop in Fp12, integer final power.
# ---------------------------------------------------------------------------

def untwist(q):
    """E'(Fp2) -> E(Fp12): (x, y) -> (x/w^2, y/w^3); 1/w^2 = w^4/xi, 1/w^3 = w^3/xi."""
    x, y = q
    xi_inv = fp2_inv(XI)
    out_x = [FP2_ZERO] * 6
    out_y = [FP2_ZERO] * 6
    out_x[4] = fp2_mul(x, xi_inv)
    out_y[3] = fp2_mul(y, xi_inv)
    return (out_x, out_y)


def _line(F, a, b, at):
    """Evaluate the line through a and b (tangent when a == b) at point `at`."""
    xa, ya = a
    xb, yb = b
    xp, yp = at
    if F.eq_zero(F.sub(xa, xb)):
        if F.eq_zero(F.add(ya, yb)):
            return F.sub(xp, xa)  # vertical
        lam = F.mul(F.mul(F.from_int(3), F.mul(xa, xa)), F.inv(F.add(ya, ya)))
    else:
        lam = F.mul(F.sub(ya, yb), F.inv(F.sub(xa, xb)))
    return F.sub(F.sub(yp, ya), F.mul(lam, F.sub(xp, xa)))


def miller_loop(p1, q2):
    """f_{|x|, untwist(q2)}(p1) followed by inversion for the negative parameter."""
    F = FP12_FIELD
    q12 = untwist(q2)
    p12 = (fp12_from_fp(p1[0]), fp12_from_fp(p1[1]))
    t = q12
    f = FP12_ONE
    n = abs(X_PARAM)
    for bit in bin(n)[3:]:
        f = fp12_mul(fp12_sqr(f), _line(F, t, t, p12))
        t = ec_add(F, t, t)
        if bit == "1":
            f = fp12_mul(f, _line(F, t, q12, p12))
            t = ec_add(F, t, q12)
    return fp12_inv(f)  # x < 0


def pairing(p1, q2):
    if p1 is None or q2 is None:
        return FP12_ONE
    return fp12_pow(miller_loop(p1, q2), FINAL_EXP)


# ---------------------------------------------------------------------------
# Canonical serialization (shared wire convention with the C++ library)
# ---------------------------------------------------------------------------

def fp_to_bytes(a):
    return (a % P).to_bytes(48, "big")


def fp2_to_bytes(a):
    return fp_to_bytes(a[0]) + fp_to_bytes(a[1])


def _y_is_lex_larger(y, neg_y):
    return y > neg_y


def g1_compress(pt):
    if pt is None:
        out = bytearray(48)
        out[0] = 0xC0
        return bytes(out)
    x, y = pt
    out = bytearray(fp_to_bytes(x))
    out[0] |= 0x80
    if _y_is_lex_larger(y % P, -y % P):
        out[0] |= 0x20
    return bytes(out)


def g2_compress(pt):
    if pt is None:
        out = bytearray(96)
        out[0] = 0xC0
        return bytes(out)
    x, y = pt
    out = bytearray(fp_to_bytes(x[1]) + fp_to_bytes(x[0]))
    out[0] |= 0x80
    if (y[1], y[0]) > ((-y[1]) % P, (-y[0]) % P):
        out[0] |= 0x20
    return bytes(out)


def gt_to_bytes(f):
    """Coefficients in the nested-tower order (w^0, w^2, w^4, w^1, w^3, w^5)."""
    order = (0, 2, 4, 1, 3, 5)
    return b"".join(fp2_to_bytes(f[k]) for k in order)


# ---------------------------------------------------------------------------
# PEPSI protocol layer
# ---------------------------------------------------------------------------

DST_H1 = b"PEPSI-v1-H1"
DST_H2 = b"PEPSI-v1-H2"
DOM_TAG = b"PEPSI-v1-TAG"
DOM_ENC = b"PEPSI-v1-ENC"


def canonicalize(keywords):
    out = []
    for kw in keywords:
        kw = " ".join(kw.split())
        kw = "".join(c.lower() if "A" <= c <= "Z" else c for c in kw)
        if kw:
            out.append(kw)
    out = sorted(set(k.encode() for k in out))
    if not out:
        raise ValueError("empty label")
    return [k.decode() for k in out]


def encode_identity(label):
    out = b""
    for kw in label:
        data = kw.encode()
        out += len(data).to_bytes(2, "big") + data
    return out


def derive_tag(shared):
    return hashlib.sha256(DOM_TAG + gt_to_bytes(shared)).digest()[:20]


def derive_key(shared):
    return hashlib.sha256(DOM_ENC + gt_to_bytes(shared)).digest()


def node_key(z, identity):
    return ec_mul(FP_FIELD, hash_to_g1(identity, DST_H1), z)


def querier_key(z, identity):
    return ec_mul(FP2_FIELD, hash_to_g2(identity, DST_H2), z)


def node_shared_secret(nk, identity):
    return pairing(nk, hash_to_g2(identity, DST_H2))


def querier_shared_secret(qk, identity):
    return pairing(hash_to_g1(identity, DST_H1), qk)


def report_frame(tag, nonce, key, payload):
    from cryptography.hazmat.primitives.ciphers.aead import AESGCM
    ct = AESGCM(key).encrypt(nonce, payload, tag + nonce)
    return (b"PEPR" + bytes([1]) + tag + nonce
            + len(payload).to_bytes(4, "big") + ct)


def subscription_frame(tag, endpoint):
    return b"PEPS" + bytes([1]) + tag + len(endpoint).to_bytes(2, "big") + endpoint


# ---------------------------------------------------------------------------
# Deterministic RNG (mirrors the C++ SeededRng byte-for-byte)
# ---------------------------------------------------------------------------

class SeededRng:
    def __init__(self, seed_bytes=None, raw_key=None):
        if raw_key is not None:
            self.key = raw_key
        else:
            self.key = hashlib.sha256(b"PEPSI-RNG-v1" + seed_bytes).digest()
        self.ctr = 0
        self.buf = b""

    @classmethod
    def from_u64(cls, seed):
        return cls(seed_bytes=seed.to_bytes(8, "big"))

    def child(self, tag):
        return SeededRng(raw_key=hashlib.sha256(self.key + b"sub" + tag).digest())

    def fill(self, n):
        while len(self.buf) < n:
            self.buf += hashlib.sha256(self.key + b"blk"
                                       + self.ctr.to_bytes(8, "big")).digest()
            self.ctr += 1
        out, self.buf = self.buf[:n], self.buf[n:]
        return out

    def next_u64(self):
        return int.from_bytes(self.fill(8), "big")

    def uniform(self, n):
        return self.next_u64() % n


def random_scalar(rng):
    wide = rng.fill(64)
    v = int.from_bytes(wide, "big") % R_ORDER
    return v if v != 0 else 1
