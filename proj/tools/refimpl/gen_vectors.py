"""Emits tests/vectors/pepsi_vectors.hpp.

Every value below is computed by the reference implementation in bls_ref.py,
independently of the C++ library the tests exercise. Regenerate with
`python3 gen_vectors.py` after confirming `python3 self_check.py` passes.
"""

import hashlib
import os

from cryptography.hazmat.primitives.ciphers.aead import AESGCM
from cryptography.hazmat.primitives.kdf.pbkdf2 import PBKDF2HMAC
from cryptography.hazmat.primitives import hashes

import bls_ref as B


def fp6_to_bytes(e0, e2, e4):
    return B.fp2_to_bytes(e0) + B.fp2_to_bytes(e2) + B.fp2_to_bytes(e4)


def g1_uncompressed(pt):
    return B.fp_to_bytes(pt[0]) + B.fp_to_bytes(pt[1])


def g2_uncompressed(pt):
    return B.fp2_to_bytes(pt[0]) + B.fp2_to_bytes(pt[1])


def rand_fp2(rng):
    return (int.from_bytes(rng.fill(64), "big") % B.P,
            int.from_bytes(rng.fill(64), "big") % B.P)


def rand_fp12(rng):
    return [rand_fp2(rng) for _ in range(6)]


def main():
    rng = B.SeededRng.from_u64(0x5EED5EED)
    out = {}

    # --- tower arithmetic ---------------------------------------------------
    a2, b2 = rand_fp2(rng), rand_fp2(rng)
    out["fp2_a"] = B.fp2_to_bytes(a2)
    out["fp2_b"] = B.fp2_to_bytes(b2)
    out["fp2_mul"] = B.fp2_to_bytes(B.fp2_mul(a2, b2))
    out["fp2_inv"] = B.fp2_to_bytes(B.fp2_inv(a2))
    out["fp2_sqrt_in"] = B.fp2_to_bytes(B.fp2_sqr(a2))
    sq = B.fp2_sqrt(B.fp2_sqr(a2))

    # Normalize the root the same way the decompression path does (document:
    # either root is fine, tests accept +/-).
    out["fp2_sqrt_out"] = B.fp2_to_bytes(sq)

    a6 = [rand_fp2(rng), B.FP2_ZERO, rand_fp2(rng), B.FP2_ZERO, rand_fp2(rng), B.FP2_ZERO]
    b6 = [rand_fp2(rng), B.FP2_ZERO, rand_fp2(rng), B.FP2_ZERO, rand_fp2(rng), B.FP2_ZERO]
    m6 = B.fp12_mul(a6, b6)
    i6 = B.fp12_inv(a6)
    assert all(B.fp2_is_zero(m6[k]) for k in (1, 3, 5))
    assert all(B.fp2_is_zero(i6[k]) for k in (1, 3, 5))
    out["fp6_a"] = fp6_to_bytes(a6[0], a6[2], a6[4])
    out["fp6_b"] = fp6_to_bytes(b6[0], b6[2], b6[4])
    out["fp6_mul"] = fp6_to_bytes(m6[0], m6[2], m6[4])
    out["fp6_inv"] = fp6_to_bytes(i6[0], i6[2], i6[4])

    a12, b12 = rand_fp12(rng), rand_fp12(rng)
    out["fp12_a"] = B.gt_to_bytes(a12)
    out["fp12_b"] = B.gt_to_bytes(b12)
    out["fp12_mul"] = B.gt_to_bytes(B.fp12_mul(a12, b12))
    out["fp12_inv"] = B.gt_to_bytes(B.fp12_inv(a12))
    out["fp12_frob"] = B.gt_to_bytes(B.fp12_pow(a12, B.P))
    out["fp12_finalexp"] = B.gt_to_bytes(B.fp12_pow(a12, B.FINAL_EXP))

    # --- curve arithmetic ---------------------------------------------------
    p1 = B.hash_to_g1(b"vector-point-1", b"VEC")
    p2 = B.hash_to_g1(b"vector-point-2", b"VEC")
    out["g1_p"] = g1_uncompressed(p1)
    out["g1_q"] = g1_uncompressed(p2)
    out["g1_add"] = g1_uncompressed(B.ec_add(B.FP_FIELD, p1, p2))
    out["g1_dbl"] = g1_uncompressed(B.ec_add(B.FP_FIELD, p1, p1))
    k_scalar = B.random_scalar(rng.child(b"k"))
    out["scalar_k"] = k_scalar.to_bytes(32, "big")
    out["g1_mul"] = g1_uncompressed(B.ec_mul(B.FP_FIELD, p1, k_scalar))
    out["g1_p_compressed"] = B.g1_compress(p1)
    out["g1_inf_compressed"] = B.g1_compress(None)

    q1 = B.hash_to_g2(b"vector-point-1", b"VEC")
    q2 = B.hash_to_g2(b"vector-point-2", b"VEC")
    out["g2_p"] = g2_uncompressed(q1)
    out["g2_q"] = g2_uncompressed(q2)
    out["g2_add"] = g2_uncompressed(B.ec_add(B.FP2_FIELD, q1, q2))
    out["g2_dbl"] = g2_uncompressed(B.ec_add(B.FP2_FIELD, q1, q1))
    out["g2_mul"] = g2_uncompressed(B.ec_mul(B.FP2_FIELD, q1, k_scalar))
    out["g2_p_compressed"] = B.g2_compress(q1)

    out["g1_gen_compressed"] = B.g1_compress(B.G1_GEN)
    out["g2_gen_compressed"] = B.g2_compress(B.G2_GEN)

    # --- expand_message_xmd -------------------------------------------------
    out["xmd_empty_32"] = B.expand_message_xmd(b"", b"PEPSI-XMD-TEST", 32)
    out["xmd_abc_128"] = B.expand_message_xmd(b"abc", b"PEPSI-XMD-TEST", 128)
    out["xmd_long_256"] = B.expand_message_xmd(b"q" * 500, b"PEPSI-XMD-TEST", 256)

    # --- hash to curve with the protocol domains ----------------------------
    ident = B.encode_identity(B.canonicalize(["Temp", "Irvine, CA"]))
    out["identity_bytes"] = ident
    out["h2c_g1_ident"] = g1_uncompressed(B.hash_to_g1(ident, B.DST_H1))
    out["h2c_g2_ident"] = g2_uncompressed(B.hash_to_g2(ident, B.DST_H2))
    out["h2c_g1_empty"] = g1_uncompressed(B.hash_to_g1(b"", B.DST_H1))
    out["h2c_g2_empty"] = g2_uncompressed(B.hash_to_g2(b"", B.DST_H2))
    long_msg = bytes(range(256)) * 4
    out["h2c_g1_long"] = g1_uncompressed(B.hash_to_g1(long_msg, B.DST_H1))
    out["h2c_g2_long"] = g2_uncompressed(B.hash_to_g2(long_msg, B.DST_H2))

    # --- pairing -------------------------------------------------------------
    out["pairing_g1_g2"] = B.gt_to_bytes(B.pairing(B.G1_GEN, B.G2_GEN))
    a_sc = B.random_scalar(rng.child(b"a"))
    b_sc = B.random_scalar(rng.child(b"b"))
    out["pairing_a"] = a_sc.to_bytes(32, "big")
    out["pairing_b"] = b_sc.to_bytes(32, "big")
    pa = B.ec_mul(B.FP_FIELD, B.G1_GEN, a_sc)
    qb = B.ec_mul(B.FP2_FIELD, B.G2_GEN, b_sc)
    out["pairing_aP_Q"] = B.gt_to_bytes(B.pairing(pa, B.G2_GEN))
    out["pairing_P_bQ"] = B.gt_to_bytes(B.pairing(B.G1_GEN, qb))
    out["pairing_aP_bQ"] = B.gt_to_bytes(B.pairing(pa, qb))

    shared_gen = B.pairing(B.G1_GEN, B.G2_GEN)
    out["tag_of_pairing"] = B.derive_tag(shared_gen)
    out["key_of_pairing"] = B.derive_key(shared_gen)

    # --- protocol golden vectors ---------------------------------------------
    # z = 1: the tag is derived straight from e(H1(id), H2(id)).
    s1 = B.pairing(B.hash_to_g1(ident, B.DST_H1), B.hash_to_g2(ident, B.DST_H2))
    out["golden_z1_shared"] = B.gt_to_bytes(s1)
    out["golden_z1_tag"] = B.derive_tag(s1)

    # Full end-to-end vector with a seeded random master scalar.
    e2e_seed = 20240915
    ra_rng = B.SeededRng.from_u64(e2e_seed)
    z = B.random_scalar(ra_rng)
    out["e2e_master_scalar"] = z.to_bytes(32, "big")
    nk = B.node_key(z, ident)
    qk = B.querier_key(z, ident)
    out["e2e_node_key"] = B.g1_compress(nk)
    out["e2e_querier_key"] = B.g2_compress(qk)
    s_node = B.node_shared_secret(nk, ident)
    s_querier = B.querier_shared_secret(qk, ident)
    assert B.fp12_eq(s_node, s_querier)
    out["e2e_shared"] = B.gt_to_bytes(s_node)
    tag = B.derive_tag(s_node)
    key = B.derive_key(s_node)
    out["e2e_tag"] = tag
    out["e2e_sym_key"] = key
    payload = "74 F".encode()
    node_rng = B.SeededRng.from_u64(e2e_seed).child(b"node" + (0).to_bytes(8, "big"))
    nonce = node_rng.fill(12)
    out["e2e_nonce"] = nonce
    out["e2e_payload"] = payload
    out["e2e_report_frame"] = B.report_frame(tag, nonce, key, payload)
    out["e2e_subscription_frame"] = B.subscription_frame(tag, b"tcp://collector-7")

    # Key files ("PEPK" container).
    def key_file(role, identity, point_bytes):
        return (b"PEPK" + bytes([1]) + bytes([role])
                + len(identity).to_bytes(2, "big") + identity + point_bytes)

    out["e2e_node_key_file"] = key_file(0, ident, B.g1_compress(nk))
    out["e2e_querier_key_file"] = key_file(1, ident, B.g2_compress(qk))

    # Master key file ("PEPM" container), AES-256-GCM under a PBKDF2 key.
    # Draw order during setup: scalar (64 bytes), salt (16), nonce (12).
    setup_rng = B.SeededRng.from_u64(42)
    z42 = B.random_scalar(setup_rng)
    salt = setup_rng.fill(16)
    m_nonce = setup_rng.fill(12)
    iters = 16384
    header = b"PEPM" + bytes([1]) + iters.to_bytes(4, "big") + salt + m_nonce
    kek = PBKDF2HMAC(algorithm=hashes.SHA256(), length=32, salt=salt,
                     iterations=iters).derive(b"correct horse")
    ct = AESGCM(kek).encrypt(m_nonce, z42.to_bytes(32, "big"), header)
    out["master_seed42_scalar"] = z42.to_bytes(32, "big")
    out["master_seed42_file"] = header + ct

    # --- deterministic rng ----------------------------------------------------
    r42 = B.SeededRng.from_u64(42)
    out["rng_seed42_stream"] = r42.fill(64)
    r42b = B.SeededRng.from_u64(42)
    out["rng_seed42_u64s"] = b"".join(r42b.next_u64().to_bytes(8, "big") for _ in range(4))
    child = B.SeededRng.from_u64(42).child(b"node" + (3).to_bytes(8, "big"))
    out["rng_child_stream"] = child.fill(32)
    out["scalar_seed42"] = B.random_scalar(B.SeededRng.from_u64(42)).to_bytes(32, "big")
    out["scalar_seed43"] = B.random_scalar(B.SeededRng.from_u64(43)).to_bytes(32, "big")

    # --- scenario oracle -------------------------------------------------------
    # Mirrors the simulator's draw order; the expected delivery count is a pure
    # plaintext computation over label indices.
    def scenario_expected(seed, num_nodes, num_queriers, num_labels, density,
                          reports_per_node):
        srng = B.SeededRng.from_u64(seed)
        labels = [srng.uniform(num_labels) for _ in range(num_nodes)]
        threshold = (1 << 64) if density >= 1.0 else int(density * float(1 << 64))
        subs = [[srng.next_u64() < threshold for _ in range(num_labels)]
                for _ in range(num_queriers)]
        subs_per_label = [sum(1 for q in range(num_queriers) if subs[q][l])
                          for l in range(num_labels)]
        total = sum(reports_per_node * subs_per_label[l] for l in labels)
        n_subs = sum(sum(1 for v in row if v) for row in subs)
        return total, n_subs

    exp_a, subs_a = scenario_expected(7, 10, 10, 5, 0.5, 10)
    out_scalars = {
        "kScenarioSeed7Deliveries": exp_a,
        "kScenarioSeed7Subscriptions": subs_a,
    }
    exp_b, subs_b = scenario_expected(1234, 3, 4, 2, 0.75, 5)
    out_scalars["kScenarioSeed1234Deliveries"] = exp_b
    out_scalars["kScenarioSeed1234Subscriptions"] = subs_b

    # --- emit -------------------------------------------------------------------
    lines = [
        "// Generated by tools/refimpl/gen_vectors.py -- do not edit by hand.",
        "// All expected values come from the reference implementation in",
        "// tools/refimpl/bls_ref.py (see self_check.py for its validation).",
        "#pragma once",
        "",
        "#include <cstdint>",
        "#include <string_view>",
        "",
        "namespace pepsi::vectors {",
        "",
    ]
    for name, value in out.items():
        cname = "k" + "".join(w.capitalize() for w in name.split("_"))
        lines.append(f'inline constexpr std::string_view {cname} =')
        h = value.hex()
        for i in range(0, max(len(h), 1), 96):
            chunk = h[i:i + 96]
            sep = ";" if i + 96 >= len(h) else ""
            lines.append(f'    "{chunk}"{sep}')
        lines.append("")
    for name, value in out_scalars.items():
        lines.append(f"inline constexpr uint64_t {name} = {value};")
    lines += ["", "}  // namespace pepsi::vectors", ""]

    path = os.path.join(os.path.dirname(__file__), "..", "..",
                        "tests", "vectors", "pepsi_vectors.hpp")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {os.path.normpath(path)} ({len(out)} byte vectors, "
          f"{len(out_scalars)} scalar vectors)")
    print(f"scenario(seed=7): deliveries={exp_a} subscriptions={subs_a}")
    print(f"scenario(seed=1234): deliveries={exp_b} subscriptions={subs_b}")


if __name__ == "__main__":
    main()
