#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pepsi/detail/hash_to_curve.hpp"
#include "pepsi/detail/pairing.hpp"
#include "pepsi_vectors.hpp"
#include "test_util.hpp"

using namespace pepsi::bls;

namespace {

std::string fp12_hex(const Fp12& v) {
    std::array<uint8_t, 576> buf;
    v.to_bytes(buf);
    return testutil::to_hex(buf);
}

Fp12 fp12_from_hex(std::string_view hex) {
    auto bytes = testutil::from_hex(hex);
    auto v = Fp12::from_bytes(bytes);
    REQUIRE(v.has_value());
    return *v;
}

std::vector<uint8_t> vec_bytes(std::string_view hex) { return testutil::from_hex(hex); }

}  // namespace

TEST_CASE("expand_message_xmd matches the reference implementation") {
    auto dst_s = std::string("PEPSI-XMD-TEST");
    ByteView dst((const uint8_t*)dst_s.data(), dst_s.size());

    CHECK(testutil::to_hex(expand_message_xmd(ByteView{}, dst, 32)) ==
          pepsi::vectors::kXmdEmpty32);
    auto abc = std::string("abc");
    CHECK(testutil::to_hex(expand_message_xmd(
              ByteView((const uint8_t*)abc.data(), abc.size()), dst, 128)) ==
          pepsi::vectors::kXmdAbc128);
    std::vector<uint8_t> longmsg(500, (uint8_t)'q');
    CHECK(testutil::to_hex(expand_message_xmd(longmsg, dst, 256)) ==
          pepsi::vectors::kXmdLong256);
}

TEST_CASE("hash_to_g1 and hash_to_g2 match the reference implementation") {
    auto ident = vec_bytes(pepsi::vectors::kIdentityBytes);
    auto dst1_s = std::string("PEPSI-v1-H1");
    auto dst2_s = std::string("PEPSI-v1-H2");
    ByteView dst1((const uint8_t*)dst1_s.data(), dst1_s.size());
    ByteView dst2((const uint8_t*)dst2_s.data(), dst2_s.size());

    auto check_g1 = [&](ByteView msg, std::string_view expect_hex) {
        G1Point p = hash_to_g1(msg, dst1);
        REQUIRE(p.on_curve());
        REQUIRE(p.in_subgroup());
        Fp ax, ay;
        p.to_affine(ax, ay);
        std::array<uint8_t, 96> buf;
        ax.to_bytes(std::span(buf).subspan(0, 48));
        ay.to_bytes(std::span(buf).subspan(48, 48));
        CHECK(testutil::to_hex(buf) == expect_hex);
    };
    auto check_g2 = [&](ByteView msg, std::string_view expect_hex) {
        G2Point p = hash_to_g2(msg, dst2);
        REQUIRE(p.on_curve());
        REQUIRE(p.in_subgroup());
        Fp2 ax, ay;
        p.to_affine(ax, ay);
        std::array<uint8_t, 192> buf;
        ax.to_bytes(std::span(buf).subspan(0, 96));
        ay.to_bytes(std::span(buf).subspan(96, 96));
        CHECK(testutil::to_hex(buf) == expect_hex);
    };

    check_g1(ident, pepsi::vectors::kH2cG1Ident);
    check_g2(ident, pepsi::vectors::kH2cG2Ident);
    check_g1(ByteView{}, pepsi::vectors::kH2cG1Empty);
    check_g2(ByteView{}, pepsi::vectors::kH2cG2Empty);
    std::vector<uint8_t> longmsg;
    for (int rep = 0; rep < 4; ++rep)
        for (int i = 0; i < 256; ++i) longmsg.push_back((uint8_t)i);
    check_g1(longmsg, pepsi::vectors::kH2cG1Long);
    check_g2(longmsg, pepsi::vectors::kH2cG2Long);
}

TEST_CASE("hash outputs are deterministic, domain separated, non-identity") {
    auto msg_s = std::string("determinism probe");
    ByteView msg((const uint8_t*)msg_s.data(), msg_s.size());
    auto da = std::string("DOM-A");
    auto db = std::string("DOM-B");
    ByteView dva((const uint8_t*)da.data(), da.size());
    ByteView dvb((const uint8_t*)db.data(), db.size());

    CHECK(hash_to_g1(msg, dva) == hash_to_g1(msg, dva));
    CHECK(!(hash_to_g1(msg, dva) == hash_to_g1(msg, dvb)));
    CHECK(!hash_to_g1(msg, dva).is_identity());
    CHECK(hash_to_g2(msg, dva) == hash_to_g2(msg, dva));
    CHECK(!(hash_to_g2(msg, dva) == hash_to_g2(msg, dvb)));
    CHECK(!hash_to_g2(msg, dva).is_identity());
}

TEST_CASE("1000 distinct messages map to 1000 distinct G1 points") {
    auto dst_s = std::string("SCAN");
    ByteView dst((const uint8_t*)dst_s.data(), dst_s.size());
    std::vector<std::string> seen;
    for (int i = 0; i < 1000; ++i) {
        std::string m = "probe-" + std::to_string(i);
        G1Point p = hash_to_g1(ByteView((const uint8_t*)m.data(), m.size()), dst);
        Fp ax, ay;
        p.to_affine(ax, ay);
        std::array<uint8_t, 48> buf;
        ax.to_bytes(buf);
        seen.push_back(testutil::to_hex(buf));
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("pairing of the generators matches the reference implementation") {
    Fp12 e = pairing(g1_generator(), g2_generator());
    CHECK(fp12_hex(e) == pepsi::vectors::kPairingG1G2);
    CHECK(!e.is_one());
}

TEST_CASE("pairing vectors with scalar-multiplied inputs") {
    auto a = vec_bytes(pepsi::vectors::kPairingA);
    auto b = vec_bytes(pepsi::vectors::kPairingB);
    G1Point pa = g1_generator().mul_be_bytes(a);
    G2Point qb = g2_generator().mul_be_bytes(b);
    CHECK(fp12_hex(pairing(pa, g2_generator())) == pepsi::vectors::kPairingApQ);
    CHECK(fp12_hex(pairing(g1_generator(), qb)) == pepsi::vectors::kPairingPBq);
    CHECK(fp12_hex(pairing(pa, qb)) == pepsi::vectors::kPairingApBq);
}

TEST_CASE("bilinearity over 100 random scalar pairs") {
    std::mt19937_64 rng(0xB111);
    for (int iter = 0; iter < 100; ++iter) {
        auto wa = testutil::random_bytes(rng, 64);
        auto wb = testutil::random_bytes(rng, 64);
        Fr a = Fr::from_wide_be(wa);
        Fr b = Fr::from_wide_be(wb);
        Fr ab = a * b;
        std::array<uint8_t, 32> ba, bb, bab;
        a.to_bytes(ba);
        b.to_bytes(bb);
        ab.to_bytes(bab);

        G1Point pa = g1_generator().mul_be_bytes(ba);
        G2Point qb = g2_generator().mul_be_bytes(bb);
        Fp12 lhs = pairing(pa, qb);
        CHECK(lhs == pairing(g1_generator().mul_be_bytes(bab), g2_generator()));
        CHECK(lhs == pairing(g1_generator(), g2_generator().mul_be_bytes(bab)));
    }
}

TEST_CASE("degenerate inputs map to the GT identity") {
    CHECK(pairing(G1Point::identity(), g2_generator()).is_one());
    CHECK(pairing(g1_generator(), G2Point::identity()).is_one());
    CHECK(pairing(G1Point::identity(), G2Point::identity()).is_one());
}

TEST_CASE("GT elements have order dividing r") {
    Fp12 e = pairing(g1_generator(), g2_generator());
    Fp12 er = e.pow(consts::kGroupOrder);
    CHECK(er.is_one());
}

TEST_CASE("structured hard part agrees with plain powering") {
    std::mt19937_64 rng(0xFA57);
    for (int iter = 0; iter < 3; ++iter) {
        // Any invertible element pushed through the easy part lands in the
        // cyclotomic subgroup, which is where the structured route applies.
        Fp12 f;
        f.c0 = Fp6{Fp2{Fp::from_wide_be(testutil::random_bytes(rng, 64)),
                       Fp::from_wide_be(testutil::random_bytes(rng, 64))},
                   Fp2{Fp::from_wide_be(testutil::random_bytes(rng, 64)),
                       Fp::from_wide_be(testutil::random_bytes(rng, 64))},
                   Fp2{Fp::from_wide_be(testutil::random_bytes(rng, 64)),
                       Fp::from_wide_be(testutil::random_bytes(rng, 64))}};
        f.c1 = Fp6{Fp2{Fp::from_wide_be(testutil::random_bytes(rng, 64)),
                       Fp::from_wide_be(testutil::random_bytes(rng, 64))},
                   Fp2{Fp::from_wide_be(testutil::random_bytes(rng, 64)),
                       Fp::from_wide_be(testutil::random_bytes(rng, 64))},
                   Fp2{Fp::from_wide_be(testutil::random_bytes(rng, 64)),
                       Fp::from_wide_be(testutil::random_bytes(rng, 64))}};
        Fp12 g = final_exp_easy(f);
        CHECK(final_exp_hard(g) == g.pow(consts::kHardPartExp));
    }
}

TEST_CASE("full final exponentiation matches the reference on a raw element") {
    Fp12 a = fp12_from_hex(pepsi::vectors::kFp12A);
    CHECK(fp12_hex(final_exponentiation(a)) == pepsi::vectors::kFp12Finalexp);
}

TEST_CASE("pairing is invariant under mixed projective representations") {
    // Scale projective coordinates by a nonzero factor; the pairing must not
    // change.
    G1Point p = g1_generator();
    Fp s = Fp::from_u64(12345);
    G1Point scaled{p.x * s, p.y * s, p.z * s};
    REQUIRE(scaled == p);
    CHECK(pairing(scaled, g2_generator()) == pairing(p, g2_generator()));
}
