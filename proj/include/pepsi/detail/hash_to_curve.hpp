// hash_to_curve for G1 and G2: expand_message_xmd -> two field elements ->
// Shallue-van de Woestijne map -> point addition -> cofactor clearing.
// The svdw constants live in bls_constants.hpp; Z = -3 for G1 and -1 for G2.
#pragma once

#include "pepsi/detail/curve.hpp"
#include "pepsi/detail/sha256.hpp"

namespace pepsi::bls {

G1Point hash_to_g1(ByteView msg, ByteView dst);
G2Point hash_to_g2(ByteView msg, ByteView dst);

// Exposed for tests.
G1Point map_to_curve_g1(const Fp& u);
G2Point map_to_curve_g2(const Fp2& u);

}  // namespace pepsi::bls
