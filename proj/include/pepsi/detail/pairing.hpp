// Optimal ate pairing e : G1 x G2 -> GT for BLS12-381.
#pragma once

#include "pepsi/detail/curve.hpp"

namespace pepsi::bls {

// Full pairing including final exponentiation. Identity inputs map to the
// identity of GT.
Fp12 pairing(const G1Point& p, const G2Point& q);

// Pieces exposed for tests: the raw Miller accumulator (already conjugated
// for the negative curve parameter) and the two final-exponentiation stages.
Fp12 miller_loop(const G1Point& p, const G2Point& q);
Fp12 final_exp_easy(const Fp12& f);
Fp12 final_exp_hard(const Fp12& f);
Fp12 final_exponentiation(const Fp12& f);

}  // namespace pepsi::bls
