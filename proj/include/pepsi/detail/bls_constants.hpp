// Generated by tools/refimpl/gen_constants.py -- do not edit by hand.
#pragma once

#include <array>
#include <cstdint>

namespace pepsi::bls::consts {

using Limbs6 = std::array<uint64_t, 6>;
using Limbs4 = std::array<uint64_t, 4>;
using Fp2Limbs = std::array<Limbs6, 2>;

// Base field p (381 bits), Montgomery radix 2^384.
inline constexpr Limbs6 kP = {0xb9feffffffffaaabull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull};
inline constexpr uint64_t kPInv = 0x89f3fffcfffcfffdull;  // -p^-1 mod 2^64
inline constexpr Limbs6 kFpOne = {0x760900000002fffdull, 0xebf4000bc40c0002ull, 0x5f48985753c758baull, 0x77ce585370525745ull, 0x5c071a97a256ec6dull, 0x15f65ec3fa80e493ull};  // mont(1)
inline constexpr Limbs6 kFpR2 = {0xf4df1f341c341746ull, 0x0a76e6a609d104f1ull, 0x8de5476c4c95b6d5ull, 0x67eb88a9939d83c0ull, 0x9a793e85b519952dull, 0x11988fe592cae3aaull};  // mont(2^384)

// Scalar field r (255 bits), Montgomery radix 2^256.
inline constexpr Limbs4 kR = {0xffffffff00000001ull, 0x53bda402fffe5bfeull, 0x3339d80809a1d805ull, 0x73eda753299d7d48ull};
inline constexpr uint64_t kRInv = 0xfffffffeffffffffull;
inline constexpr Limbs4 kFrOne = {0x00000001fffffffeull, 0x5884b7fa00034802ull, 0x998c4fefecbc4ff5ull, 0x1824b159acc5056full};
inline constexpr Limbs4 kFrR2 = {0xc999e990f3f29c6dull, 0x2b6cedcb87925c23ull, 0x05d314967254398full, 0x0748d9d99f59ff11ull};

// Powering exponents, big-endian bytes.
// p - 2 (Fermat inversion)
inline constexpr std::array<uint8_t, 48> kFpInvExp = {0x1a, 0x01, 0x11, 0xea, 0x39, 0x7f, 0xe6, 0x9a, 0x4b, 0x1b, 0xa7, 0xb6, 0x43, 0x4b, 0xac, 0xd7, 0x64, 0x77, 0x4b, 0x84, 0xf3, 0x85, 0x12, 0xbf, 0x67, 0x30, 0xd2, 0xa0, 0xf6, 0xb0, 0xf6, 0x24, 0x1e, 0xab, 0xff, 0xfe, 0xb1, 0x53, 0xff, 0xff, 0xb9, 0xfe, 0xff, 0xff, 0xff, 0xff, 0xaa, 0xa9};
// (p + 1) / 4 (p = 3 mod 4)
inline constexpr std::array<uint8_t, 48> kFpSqrtExp = {0x06, 0x80, 0x44, 0x7a, 0x8e, 0x5f, 0xf9, 0xa6, 0x92, 0xc6, 0xe9, 0xed, 0x90, 0xd2, 0xeb, 0x35, 0xd9, 0x1d, 0xd2, 0xe1, 0x3c, 0xe1, 0x44, 0xaf, 0xd9, 0xcc, 0x34, 0xa8, 0x3d, 0xac, 0x3d, 0x89, 0x07, 0xaa, 0xff, 0xff, 0xac, 0x54, 0xff, 0xff, 0xee, 0x7f, 0xbf, 0xff, 0xff, 0xff, 0xea, 0xab};
// (p - 1) / 2
inline constexpr std::array<uint8_t, 48> kFpLegendreExp = {0x0d, 0x00, 0x88, 0xf5, 0x1c, 0xbf, 0xf3, 0x4d, 0x25, 0x8d, 0xd3, 0xdb, 0x21, 0xa5, 0xd6, 0x6b, 0xb2, 0x3b, 0xa5, 0xc2, 0x79, 0xc2, 0x89, 0x5f, 0xb3, 0x98, 0x69, 0x50, 0x7b, 0x58, 0x7b, 0x12, 0x0f, 0x55, 0xff, 0xff, 0x58, 0xa9, 0xff, 0xff, 0xdc, 0xff, 0x7f, 0xff, 0xff, 0xff, 0xd5, 0x55};
// r
inline constexpr std::array<uint8_t, 32> kGroupOrder = {0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8, 0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe, 0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x01};
// r - 2
inline constexpr std::array<uint8_t, 32> kFrInvExp = {0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8, 0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe, 0x5b, 0xfe, 0xff, 0xff, 0xff, 0xfe, 0xff, 0xff, 0xff, 0xff};
// |x|; the curve parameter x is negative
inline constexpr std::array<uint8_t, 8> kMillerLoopCount = {0xd2, 0x01, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00};
// (x - 1)^2 / 3
inline constexpr std::array<uint8_t, 16> kH1Cofactor = {0x39, 0x6c, 0x8c, 0x00, 0x55, 0x55, 0xe1, 0x56, 0x8c, 0x00, 0xaa, 0xab, 0x00, 0x00, 0xaa, 0xab};
// (x^8 - 4x^7 + 5x^6 - 4x^4 + 6x^3 - 4x^2 - 4x + 13) / 9
inline constexpr std::array<uint8_t, 64> kH2Cofactor = {0x05, 0xd5, 0x43, 0xa9, 0x54, 0x14, 0xe7, 0xf1, 0x09, 0x1d, 0x50, 0x79, 0x28, 0x76, 0xa2, 0x02, 0xcd, 0x91, 0xde, 0x45, 0x47, 0x08, 0x5a, 0xba, 0xa6, 0x8a, 0x20, 0x5b, 0x2e, 0x5a, 0x7d, 0xdf, 0xa6, 0x28, 0xf1, 0xcb, 0x4d, 0x9e, 0x82, 0xef, 0x21, 0x53, 0x7e, 0x29, 0x3a, 0x66, 0x91, 0xae, 0x16, 0x16, 0xec, 0x6e, 0x78, 0x6f, 0x0c, 0x70, 0xcf, 0x1c, 0x38, 0xe3, 0x1c, 0x72, 0x38, 0xe5};
// 3 (p^4 - p^2 + 1) / r, reference route
inline constexpr std::array<uint8_t, 159> kHardPartExp = {0x2e, 0x39, 0x41, 0xb8, 0x81, 0x77, 0x05, 0x42, 0x37, 0xaa, 0x49, 0x4c, 0x15, 0x9c, 0xdc, 0x7b, 0x69, 0xb9, 0xac, 0xc2, 0xcc, 0x45, 0xea, 0xbc, 0xf1, 0x32, 0x96, 0xf7, 0xa8, 0x3f, 0xce, 0x8d, 0x69, 0x01, 0x2b, 0x6d, 0x18, 0x3f, 0x47, 0xe3, 0xae, 0x66, 0x2e, 0x47, 0xa2, 0x4e, 0xa0, 0xb0, 0xf5, 0x83, 0x6b, 0xa8, 0x2b, 0x62, 0xde, 0x87, 0x7c, 0x5e, 0x22, 0xf2, 0x63, 0x94, 0x11, 0x61, 0x63, 0xcb, 0xf0, 0x0b, 0xf5, 0x66, 0xe4, 0x6c, 0x9a, 0xe9, 0x62, 0x53, 0x94, 0xf5, 0x94, 0x6a, 0x6a, 0x2b, 0x0a, 0xb1, 0xc4, 0x75, 0x26, 0x37, 0xd4, 0x7f, 0x63, 0x9b, 0x68, 0xa6, 0x30, 0xb4, 0x15, 0xc7, 0xda, 0x45, 0x4d, 0x48, 0x63, 0x8c, 0x72, 0x17, 0x8b, 0xc7, 0x6a, 0x79, 0x1c, 0x65, 0x74, 0x22, 0x0c, 0x23, 0xe5, 0xb6, 0xcc, 0x8a, 0x65, 0xdb, 0xc1, 0xcc, 0x35, 0xfe, 0x5a, 0x55, 0x4e, 0x72, 0x7d, 0x12, 0x9b, 0xe6, 0xa3, 0xb1, 0x16, 0xbb, 0xa5, 0x9a, 0x18, 0x12, 0x3a, 0xef, 0xcb, 0x38, 0x00, 0xa6, 0x1a, 0x66, 0xd5, 0xaf, 0x44, 0x4b, 0xdc, 0xaa, 0xab, 0x2f, 0x6b};

// Curve coefficients (Montgomery form).
inline constexpr Limbs6 kCurveB = {0xaa270000000cfff3ull, 0x53cc0032fc34000aull, 0x478fe97a6b0a807full, 0xb1d37ebee6ba24d7ull, 0x8ec9733bbf78ab2full, 0x09d645513d83de7eull};      // E: y^2 = x^3 + 4
inline constexpr Limbs6 kCurveB3 = {0x447600000027552eull, 0xdcb8009a43480020ull, 0x6f7ee9ce4a6e8b59ull, 0xb10330b7c0a95bc6ull, 0x6140b1fcfb1e54b7ull, 0x0381be097f0bb4e1ull};
inline constexpr Fp2Limbs kTwistB = {{Limbs6{0xaa270000000cfff3ull, 0x53cc0032fc34000aull, 0x478fe97a6b0a807full, 0xb1d37ebee6ba24d7ull, 0x8ec9733bbf78ab2full, 0x09d645513d83de7eull}, Limbs6{0xaa270000000cfff3ull, 0x53cc0032fc34000aull, 0x478fe97a6b0a807full, 0xb1d37ebee6ba24d7ull, 0x8ec9733bbf78ab2full, 0x09d645513d83de7eull}}};   // E': y^2 = x^3 + 4(1+u)
inline constexpr Fp2Limbs kTwistB3 = {{Limbs6{0x447600000027552eull, 0xdcb8009a43480020ull, 0x6f7ee9ce4a6e8b59ull, 0xb10330b7c0a95bc6ull, 0x6140b1fcfb1e54b7ull, 0x0381be097f0bb4e1ull}, Limbs6{0x447600000027552eull, 0xdcb8009a43480020ull, 0x6f7ee9ce4a6e8b59ull, 0xb10330b7c0a95bc6ull, 0x6140b1fcfb1e54b7ull, 0x0381be097f0bb4e1ull}}};
inline constexpr Fp2Limbs kXi = {{Limbs6{0x760900000002fffdull, 0xebf4000bc40c0002ull, 0x5f48985753c758baull, 0x77ce585370525745ull, 0x5c071a97a256ec6dull, 0x15f65ec3fa80e493ull}, Limbs6{0x760900000002fffdull, 0xebf4000bc40c0002ull, 0x5f48985753c758baull, 0x77ce585370525745ull, 0x5c071a97a256ec6dull, 0x15f65ec3fa80e493ull}}};       // tower non-residue 1 + u

// Standard generators (affine, Montgomery form).
inline constexpr Limbs6 kG1GenX = {0x5cb38790fd530c16ull, 0x7817fc679976fff5ull, 0x154f95c7143ba1c1ull, 0xf0ae6acdf3d0e747ull, 0xedce6ecc21dbf440ull, 0x120177419e0bfb75ull};
inline constexpr Limbs6 kG1GenY = {0xbaac93d50ce72271ull, 0x8c22631a7918fd8eull, 0xdd595f13570725ceull, 0x51ac582950405194ull, 0x0e1c8c3fad0059c0ull, 0x0bbc3efc5008a26aull};
inline constexpr Fp2Limbs kG2GenX = {{Limbs6{0xf5f28fa202940a10ull, 0xb3f5fb2687b4961aull, 0xa1a893b53e2ae580ull, 0x9894999d1a3caee9ull, 0x6f67b7631863366bull, 0x058191924350bcd7ull}, Limbs6{0xa5a9c0759e23f606ull, 0xaaa0c59dbccd60c3ull, 0x3bb17e18e2867806ull, 0x1b1ab6cc8541b367ull, 0xc2b6ed0ef2158547ull, 0x11922a097360edf3ull}}};
inline constexpr Fp2Limbs kG2GenY = {{Limbs6{0x4c730af860494c4aull, 0x597cfa1f5e369c5aull, 0xe7e6856caa0a635aull, 0xbbefb5e96e0d495full, 0x07d3a975f0ef25a2ull, 0x0083fd8e7e80dae5ull}, Limbs6{0xadc0fc92df64b05dull, 0x18aa270a2b1461dcull, 0x86adac6a3be4eba0ull, 0x79495c4ec93da33aull, 0xe7175850a43ccaedull, 0x0b2bc2a163de1bf2ull}}};

// Frobenius coefficients xi^(k (p-1) / 6) for the w^k basis slots.
inline constexpr Fp2Limbs kFrob1Gamma1 = {{Limbs6{0x07089552b319d465ull, 0xc6695f92b50a8313ull, 0x97e83cccd117228full, 0xa35baecab2dc29eeull, 0x1ce393ea5daace4dull, 0x08f2220fb0fb66ebull}, Limbs6{0xb2f66aad4ce5d646ull, 0x5842a06bfc497cecull, 0xcf4895d42599d394ull, 0xc11b9cba40a8e8d0ull, 0x2e3813cbe5a0de89ull, 0x110eefda88847fafull}}};
inline constexpr Fp2Limbs kFrob1Gamma2 = {{Limbs6{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, Limbs6{0xcd03c9e48671f071ull, 0x5dab22461fcda5d2ull, 0x587042afd3851b95ull, 0x8eb60ebe01bacb9eull, 0x03f97d6e83d050d2ull, 0x18f0206554638741ull}}};
inline constexpr Fp2Limbs kFrob1Gamma3 = {{Limbs6{0x7bcfa7a25aa30fdaull, 0xdc17dec12a927e7cull, 0x2f088dd86b4ebef1ull, 0xd1ca2087da74d4a7ull, 0x2da2596696cebc1dull, 0x0e2b7eedbbfd87d2ull}, Limbs6{0x7bcfa7a25aa30fdaull, 0xdc17dec12a927e7cull, 0x2f088dd86b4ebef1ull, 0xd1ca2087da74d4a7ull, 0x2da2596696cebc1dull, 0x0e2b7eedbbfd87d2ull}}};
inline constexpr Fp2Limbs kFrob1Gamma4 = {{Limbs6{0x890dc9e4867545c3ull, 0x2af322533285a5d5ull, 0x50880866309b7e2cull, 0xa20d1b8c7e881024ull, 0x14e4f04fe2db9068ull, 0x14e56d3f1564853aull}, Limbs6{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}}};
inline constexpr Fp2Limbs kFrob1Gamma5 = {{Limbs6{0x82d83cf50dbce43full, 0xa2813e53df9d018full, 0xc6f0caa53c65e181ull, 0x7525cf528d50fe95ull, 0x4a85ed50f4798a6bull, 0x171da0fd6cf8eebdull}, Limbs6{0x3726c30af242c66cull, 0x7c2ac1aad1b6fe70ull, 0xa04007fbba4b14a2ull, 0xef517c3266341429ull, 0x0095ba654ed2226bull, 0x02e370eccc86f7ddull}}};

// Shallue-van de Woestijne map constants (RFC 9380 section 6.6.1 naming).
inline constexpr Limbs6 kSvdwG1Z = {0xcbe1fffffff6000aull, 0x9827ffd8c7d7fff7ull, 0x17b8aedce8bcd83bull, 0xc5fad9948998326eull, 0xcd3da75be2de413dull, 0x0c201972bcfd0614ull};
inline constexpr Limbs6 kSvdwG1C1 = {0xed1cffffffb455a1ull, 0x3283fed73d7bffc1ull, 0x804ac4babeea4207ull, 0x15c7f6e3eeff9fb8ull, 0x9985b69dac1a42feull, 0x0ef2e2b0fc697ad0ull};            // g(Z)
inline constexpr Limbs6 kSvdwG1C2 = {0xd40e00000004aaa6ull, 0x529800124d680003ull, 0x5b547b3282528a06ull, 0x8179debaaeb8f988ull, 0xe47cd40851dc8c38ull, 0x13f10530db01638full};  // -Z/2
inline constexpr Limbs6 kSvdwG1C3 = {0xa79d7ec1bb728f69ull, 0xde71ffc7bead6157ull, 0xfaee511a2882c350ull, 0x92d5303a3823f741ull, 0x70a8555ff782f798ull, 0x181220a203579aecull};           // sqrt(-g(Z) 3Z^2), sgn0 = 0
inline constexpr Limbs6 kSvdwG1C4 = {0xf33dda12f68fe05aull, 0x124b8e6490134267ull, 0x75b3ebbc407665ceull, 0x260fd93e25abd98aull, 0xd4054c95e27eb430ull, 0x039067234fadfb1full};           // -4 g(Z) / (3 Z^2)

inline constexpr Fp2Limbs kSvdwG2Z = {{Limbs6{0x43f5fffffffcaaaeull, 0x32b7fff2ed47fffdull, 0x07e83a49a2e99d69ull, 0xeca8f3318332bb7aull, 0xef148d1ea0f4c069ull, 0x040ab3263eff0206ull}, Limbs6{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}}};
inline constexpr Fp2Limbs kSvdwG2C1 = {{Limbs6{0xee1d00000009aaa1ull, 0x86840025e97c0007ull, 0x4f7823c40df41de8ull, 0x9e7c71f069ece051ull, 0x7dde005a606d6b99ull, 0x0de0f8777c82e085ull}, Limbs6{0xaa270000000cfff3ull, 0x53cc0032fc34000aull, 0x478fe97a6b0a807full, 0xb1d37ebee6ba24d7ull, 0x8ec9733bbf78ab2full, 0x09d645513d83de7eull}}};
inline constexpr Fp2Limbs kSvdwG2C2 = {{Limbs6{0x1804000000015554ull, 0x855000053ab00001ull, 0x633cb57c253c276full, 0x6e22d1ec31ebb502ull, 0xd3916126f2d14ca2ull, 0x17fbb8571a006596ull}, Limbs6{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}}};
inline constexpr Fp2Limbs kSvdwG2C3 = {{Limbs6{0x3bd8d86de6303e44ull, 0x697376c820a968aeull, 0x4ad2b457d282a50dull, 0x3056d97ecd8e9378ull, 0xfab1c35c3fd6f0e7ull, 0x0c592c60126f8172ull}, Limbs6{0x1dec6c36f3181f22ull, 0xb4b9bb641054b457ull, 0x25695a2be9415286ull, 0x982b6cbf66c749bcull, 0x7d58e1ae1feb7873ull, 0x062c96300937c0b9ull}}};
inline constexpr Fp2Limbs kSvdwG2C4 = {{Limbs6{0x0fd7fffffff2aab8ull, 0xcadfffcbb51ffff5ull, 0x1fa0e9268ba675a4ull, 0xb2a3ccc60ccaede8ull, 0xbc52347a83d301a7ull, 0x102acc98fbfc081bull}, Limbs6{0xbfcaaaaaaa98e3a0ull, 0x0e7fffba46d55546ull, 0xd4d68c3364ddf231ull, 0x43851108110e928aull, 0x506d9b4e0519578aull, 0x158e66214ffab57aull}}};

}  // namespace pepsi::bls::consts
