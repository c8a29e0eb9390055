// Fixed-width Montgomery arithmetic over 64-bit limbs. This is the inner
// loop of the whole library; everything above it (towers, curves, pairing)
// reduces to these few functions.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace pepsi::bls {

template <size_t N>
using Limbs = std::array<uint64_t, N>;

using u128 = unsigned __int128;

template <size_t N>
inline bool limbs_geq(const Limbs<N>& a, const Limbs<N>& b) {
    for (size_t i = N; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return true;
}

template <size_t N>
inline bool limbs_is_zero(const Limbs<N>& a) {
    for (uint64_t w : a)
        if (w != 0) return false;
    return true;
}

// a -= b, returns the borrow out.
template <size_t N>
inline uint64_t limbs_sub(Limbs<N>& a, const Limbs<N>& b) {
    uint64_t borrow = 0;
    for (size_t i = 0; i < N; ++i) {
        u128 cur = (u128)a[i] - b[i] - borrow;
        a[i] = (uint64_t)cur;
        borrow = (uint64_t)(cur >> 64) & 1;
    }
    return borrow;
}

// a += b, returns the carry out.
template <size_t N>
inline uint64_t limbs_add(Limbs<N>& a, const Limbs<N>& b) {
    uint64_t carry = 0;
    for (size_t i = 0; i < N; ++i) {
        u128 cur = (u128)a[i] + b[i] + carry;
        a[i] = (uint64_t)cur;
        carry = (uint64_t)(cur >> 64);
    }
    return carry;
}

// CIOS Montgomery multiplication: out = a * b * R^-1 mod m, R = 2^(64N).
// Requires m < 2^(64N - 1) and inv = -m^-1 mod 2^64; inputs below m give an
// output below m.
template <size_t N>
inline void mont_mul(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& b,
                     const Limbs<N>& m, uint64_t inv) {
    std::array<uint64_t, N + 2> t{};
    for (size_t i = 0; i < N; ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < N; ++j) {
            u128 cur = (u128)a[j] * b[i] + t[j] + carry;
            t[j] = (uint64_t)cur;
            carry = (uint64_t)(cur >> 64);
        }
        u128 cur = (u128)t[N] + carry;
        t[N] = (uint64_t)cur;
        t[N + 1] = (uint64_t)(cur >> 64);

        uint64_t k = t[0] * inv;
        cur = (u128)t[0] + (u128)k * m[0];
        carry = (uint64_t)(cur >> 64);
        for (size_t j = 1; j < N; ++j) {
            cur = (u128)t[j] + (u128)k * m[j] + carry;
            t[j - 1] = (uint64_t)cur;
            carry = (uint64_t)(cur >> 64);
        }
        cur = (u128)t[N] + carry;
        t[N - 1] = (uint64_t)cur;
        t[N] = t[N + 1] + (uint64_t)(cur >> 64);
    }
    Limbs<N> r;
    for (size_t i = 0; i < N; ++i) r[i] = t[i];
    if (t[N] != 0 || limbs_geq(r, m)) limbs_sub(r, m);
    out = r;
}

template <size_t N>
inline void mont_add(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& b,
                     const Limbs<N>& m) {
    Limbs<N> r = a;
    uint64_t carry = limbs_add(r, b);
    if (carry != 0 || limbs_geq(r, m)) limbs_sub(r, m);
    out = r;
}

template <size_t N>
inline void mont_sub(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& b,
                     const Limbs<N>& m) {
    Limbs<N> r = a;
    if (limbs_sub(r, b) != 0) limbs_add(r, m);
    out = r;
}

template <size_t N>
inline void mont_neg(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& m) {
    if (limbs_is_zero(a)) {
        out = a;
        return;
    }
    Limbs<N> r = m;
    limbs_sub(r, a);
    out = r;
}

// Halving in Montgomery form: mont(x) -> mont(x / 2).
template <size_t N>
inline void mont_halve(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& m) {
    Limbs<N> r = a;
    uint64_t top = 0;
    if (r[0] & 1) top = limbs_add(r, m);
    for (size_t i = 0; i + 1 < N; ++i) r[i] = (r[i] >> 1) | (r[i + 1] << 63);
    r[N - 1] = (r[N - 1] >> 1) | (top << 63);
    out = r;
}

// Square-and-multiply powering by a big-endian byte exponent. `one` is
// mont(1) for the modulus.
template <size_t N>
inline void mont_pow(Limbs<N>& out, const Limbs<N>& base,
                     std::span<const uint8_t> exp_be, const Limbs<N>& m,
                     uint64_t inv, const Limbs<N>& one) {
    Limbs<N> acc = one;
    bool started = false;
    for (uint8_t byte : exp_be) {
        for (int bit = 7; bit >= 0; --bit) {
            if (started) mont_mul(acc, acc, acc, m, inv);
            if ((byte >> bit) & 1) {
                if (started) {
                    mont_mul(acc, acc, base, m, inv);
                } else {
                    acc = base;
                    started = true;
                }
            }
        }
    }
    out = acc;
}

// Big-endian canonical bytes -> limbs; returns false when the value is not
// below the modulus.
template <size_t N>
inline bool limbs_from_be(Limbs<N>& out, std::span<const uint8_t> bytes,
                          const Limbs<N>& m) {
    Limbs<N> r{};
    if (bytes.size() != N * 8) return false;
    for (size_t i = 0; i < N; ++i) {
        uint64_t w = 0;
        for (size_t j = 0; j < 8; ++j)
            w = (w << 8) | bytes[(N - 1 - i) * 8 + j];
        r[i] = w;
    }
    if (limbs_geq(r, m)) return false;
    out = r;
    return true;
}

template <size_t N>
inline void limbs_to_be(std::span<uint8_t> bytes, const Limbs<N>& a) {
    for (size_t i = 0; i < N; ++i) {
        uint64_t w = a[N - 1 - i];
        for (size_t j = 0; j < 8; ++j)
            bytes[i * 8 + j] = (uint8_t)(w >> (56 - 8 * j));
    }
}

}  // namespace pepsi::bls
