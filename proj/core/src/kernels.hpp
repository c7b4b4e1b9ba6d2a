#pragma once

#include <cstdint>
#include <vector>

#include "lfds/ring.hpp"

// Flat arithmetic kernels shared by ring, poly and oracle code. An element is
// d consecutive int64 coefficients in [0, pe); a "wide" element has 2d-1
// coefficients (an unreduced t-convolution).

namespace lfds::detail {

inline int64_t addmod(int64_t a, int64_t b, int64_t m) {
    uint64_t s = static_cast<uint64_t>(a) + static_cast<uint64_t>(b);
    if (s >= static_cast<uint64_t>(m)) s -= static_cast<uint64_t>(m);
    return static_cast<int64_t>(s);
}

inline int64_t submod(int64_t a, int64_t b, int64_t m) {
    int64_t s = a - b;
    return s < 0 ? s + m : s;
}

inline int64_t mulmod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>(static_cast<unsigned __int128>(a) * static_cast<uint64_t>(b) %
                                static_cast<uint64_t>(m));
}

inline int64_t norm_int(int64_t v, int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

inline void el_add(int d, int64_t pe, const int64_t* a, const int64_t* b, int64_t* out) {
    for (int i = 0; i < d; ++i) out[i] = addmod(a[i], b[i], pe);
}

inline void el_sub(int d, int64_t pe, const int64_t* a, const int64_t* b, int64_t* out) {
    for (int i = 0; i < d; ++i) out[i] = submod(a[i], b[i], pe);
}

inline void el_neg(int d, int64_t pe, const int64_t* a, int64_t* out) {
    for (int i = 0; i < d; ++i) out[i] = a[i] ? pe - a[i] : 0;
}

inline bool el_is_zero(int d, const int64_t* a) {
    for (int i = 0; i < d; ++i)
        if (a[i]) return false;
    return true;
}

// True iff a is nonzero mod p.
inline bool el_is_unit(int d, int64_t p, const int64_t* a) {
    for (int i = 0; i < d; ++i)
        if (a[i] % p) return true;
    return false;
}

// wide[0..2d-2] += a * b as t-polynomials, mod pe, no h-reduction.
inline void el_mul_acc_wide(int d, int64_t pe, const int64_t* a, const int64_t* b, int64_t* wide) {
    for (int i = 0; i < d; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < d; ++j) {
            if (!b[j]) continue;
            wide[i + j] = addmod(wide[i + j], mulmod(a[i], b[j], pe), pe);
        }
    }
}

// In-place reduction of wide[0..2d-2] by the monic h of the spec; the reduced
// element is wide[0..d-1].
inline void el_reduce_h(const RingSpec& spec, int64_t pe, int64_t* wide) {
    const int d = spec.d();
    const auto& h = spec.h();
    for (int k = 2 * d - 2; k >= d; --k) {
        int64_t c = wide[k];
        if (!c) continue;
        wide[k] = 0;
        for (int j = 0; j < d; ++j) {
            if (h[static_cast<size_t>(j)])
                wide[k - d + j] = submod(wide[k - d + j], mulmod(c, h[static_cast<size_t>(j)], pe), pe);
        }
    }
}

// out = a * b reduced mod (h, pe). out may not alias the inputs.
void el_mul(const RingSpec& spec, int64_t pe, const int64_t* a, const int64_t* b, int64_t* out);

}  // namespace lfds::detail
