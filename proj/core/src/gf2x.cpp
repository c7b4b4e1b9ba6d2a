#include "gf2x.hpp"

#include <bit>
#include <map>
#include <random>
#include <stdexcept>

#include "lfds/intfactor.hpp"

namespace lfds::gf2x {

namespace {

size_t words_for(int degree) { return static_cast<size_t>(degree) / 64 + 1; }

bool test_bit(const F2Poly& a, int k) {
    size_t w = static_cast<size_t>(k) / 64;
    return w < a.size() && ((a[w] >> (k % 64)) & 1);
}

// dst ^= src << s
void xor_shift(F2Poly& dst, const F2Poly& src, int s) {
    const size_t off = static_cast<size_t>(s) / 64;
    const int bo = s % 64;
    if (dst.size() < src.size() + off + 1) dst.resize(src.size() + off + 1, 0);
    if (bo == 0) {
        for (size_t i = 0; i < src.size(); ++i) dst[i + off] ^= src[i];
    } else {
        for (size_t i = 0; i < src.size(); ++i) {
            dst[i + off] ^= src[i] << bo;
            dst[i + off + 1] ^= src[i] >> (64 - bo);
        }
    }
}

uint64_t spread_half(uint32_t v) {
    // Interleave zeros: abcd -> 0a0b0c0d.
    uint64_t x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

}  // namespace

int deg(const F2Poly& a) {
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i]) return static_cast<int>(i) * 64 + 63 - std::countl_zero(a[i]);
    }
    return -1;
}

void trim(F2Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

F2Poly from_bits(const std::vector<int64_t>& coeffs) {
    F2Poly r;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] & 1) {
            size_t w = i / 64;
            if (r.size() <= w) r.resize(w + 1, 0);
            r[w] |= 1ull << (i % 64);
        }
    }
    trim(r);
    return r;
}

std::vector<int64_t> to_bits(const F2Poly& a) {
    int d = deg(a);
    std::vector<int64_t> r;
    for (int i = 0; i <= d; ++i) r.push_back(test_bit(a, i) ? 1 : 0);
    return r;
}

F2Poly x_pow(int k) {
    F2Poly r(words_for(k), 0);
    r[static_cast<size_t>(k) / 64] = 1ull << (k % 64);
    return r;
}

F2Poly add(const F2Poly& a, const F2Poly& b) {
    F2Poly r = a.size() >= b.size() ? a : b;
    const F2Poly& s = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) r[i] ^= s[i];
    trim(r);
    return r;
}

F2Poly mul(const F2Poly& a, const F2Poly& b) {
    if (a.empty() || b.empty()) return {};
    F2Poly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t w = a[i];
        while (w) {
            int j = std::countr_zero(w);
            w &= w - 1;
            xor_shift(r, b, static_cast<int>(i) * 64 + j);
        }
    }
    trim(r);
    return r;
}

F2Poly sqr(const F2Poly& a) {
    F2Poly r(a.size() * 2, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[2 * i] = spread_half(static_cast<uint32_t>(a[i]));
        r[2 * i + 1] = spread_half(static_cast<uint32_t>(a[i] >> 32));
    }
    trim(r);
    return r;
}

F2Poly rem(F2Poly a, const F2Poly& b) {
    const int db = deg(b);
    if (db < 0) throw std::domain_error("gf2x::rem: division by zero");
    for (int k = deg(a); k >= db; --k) {
        if (test_bit(a, k)) xor_shift(a, b, k - db);
    }
    if (db > 0) a.resize(words_for(db - 1), 0);
    else a.clear();
    trim(a);
    return a;
}

std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& b) {
    const int db = deg(b);
    if (db < 0) throw std::domain_error("gf2x::divmod: division by zero");
    F2Poly r = a, q;
    int da = deg(a);
    if (da >= db) q.assign(words_for(da - db), 0);
    for (int k = da; k >= db; --k) {
        if (test_bit(r, k)) {
            xor_shift(r, b, k - db);
            q[static_cast<size_t>(k - db) / 64] |= 1ull << ((k - db) % 64);
        }
    }
    if (db > 0) r.resize(std::min(r.size(), words_for(db - 1)), 0);
    else r.clear();
    trim(r);
    trim(q);
    return {std::move(q), std::move(r)};
}

F2Poly gcd(F2Poly a, F2Poly b) {
    while (!b.empty()) {
        F2Poly r = rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

F2Poly sqrmod(const F2Poly& a, const F2Poly& m) { return rem(sqr(a), m); }

bool irreducible(const F2Poly& g) {
    const int n = deg(g);
    if (n < 1) return false;
    if (n == 1) return true;
    // x^(2^n) == x mod g, and x^(2^(n/r)) - x coprime with g for prime r | n.
    F2Poly x = rem(x_pow(1), g);
    F2Poly h = x;
    std::map<int, F2Poly> checkpoints;
    auto want = int_factorize(static_cast<uint64_t>(n));
    for (const auto& [r, mult] : want) checkpoints.emplace(n / static_cast<int>(r), F2Poly{});
    for (int i = 1; i <= n; ++i) {
        h = sqrmod(h, g);
        auto it = checkpoints.find(i);
        if (it != checkpoints.end()) it->second = h;
    }
    if (h != x) return false;
    for (auto& [i, hx] : checkpoints) {
        F2Poly diff = add(hx, x);
        F2Poly d = gcd(diff, g);
        if (deg(d) != 0) return false;
    }
    return true;
}

namespace {

F2Poly sqrt_even(const F2Poly& f) {
    // f has only even-degree terms; return g with g^2 = f.
    int dfh = deg(f) / 2;
    F2Poly r(words_for(std::max(dfh, 0)), 0);
    for (int i = 0; i <= dfh; ++i) {
        if (test_bit(f, 2 * i)) r[static_cast<size_t>(i) / 64] |= 1ull << (i % 64);
    }
    trim(r);
    return r;
}

F2Poly deriv(const F2Poly& f) {
    // Odd-degree coefficients shift down one.
    F2Poly r(f.size(), 0);
    for (int i = 1; i <= deg(f); i += 2) {
        if (test_bit(f, i)) r[static_cast<size_t>(i - 1) / 64] |= 1ull << ((i - 1) % 64);
    }
    trim(r);
    return r;
}

// Distinct squarefree parts: list of (product of distinct irreducibles, multiplicity).
void squarefree_parts(const F2Poly& f, int outer_mult, std::vector<std::pair<F2Poly, int>>& out) {
    F2Poly fd = deriv(f);
    if (fd.empty()) {
        squarefree_parts(sqrt_even(f), outer_mult * 2, out);
        return;
    }
    F2Poly c = gcd(f, fd);
    F2Poly w = divmod(f, c).first;
    int i = 1;
    while (deg(w) > 0) {
        F2Poly y = gcd(w, c);
        F2Poly z = divmod(w, y).first;
        if (deg(z) > 0) out.emplace_back(std::move(z), i * outer_mult);
        c = divmod(c, y).first;
        w = std::move(y);
        ++i;
    }
    if (deg(c) > 0) squarefree_parts(sqrt_even(c), outer_mult * 2, out);
}

F2Poly random_poly(std::mt19937_64& rng, int max_deg) {
    F2Poly r(words_for(std::max(max_deg, 0)), 0);
    for (auto& w : r) w = rng();
    int keep = max_deg + 1;
    size_t full = static_cast<size_t>(keep) / 64;
    if (full < r.size()) {
        int bits = keep % 64;
        r[full] &= bits ? ((1ull << bits) - 1) : 0;
        r.resize(full + 1);
    }
    trim(r);
    return r;
}

// Equal-degree splitting with the trace polynomial Tr(w) = w + w^2 + ... + w^(2^(k-1)).
void edf(const F2Poly& prod, int k, std::mt19937_64& rng, std::vector<F2Poly>& out) {
    if (deg(prod) == k) {
        out.push_back(prod);
        return;
    }
    while (true) {
        F2Poly w = random_poly(rng, deg(prod) - 1);
        if (deg(w) < 1) continue;
        F2Poly tr = w, acc = w;
        for (int i = 1; i < k; ++i) {
            acc = sqrmod(acc, prod);
            tr = add(tr, acc);
        }
        F2Poly g = gcd(tr, prod);
        if (deg(g) > 0 && deg(g) < deg(prod)) {
            edf(g, k, rng, out);
            edf(divmod(prod, g).first, k, rng, out);
            return;
        }
    }
}

// Distinct-degree stage on a squarefree input.
void ddf(F2Poly f, std::mt19937_64& rng, int mult, std::vector<std::pair<F2Poly, int>>& out) {
    F2Poly h = rem(x_pow(1), f);
    const F2Poly x1 = h;
    for (int k = 1; 2 * k <= deg(f); ++k) {
        h = sqrmod(h, f);
        F2Poly g = gcd(add(h, x1), f);
        if (deg(g) > 0) {
            std::vector<F2Poly> irr;
            edf(g, k, rng, irr);
            for (auto& gi : irr) out.emplace_back(std::move(gi), mult);
            f = divmod(f, g).first;
            h = rem(std::move(h), f);
        }
    }
    if (deg(f) > 0) out.emplace_back(std::move(f), mult);
}

}  // namespace

std::vector<std::pair<F2Poly, int>> factor(const F2Poly& f, uint64_t seed) {
    if (f.empty()) throw std::invalid_argument("gf2x::factor: zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<F2Poly, int>> parts;
    if (deg(f) > 0) squarefree_parts(f, 1, parts);
    std::vector<std::pair<F2Poly, int>> out;
    for (auto& [part, mult] : parts) ddf(part, rng, mult, out);
    return out;
}

}  // namespace lfds::gf2x
