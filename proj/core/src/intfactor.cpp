#include "lfds/intfactor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace lfds {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// SPRP test for one base.
bool sprp(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_brent(u64 n, u64 c0) {
    // Brent's variant; n odd composite, not a prime power of a tiny prime.
    for (u64 c = c0;; ++c) {
        u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
        u64 r = 1;
        const u64 batch = 128;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && d == 1; k += batch) {
                ys = y;
                u64 lim = std::min(batch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // Batch overshot; replay one step at a time.
            d = 1;
            while (d == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[n] += 1;
        return;
    }
    u64 d = pollard_brent(n, 1);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!sprp(n, a)) return false;
    }
    return true;
}

std::vector<std::pair<u64, int>> int_factorize(u64 n) {
    static std::mutex cache_mutex;
    static std::map<u64, std::vector<std::pair<u64, int>>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    u64 rest = n;
    std::map<u64, int> acc;
    for (u64 p = 2; p <= 1000000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (rest % p == 0) {
            acc[p] += 1;
            rest /= p;
        }
    }
    if (rest > 1) factor_rec(rest, acc);
    std::vector<std::pair<u64, int>> result(acc.begin(), acc.end());

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, result);
    return result;
}

}  // namespace lfds
