#include "ips/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

namespace ips {

namespace {

namespace mp = boost::multiprecision;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using mp::uint256_t;

// Trial division strips everything below this bound; rho picks up any
// surviving factor in well under a thousand iterations, so a larger table
// only slows the hot randomized test paths down.
constexpr u64 kTrialBound = 10'000;

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<u64> out;
        for (u64 i = 2; i <= kTrialBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (u64 j = i * i; j <= kTrialBound; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin_u64(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Complete for every n < 2^64.
constexpr u64 kU64Bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : kU64Bases)
        if (!miller_rabin_u64(n, a)) return false;
    return true;
}

// Fixed witness list for inputs above 2^64: the first 25 primes.
const u64 kBigWitnesses[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                             43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

u128 gcd_u128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Montgomery arithmetic modulo an odd n < 2^126; the workhorse for rho and
// Miller-Rabin between 64 and 126 bits, where cpp_int division is the
// bottleneck.
struct Mont128 {
    u128 n, ninv, one, r2;

    explicit Mont128(u128 modulus) : n(modulus) {
        u128 inv = n;  // Newton: doubles the correct low bits each round
        for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
        ninv = (u128)0 - inv;
        Integer big_n(n);
        one = static_cast<u128>((Integer(1) << 128) % big_n);
        r2 = static_cast<u128>(((Integer(1) << 128) * one) % big_n);
    }

    static void mul_full(u128 a, u128 b, u128& hi, u128& lo) {
        u64 a0 = (u64)a, a1 = (u64)(a >> 64);
        u64 b0 = (u64)b, b1 = (u64)(b >> 64);
        u128 p00 = (u128)a0 * b0;
        u128 p01 = (u128)a0 * b1;
        u128 p10 = (u128)a1 * b0;
        u128 p11 = (u128)a1 * b1;
        u128 mid = p01 + p10;
        u128 mid_over = mid < p01 ? ((u128)1 << 64) : 0;
        lo = p00 + (mid << 64);
        u128 carry_lo = lo < p00 ? 1 : 0;
        hi = p11 + (mid >> 64) + mid_over + carry_lo;
    }

    u128 reduce(u128 hi, u128 lo) const {
        u128 m = lo * ninv;
        u128 mn_hi, mn_lo;
        mul_full(m, n, mn_hi, mn_lo);
        u128 carry = (lo != 0 || mn_lo != 0) ? (lo + mn_lo == 0 ? 1 : 0) : 0;
        u128 res = hi + mn_hi + carry;
        if (res >= n) res -= n;
        return res;
    }

    u128 mul(u128 a, u128 b) const {
        u128 hi, lo;
        mul_full(a, b, hi, lo);
        return reduce(hi, lo);
    }

    u128 to_mont(u128 a) const { return mul(a % n, r2); }
    u128 add(u128 a, u128 b) const {
        u128 s = a + b;
        return s >= n ? s - n : s;
    }
    u128 sub(u128 a, u128 b) const { return a >= b ? a - b : n - b + a; }

    u128 pow(u128 base_mont, u128 e) const {
        u128 r = one;
        while (e) {
            if (e & 1) r = mul(r, base_mont);
            base_mont = mul(base_mont, base_mont);
            e >>= 1;
        }
        return r;
    }
};

bool is_prime_mont(u128 n) {
    Mont128 M(n);
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    const u128 minus_one = M.sub(0, M.one);
    for (u64 a : kBigWitnesses) {
        u128 x = M.pow(M.to_mont(a), d);
        if (x == M.one || x == minus_one) continue;
        bool witness = true;
        for (int i = 1; i < s && witness; ++i) {
            x = M.mul(x, x);
            if (x == minus_one) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

u128 pollard_brent_mont(u128 n, u64 offset) {
    Mont128 M(n);
    u128 y = M.to_mont(2 + offset);
    const u128 c = M.to_mont(1 + offset);
    const u64 m = 128;
    u128 g = 1, q = M.one, x = 0, ys = 0;
    u64 r = 1;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = M.add(M.mul(y, y), c);
        for (u64 k = 0; k < r && g == 1; k += m) {
            ys = y;
            u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = M.add(M.mul(y, y), c);
                q = M.mul(q, M.sub(x, y));
            }
            g = gcd_u128(q, n);  // the Montgomery scaling is coprime to n
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = M.add(M.mul(ys, ys), c);
            g = gcd_u128(M.sub(x, ys), n);
        } while (g == 1);
    }
    return g;
}

bool miller_rabin_big(const Integer& n, const Integer& a) {
    Integer d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    Integer x = mp::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mp::powm(x, Integer(2), n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

// Brent's variant of Pollard rho. Deterministic: the caller fixes the
// polynomial offset, retries bump it by one.
u64 pollard_brent_u64(u64 n, u64 offset) {
    if ((n & 1) == 0) return 2;
    u64 y = 2 + offset, c = 1 + offset, m = 128;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
        for (u64 k = 0; k < r && g == 1; k += m) {
            ys = y;
            u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mulmod_u64(y, y, n) + c) % n;
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = gcd_u64(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = (mulmod_u64(ys, ys, n) + c) % n;
            g = gcd_u64(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

// Same cycle-finding loop for operands up to 128 bits; products fit in 256.
Integer pollard_brent_u256(const Integer& n_in, u64 offset) {
    const uint256_t n(n_in);
    auto mulmod = [&](const uint256_t& a, const uint256_t& b) { return a * b % n; };
    uint256_t y = 2 + offset, c = 1 + offset;
    const u64 m = 128;
    uint256_t g = 1, q = 1, x = 0, ys = 0;
    u64 r = 1;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mulmod(y, y) + c) % n;
        for (u64 k = 0; k < r && g == 1; k += m) {
            ys = y;
            u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mulmod(y, y) + c) % n;
                q = mulmod(q, x > y ? x - y : y - x);
            }
            g = gcd(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = (mulmod(ys, ys) + c) % n;
            g = gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return Integer(g);
}

Integer pollard_brent_cpp(const Integer& n, u64 offset) {
    auto mulmod = [&](const Integer& a, const Integer& b) { return a * b % n; };
    Integer y = 2 + offset, c = 1 + offset;
    const u64 m = 128;
    Integer g = 1, q = 1, x = 0, ys = 0;
    u64 r = 1;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mulmod(y, y) + c) % n;
        for (u64 k = 0; k < r && g == 1; k += m) {
            ys = y;
            u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mulmod(y, y) + c) % n;
                q = mulmod(q, x > y ? x - y : y - x);
            }
            g = gcd(q, n);
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = (mulmod(ys, ys) + c) % n;
            g = gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

Integer find_factor(const Integer& n) {
    const unsigned bits = mp::msb(n) + 1;
    const bool odd = (n & 1) != 0;
    for (u64 offset = 0;; ++offset) {
        Integer d;
        if (bits <= 63) {
            d = pollard_brent_u64(static_cast<u64>(n), offset);
        } else if (odd && bits <= 126) {
            d = Integer(pollard_brent_mont(static_cast<u128>(n), offset));
        } else if (bits <= 128) {
            d = pollard_brent_u256(n, offset);
        } else {
            d = pollard_brent_cpp(n, offset);
        }
        if (d != n && d != 1) return d;
    }
}

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

void factor_into(Integer n, Factorization& out) {
    std::vector<Integer> stack;
    stack.push_back(std::move(n));
    while (!stack.empty()) {
        Integer m = std::move(stack.back());
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            ++out[m];
            continue;
        }
        IsqrtResult s = isqrt(m);
        if (s.exact) {
            stack.push_back(s.root);
            stack.push_back(std::move(s.root));
            continue;
        }
        Integer d = find_factor(m);
        stack.push_back(m / d);
        stack.push_back(std::move(d));
    }
}

}  // namespace

IsqrtResult isqrt(const Integer& n) {
    if (n < 0) throw Error("isqrt: negative input");
    if (n == 0) return {Integer(0), true};
    if (n <= Integer(std::numeric_limits<u64>::max())) {
        u64 v = static_cast<u64>(n);
        u64 r = isqrt_u64(v);
        return {Integer(r), r * r == v};
    }
    const unsigned bits = mp::msb(n);
    Integer x = Integer(1) << (bits / 2 + 1);
    for (;;) {
        Integer y = (x + n / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }
    return {x, x * x == n};
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    return isqrt(n).exact;
}

bool is_prime(const Integer& n) {
    if (n <= Integer(std::numeric_limits<u64>::max()))
        return is_prime_u64(static_cast<u64>(n));
    if ((n & 1) == 0) return false;
    if (mp::msb(n) + 1 <= 126) return is_prime_mont(static_cast<u128>(n));
    for (u64 a : kBigWitnesses)
        if (!miller_rabin_big(n, Integer(a))) return false;
    return true;
}

Factorization factorize(const Integer& n) {
    if (n < 1) throw Error("factorize: input must be >= 1");
    if (n > 1 && mp::msb(n) + 1 > kMaxFactorizationBits)
        throw ResourceLimitError("factorize: input exceeds the supported 200-bit policy limit");
    Factorization out;
    Integer m = n;
    for (u64 p : small_primes()) {
        if (Integer(p) * p > m) break;
        if (m % p == 0) {
            unsigned e = 0;
            do {
                m /= p;
                ++e;
            } while (m % p == 0);
            out[Integer(p)] = e;
        }
    }
    if (m > 1) {
        if (m < Integer(kTrialBound) * kTrialBound)
            ++out[m];  // below the table's square: must be prime
        else
            factor_into(m, out);
    }
    return out;
}

Integer factorization_value(const Factorization& f) {
    Integer v = 1;
    for (const auto& [p, e] : f) v *= mp::pow(p, e);
    return v;
}

Factorization factorization_product(const Factorization& a, const Factorization& b) {
    Factorization out = a;
    for (const auto& [p, e] : b) out[p] += e;
    return out;
}

Factorization factorization_power(const Factorization& f, unsigned e) {
    Factorization out;
    if (e == 0) return out;
    for (const auto& [p, k] : f) out[p] = k * e;
    return out;
}

SquarefreeDecomposition squarefree_part(const Factorization& f) {
    Integer k = 1, m = 1;
    for (const auto& [p, e] : f) {
        if (e & 1) k *= p;
        m *= mp::pow(p, e / 2);
    }
    return {k, m};
}

SquarefreeDecomposition squarefree_part(const Integer& n) {
    return squarefree_part(factorize(n));
}

std::uint64_t divisor_count(const Factorization& f) {
    std::uint64_t t = 1;
    for (const auto& [p, e] : f) t *= (e + 1);
    return t;
}

std::vector<DivisorPair> divisor_pairs(const Factorization& f) {
    std::vector<Integer> divisors{Integer(1)};
    for (const auto& [p, e] : f) {
        const std::size_t base = divisors.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pk);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    const Integer n = factorization_value(f);
    std::vector<DivisorPair> pairs;
    for (const Integer& u : divisors) {
        Integer v = n / u;
        if (u > v) break;
        pairs.push_back({u, v});
    }
    return pairs;
}

}  // namespace ips
