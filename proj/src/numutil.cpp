#include "nbt/numutil.hpp"

#include <algorithm>
#include <numeric>

namespace nbt {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return u64((unsigned __int128)a * b % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

i64 powmod_i64(i64 a, i64 e, i64 m) {
    a %= m;
    if (a < 0) a += m;
    return i64(powmod_u64(u64(a), u64(e), u64(m)));
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // This witness set decides primality for every 64-bit integer.
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<PrimePower> factor_u64(u64 n) {
    if (n > kFactorCap) throw TooLarge("factor_u64: " + std::to_string(n) + " exceeds cap 2^40");
    std::vector<PrimePower> out;
    if (n < 2) return out;
    for (u64 d = 2; d * d <= n && d <= (u64(1) << 20); d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) n /= d, ++e;
            out.push_back({d, e});
        }
    }
    if (n > 1) {
        // No factor up to 2^20 and n ≤ 2^40, so the cofactor is prime.
        require(is_prime_u64(n), "factor_u64 cofactor not prime");
        out.push_back({n, 1});
    }
    return out;
}

u64 euler_phi_factored(const std::vector<PrimePower>& f) {
    u64 r = 1;
    for (auto& pp : f) {
        u64 pe = 1;
        for (int i = 1; i < pp.e; ++i) pe *= pp.p;
        r *= pe * (pp.p - 1);
    }
    return r;
}

u64 euler_phi_u64(u64 n) {
    if (n == 0) return 0;
    return euler_phi_factored(factor_u64(n));
}

int mobius(u64 n) {
    auto f = factor_u64(n);
    for (auto& pp : f)
        if (pp.e > 1) return 0;
    return (f.size() % 2 == 0) ? 1 : -1;
}

std::vector<u64> divisors_u64(u64 n) {
    auto f = factor_u64(n);
    std::vector<u64> out{1};
    for (auto& pp : f) {
        size_t sz = out.size();
        u64 pe = 1;
        for (int i = 0; i < pp.e; ++i) {
            pe *= pp.p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 least_primitive_root(i64 p) {
    if (p < 2 || !is_prime_u64(u64(p))) throw NotPrime("least_primitive_root: " + std::to_string(p));
    if (p == 2) return 1;
    auto f = factor_u64(u64(p - 1));
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto& pp : f) {
            if (powmod_u64(u64(g), u64(p - 1) / pp.p, u64(p)) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw InternalCheck("no primitive root found");
}

u64 mult_order_mod(u64 a, u64 m) {
    a %= m;
    if (std::gcd(a, m) != 1) throw NotCoprime("mult_order_mod");
    u64 lam = euler_phi_u64(m);
    u64 ord = lam;
    for (auto& pp : factor_u64(lam)) {
        for (int i = 0; i < pp.e; ++i) {
            if (powmod_u64(a, ord / pp.p, m) == 1)
                ord /= pp.p;
            else
                break;
        }
    }
    return ord;
}

int jacobi(i64 a, i64 n) {
    require(n > 0 && (n & 1), "jacobi: n must be odd positive");
    a %= n;
    if (a < 0) a += n;
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

Int binomial(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (i64 i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

Int int_pow(Int base, u64 e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

i64 inverse_mod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1) {
        i64 q = g / a1;
        g -= q * a1;
        std::swap(g, a1);
        x -= q * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw NotCoprime("inverse_mod: gcd != 1");
    return ((x % m) + m) % m;
}

}  // namespace nbt
