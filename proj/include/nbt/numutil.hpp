#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "nbt/errors.hpp"

namespace nbt {

// Expression templates are disabled so these behave as plain value types in
// generic code (polynomials, matrices) without ambiguous overloads.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;
using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Hard cap for integer factorization by trial division (the largest value we
/// promise to factor).  Anything above throws TooLarge rather than stalling.
inline constexpr u64 kFactorCap = u64(1) << 40;

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 a, u64 e, u64 m);
i64 powmod_i64(i64 a, i64 e, i64 m);

/// Deterministic Miller–Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

struct PrimePower {
    u64 p;
    int e;
};

/// Factors n by trial division up to 2^20; any remaining cofactor below the
/// cap is necessarily prime.  Throws TooLarge above kFactorCap.
std::vector<PrimePower> factor_u64(u64 n);

u64 euler_phi_u64(u64 n);
int mobius(u64 n);
std::vector<u64> divisors_u64(u64 n);

/// Euler phi of n from a ready factorization.
u64 euler_phi_factored(const std::vector<PrimePower>& f);

/// Smallest positive primitive root modulo the prime p (1 for p = 2).
i64 least_primitive_root(i64 p);

/// Multiplicative order of a modulo m (gcd(a,m) must be 1, m ≤ cap).
u64 mult_order_mod(u64 a, u64 m);

/// Jacobi symbol (a/n) for odd n > 0.
int jacobi(i64 a, i64 n);

Int binomial(i64 n, i64 k);
Int int_pow(Int base, u64 e);

/// x with x*a ≡ 1 (mod m); throws NotCoprime if gcd(a,m) != 1.
i64 inverse_mod(i64 a, i64 m);

}  // namespace nbt
