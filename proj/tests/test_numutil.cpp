#include "doctest.h"
#include "nbt/numutil.hpp"

using namespace nbt;

TEST_CASE("primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(41));
    CHECK(is_prime_u64(1099511627791ull));  // first prime above 2^40
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));   // Carmichael
    CHECK_FALSE(is_prime_u64(6601));  // Carmichael
}

TEST_CASE("factoring and phi") {
    auto f = factor_u64((u64(1) << 40) - 1);  // 3 * 5^2 * 11 * 17 * 31 * 41 * 61681
    u64 back = 1;
    for (auto& pp : f)
        for (int i = 0; i < pp.e; ++i) back *= pp.p;
    CHECK(back == (u64(1) << 40) - 1);
    CHECK(euler_phi_u64(1) == 1);
    CHECK(euler_phi_u64(12) == 4);
    CHECK(euler_phi_u64(97) == 96);
    CHECK_THROWS_AS(factor_u64((u64(1) << 40) + 2), TooLarge);
}

TEST_CASE("mobius and divisors") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK(divisors_u64(28) == std::vector<u64>{1, 2, 4, 7, 14, 28});
}

TEST_CASE("primitive roots") {
    CHECK(least_primitive_root(2) == 1);
    CHECK(least_primitive_root(3) == 2);
    CHECK(least_primitive_root(7) == 3);
    CHECK(least_primitive_root(11) == 2);
    CHECK(least_primitive_root(41) == 6);
    CHECK_THROWS_AS(least_primitive_root(8), NotPrime);
    for (i64 p : {5, 13, 29, 97, 193}) {
        i64 g = least_primitive_root(p);
        CHECK(mult_order_mod(u64(g), u64(p)) == u64(p - 1));
    }
}

TEST_CASE("orders mod m") {
    CHECK(mult_order_mod(2, 41) == 20);   // 2^10 = 1024 = 25*41 - 1
    CHECK(mult_order_mod(2, 29) == 28);
    CHECK(mult_order_mod(2, 7) == 3);
    CHECK(mult_order_mod(3, 1) == 1);
}

TEST_CASE("jacobi symbol") {
    CHECK(jacobi(2, 41) == 1);
    CHECK(jacobi(3, 41) == -1);
    CHECK(jacobi(5, 21) == 1);   // composite modulus
    CHECK(jacobi(21, 21) == 0);
    // Euler criterion spot check on a prime modulus
    for (i64 a = 1; a < 23; ++a) CHECK(jacobi(a, 23) == (powmod_i64(a, 11, 23) == 1 ? 1 : -1));
}

TEST_CASE("binomials and inverses") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(int_pow(Int(3), 5) == 243);
    CHECK(inverse_mod(3, 7) == 5);
    CHECK_THROWS_AS(inverse_mod(6, 9), NotCoprime);
}
