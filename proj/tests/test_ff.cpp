#include "doctest.h"
#include "nbt/ff.hpp"
#include "nbt/matrix.hpp"

using namespace nbt;

TEST_CASE("field spec construction and interning") {
    const FieldSpec& f2 = get_field(2, 1);
    CHECK(f2.q_u64 == 2);
    CHECK(&f2 == &get_field(2, 1));
    const FieldSpec& f4 = get_field(2, 2);
    CHECK(f4.q_u64 == 4);
    CHECK(f4.mod == std::vector<i64>{1, 1, 1});  // y^2 + y + 1, the only choice
    const FieldSpec& f9 = get_field(3, 2);
    // smallest (c0,c1) with y^2 + c1 y + c0 irreducible over F_3: c0=1 -> y^2+1
    CHECK(f9.mod == std::vector<i64>{1, 0, 1});
    CHECK_THROWS_AS(get_field(6, 1), NotPrime);
}

TEST_CASE("base field arithmetic in F_9") {
    const FieldSpec& f9 = get_field(3, 2);
    FieldElement i = FieldElement::gen(f9);  // y with y^2 = -1
    CHECK(i * i == -FieldElement::one(f9));
    FieldElement a = FieldElement::from_int(f9, 2) + i;
    CHECK(a * a.inv() == FieldElement::one(f9));
    CHECK(a.pow(Int(8)) == FieldElement::one(f9));  // group order 8
    CHECK(a.pow(Int(9)) == a);                      // Frobenius fixed point count
    CHECK_THROWS_AS(FieldElement::zero(f9).inv(), ZeroElement);
    CHECK(FieldElement::from_index(f9, a.index()) == a);
}

TEST_CASE("tower modulus search is deterministic and small") {
    const FieldSpec& f2 = get_field(2, 1);
    const TowerSpec& t4 = get_tower(f2, 4);
    // lex order low-degree-first: x^4 + x^3 + 1 = (1,0,0,1,1) beats x^4+x+1
    std::vector<i64> got = t4.mod_flat;
    CHECK(got == std::vector<i64>{1, 0, 0, 1, 1});
    CHECK(&t4 == &get_tower(f2, 4));
    CHECK(t4.qn_u64 == 16);
}

TEST_CASE("extension arithmetic in F_16") {
    const FieldSpec& f2 = get_field(2, 1);
    const TowerSpec& t = get_tower(f2, 4);
    ExtElement x = ExtElement::gen(t);
    CHECK(x.pow(Int(15)) == ExtElement::one(t));
    CHECK(x * x.inv() == ExtElement::one(t));
    CHECK(mult_order(x) == 15);  // x^4+x^3+1 is primitive
    CHECK(is_primitive(x));
    // Frobenius is the squaring map
    for (u64 i = 0; i < 16; ++i) {
        ExtElement e = ExtElement::from_index(t, i);
        CHECK(frobenius(e) == e * e);
    }
}

TEST_CASE("explicit modulus tower: non-primitive root") {
    const FieldSpec& f2 = get_field(2, 1);
    std::vector<FieldElement> mod;
    for (i64 c : {1, 1, 1, 1, 1}) mod.push_back(FieldElement::from_int(f2, c));
    const TowerSpec& t = get_tower_with_modulus(f2, mod);  // x^4+x^3+x^2+x+1
    ExtElement x = ExtElement::gen(t);
    CHECK(mult_order(x) == 5);
    CHECK_FALSE(is_primitive(x));
    std::vector<FieldElement> bad(mod);
    bad[0] = FieldElement::zero(f2);  // x^4+x^3+x^2+x is reducible
    CHECK_THROWS_AS(get_tower_with_modulus(f2, bad), NotIrreducible);
}

TEST_CASE("trace and norm against first principles") {
    const FieldSpec& f3 = get_field(3, 1);
    const TowerSpec& t = get_tower(f3, 3);
    for (u64 i = 0; i < 27; ++i) {
        ExtElement e = ExtElement::from_index(t, i);
        ExtElement s = e + frobenius(e, 1) + frobenius(e, 2);
        CHECK(s.is_base());
        CHECK(tr_abs(e) == s.coeff(0));
        if (!e.is_zero()) {
            ExtElement pr = e * frobenius(e, 1) * frobenius(e, 2);
            CHECK(pr.is_base());
            CHECK(norm_abs(e) == pr.coeff(0));
        }
    }
    // trace fiber sizes: each value of the trace is hit q^{n-1} times
    const FieldSpec& f2 = get_field(2, 1);
    const TowerSpec& t8 = get_tower(f2, 3);
    int zero_fiber = 0;
    for (u64 i = 0; i < 8; ++i)
        if (tr_abs(ExtElement::from_index(t8, i)).is_zero()) ++zero_fiber;
    CHECK(zero_fiber == 4);
}

TEST_CASE("relative trace and norm") {
    const FieldSpec& f2 = get_field(2, 1);
    const TowerSpec& t = get_tower(f2, 4);
    for (u64 i = 0; i < 16; ++i) {
        ExtElement e = ExtElement::from_index(t, i);
        ExtElement tr2 = tr_rel(e, 2);
        CHECK(tr2 == e + frobenius(e, 2));
        CHECK(frobenius(tr2, 2) == tr2);  // lands in F_4
    }
    CHECK_THROWS_AS(tr_rel(ExtElement::gen(t), 3), NotADivisor);
}

TEST_CASE("nested base field F_4 under degree-3 tower") {
    const FieldSpec& f4 = get_field(2, 2);
    const TowerSpec& t = get_tower(f4, 3);  // F_64 over F_4
    CHECK(t.qn_u64 == 64);
    ExtElement x = ExtElement::gen(t);
    CHECK(x.pow(Int(63)) == ExtElement::one(t));
    // Frobenius here is the 4th power map
    CHECK(frobenius(x) == x.pow(Int(4)));
    FieldElement tr = tr_abs(x);
    ExtElement s = x + frobenius(x, 1) + frobenius(x, 2);
    CHECK(s.is_base());
    CHECK(s.coeff(0) == tr);
}

TEST_CASE("element and order utilities") {
    const FieldSpec& f2 = get_field(2, 1);
    const TowerSpec& t = get_tower(f2, 10);
    // 2^10 - 1 = 1023 = 3*11*31
    ExtElement w = element_of_order(t, 33);
    CHECK(mult_order(w) == 33);
    CHECK_THROWS_AS(element_of_order(t, 41), BadOrder);  // 41 does not divide 1023
}

TEST_CASE("order 41 lives in F_2^20") {
    const FieldSpec& f2 = get_field(2, 1);
    const TowerSpec& t = get_tower(f2, 20);
    ExtElement w = element_of_order(t, 41);
    CHECK(mult_order(w) == 41);
    ExtElement g = primitive_element(t);
    CHECK(mult_order(g) == t.qn_u64 - 1);
}

TEST_CASE("minimal polynomial and embedding") {
    const FieldSpec& f2 = get_field(2, 1);
    const TowerSpec& t2 = get_tower(f2, 2);
    const TowerSpec& t6 = get_tower(f2, 6);
    ExtElement x = ExtElement::gen(t2);
    UPoly<FieldElement> mp = min_poly(x);
    CHECK(mp.deg() == 2);
    ExtElement y = embed(x, t6);
    // image satisfies the same minimal polynomial
    ExtElement acc = ExtElement::zero(t6);
    for (size_t i = mp.c.size(); i-- > 0;) acc = acc * y + ExtElement::from_base(t6, mp.c[i]);
    CHECK(acc.is_zero());
    CHECK(mult_order(y) == 3);
    CHECK_THROWS_AS(embed(ExtElement::gen(get_tower(f2, 4)), t6), EmbeddingFailure);
}

TEST_CASE("rank_mod_p") {
    // 3x3 over F_5: rows (1,2,3),(2,4,6),(0,1,1) -> rank 2
    std::vector<i64> m{1, 2, 3, 2, 4, 6, 0, 1, 1};
    CHECK(rank_mod_p(m, 3, 3, 5) == 2);
    std::vector<i64> id{1, 0, 0, 1};
    CHECK(rank_mod_p(id, 2, 2, 2) == 2);
}

TEST_CASE("generic matrix over F_9") {
    const FieldSpec& f9 = get_field(3, 2);
    FieldElement i = FieldElement::gen(f9), one = FieldElement::one(f9);
    Mat<FieldElement> m(2, 2, FieldElement::zero(f9));
    m(0, 0) = one;
    m(0, 1) = i;
    m(1, 0) = i;
    m(1, 1) = one;
    // det = 1 - i^2 = 1+1 = 2
    CHECK(det(m) == FieldElement::from_int(f9, 2));
    auto minv = inverse(m);
    auto prod = m * minv;
    CHECK(prod(0, 0) == one);
    CHECK(prod(0, 1).is_zero());
    auto x = solve(m, {one, i});
    CHECK(m(0, 0) * x[0] + m(0, 1) * x[1] == one);
    CHECK(m(1, 0) * x[0] + m(1, 1) * x[1] == i);
}
