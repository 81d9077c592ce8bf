#pragma once
#include <vector>

#include "nbt/upoly.hpp"

namespace nbt {

/// m-th cyclotomic polynomial over the integers, computed by the exact
/// division Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d and memoized.
UPoly<Int> cyclotomic_polynomial(u64 m);

/// An algebraic integer in Z[w], where w is a fixed primitive p-th root of
/// unity for a prime p >= 3, stored by its coordinates on the power basis
/// 1, w, ..., w^{p-2}.  That basis is integral, so coordinates are unique and
/// equality is coordinate-wise.  The missing power is rewritten through
/// w^{p-1} = -(1 + w + ... + w^{p-2}) whenever it appears.
struct CycInt {
    i64 p = 0;
    std::vector<Int> c;  // length p-1, coordinate i multiplies w^i

    CycInt() = default;
    CycInt(i64 p_, std::vector<Int> c_);

    static CycInt zero(i64 p);
    static CycInt one(i64 p);
    static CycInt from_int(i64 p, const Int& k);
    /// w^k for arbitrary k (reduced mod p first).
    static CycInt omega_pow(i64 p, i64 k);

    bool is_zero() const;
    /// True when the element lies in Z (all coordinates above the constant
    /// one vanish).
    bool is_rational() const;
    /// The value as a plain integer; throws InternalCheck when !is_rational().
    Int to_int() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator+(const Int& k) const;
    CycInt scaled(const Int& k) const;
    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    /// The automorphism w -> w^k; requires k !≡ 0 (mod p).
    CycInt galois(i64 k) const;
};

CycInt ring_zero(const CycInt& x);
CycInt ring_one(const CycInt& x);
bool ring_is_zero(const CycInt& x);
CycInt ring_from_int(const CycInt& x, i64 k);
CycInt ring_inv(const CycInt& x);

/// The ring Z[z] for z a primitive m-th root of unity, arbitrary m >= 1,
/// with elements stored as integer polynomials in z of degree < phi(m),
/// reduced modulo Phi_m.  Interned: get_cyc_ring returns a stable reference.
struct CycRing {
    i64 m = 0;
    UPoly<Int> phi = UPoly<Int>::zero(Int(0));
    std::vector<UPoly<Int>> zeta_powers;  // x^k mod Phi_m for k = 0 .. m-1
};

const CycRing& get_cyc_ring(i64 m);

struct CycElement {
    const CycRing* r = nullptr;
    UPoly<Int> f = UPoly<Int>::zero(Int(0));  // reduced: deg f < deg Phi_m

    static CycElement zero(const CycRing& r);
    static CycElement one(const CycRing& r);
    static CycElement from_int(const CycRing& r, const Int& k);
    static CycElement zeta_pow(const CycRing& r, i64 k);
    /// Reduce an arbitrary integer polynomial in z.
    static CycElement from_poly(const CycRing& r, const UPoly<Int>& f);

    bool is_zero() const;
    bool is_rational() const;
    Int to_int() const;

    CycElement operator+(const CycElement& o) const;
    CycElement operator-(const CycElement& o) const;
    CycElement operator-() const;
    CycElement operator*(const CycElement& o) const;
    CycElement operator+(const Int& k) const;
    bool operator==(const CycElement& o) const;
    bool operator!=(const CycElement& o) const { return !(*this == o); }

    /// The automorphism z -> z^t; requires gcd(t, m) = 1.
    CycElement galois(i64 t) const;
};

CycElement ring_zero(const CycElement& x);
CycElement ring_one(const CycElement& x);
bool ring_is_zero(const CycElement& x);
CycElement ring_from_int(const CycElement& x, i64 k);
CycElement ring_inv(const CycElement& x);

}  // namespace nbt
