#pragma once
#include <memory>
#include <string>
#include <vector>

#include "nbt/upoly.hpp"

namespace nbt {

/// Base field F_q with q = p^v, as F_p[y]/(mod).  Specs are interned: equal
/// parameters always return the same object, so elements can hold raw
/// pointers for their whole lifetime.
struct FieldSpec {
    i64 p = 0;
    int v = 1;
    std::vector<i64> mod;  // v+1 coefficients, monic, low degree first
    Int q;                 // p^v
    u64 q_u64 = 0;         // valid when q_small
    bool q_small = false;
    std::string key;

    bool prime_field() const { return v == 1; }
};

/// F_q with the lexicographically smallest monic irreducible modulus of
/// degree v (coefficients compared low degree first).  Throws NotPrime.
const FieldSpec& get_field(i64 p, int v);
/// F_q with an explicit modulus (must be monic irreducible over F_p).
const FieldSpec& get_field_with_modulus(i64 p, std::vector<i64> mod);

/// Element of a base field: v residues mod p, low degree first.
struct FieldElement {
    const FieldSpec* f = nullptr;
    std::vector<i64> c;

    FieldElement() = default;
    FieldElement(const FieldSpec& spec, std::vector<i64> cc) : f(&spec), c(std::move(cc)) {
        require(int(c.size()) == spec.v, "FieldElement size mismatch");
    }
    static FieldElement zero(const FieldSpec& s);
    static FieldElement one(const FieldSpec& s);
    static FieldElement from_int(const FieldSpec& s, i64 k);
    /// The class of y (the generator of F_q over F_p); for v = 1 this is 1.
    static FieldElement gen(const FieldSpec& s);

    bool is_zero() const;
    u64 index() const;  // value of the coordinate vector as a base-p integer
    static FieldElement from_index(const FieldSpec& s, u64 idx);
    std::string serial() const;  // comma list, low degree first

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inv() const;  // throws ZeroElement on 0
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
    FieldElement pow(Int e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

inline FieldElement ring_zero(const FieldElement& x) { return FieldElement::zero(*x.f); }
inline FieldElement ring_one(const FieldElement& x) { return FieldElement::one(*x.f); }
inline bool ring_is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement ring_from_int(const FieldElement& x, i64 k) { return FieldElement::from_int(*x.f, k); }
inline FieldElement ring_inv(const FieldElement& x) { return x.inv(); }

/// Extension tower F_{q^n} = F_q[x]/(mod), mod monic irreducible over F_q.
/// Interned like FieldSpec.  Lazy members cache the Frobenius matrix (the
/// matrix of x -> x^q over F_q), the trace functional, and the factorization
/// of q^n - 1; they are computed on first use.
struct TowerSpec {
    const FieldSpec* base = nullptr;
    int n = 0;
    std::vector<FieldElement> mod;  // n+1 coefficients over F_q
    std::vector<i64> mod_flat;      // same, as (n+1)*v residues
    Int qn;                         // q^n
    u64 qn_u64 = 0;
    bool qn_small = false;
    std::string key;

    mutable std::vector<i64> frob_mat;          // n x n over F_q, column-major flat (n*n*v)
    mutable std::vector<i64> trace_row;         // n entries over F_q (n*v)
    mutable std::vector<PrimePower> qn1_fact;   // factorization of q^n - 1
    mutable bool frob_ready = false, trace_ready = false, fact_ready = false;

    const std::vector<i64>& frobenius_matrix() const;
    const std::vector<i64>& trace_functional() const;
    const std::vector<PrimePower>& order_factorization() const;  // throws TooLarge if q^n-1 > cap
};

/// Tower with the lexicographically smallest monic irreducible modulus.
const TowerSpec& get_tower(const FieldSpec& base, int n);
/// Tower with an explicit modulus (checked monic irreducible over F_q).
const TowerSpec& get_tower_with_modulus(const FieldSpec& base, std::vector<FieldElement> mod);

/// Element of F_{q^n}: n coefficients over F_q, stored flat as n*v residues
/// mod p (coefficient i occupies c[i*v .. i*v+v)).
struct ExtElement {
    const TowerSpec* t = nullptr;
    std::vector<i64> c;

    ExtElement() = default;
    ExtElement(const TowerSpec& tw, std::vector<i64> flat) : t(&tw), c(std::move(flat)) {
        require(int(c.size()) == tw.n * tw.base->v, "ExtElement size mismatch");
    }
    static ExtElement zero(const TowerSpec& t);
    static ExtElement one(const TowerSpec& t);
    static ExtElement from_int(const TowerSpec& t, i64 k);
    static ExtElement gen(const TowerSpec& t);  // the class of x
    static ExtElement from_base(const TowerSpec& t, const FieldElement& a);
    static ExtElement from_coeffs(const TowerSpec& t, const std::vector<FieldElement>& cs);

    FieldElement coeff(int i) const;                 // coefficient of x^i as a base element
    std::vector<FieldElement> coeffs() const;        // all n of them
    bool is_zero() const;
    bool is_base() const;                            // lies in F_q (coefficients 1..n-1 zero)
    u64 index() const;
    static ExtElement from_index(const TowerSpec& t, u64 idx);
    std::string serial() const;                      // flat comma list of n*v residues

    ExtElement operator+(const ExtElement& o) const;
    ExtElement operator-(const ExtElement& o) const;
    ExtElement operator-() const;
    ExtElement operator*(const ExtElement& o) const;
    /// Mixed-type sum with a base field element (so generic polynomial
    /// evaluation can combine base coefficients with tower points).
    ExtElement operator+(const FieldElement& k) const;
    ExtElement inv() const;
    ExtElement operator/(const ExtElement& o) const { return *this * o.inv(); }
    ExtElement pow(Int e) const;  // e may be negative for invertible elements
    bool operator==(const ExtElement& o) const;
    bool operator!=(const ExtElement& o) const { return !(*this == o); }
};

inline ExtElement ring_zero(const ExtElement& x) { return ExtElement::zero(*x.t); }
inline ExtElement ring_one(const ExtElement& x) { return ExtElement::one(*x.t); }
inline bool ring_is_zero(const ExtElement& x) { return x.is_zero(); }
inline ExtElement ring_from_int(const ExtElement& x, i64 k) { return ExtElement::from_int(*x.t, k); }
inline ExtElement ring_inv(const ExtElement& x) { return x.inv(); }

/// x^(q^k); k is reduced mod n.  Uses the cached Frobenius matrix.
ExtElement frobenius(const ExtElement& x, i64 k = 1);

/// Relative trace from F_{q^n} to the subfield F_{q^d} (d | n, else
/// NotADivisor): sum of x^(q^(d*i)) for i < n/d.  The result lies in the
/// subfield (checked).
ExtElement tr_rel(const ExtElement& x, int d);
/// Relative norm to F_{q^d}: product of the same conjugates.
ExtElement norm_rel(const ExtElement& x, int d);
/// Absolute trace/norm down to F_q, as base field elements.
FieldElement tr_abs(const ExtElement& x);
FieldElement norm_abs(const ExtElement& x);

/// Multiplicative order (throws ZeroElement on 0, TooLarge if q^n-1 exceeds
/// the factoring cap).
u64 mult_order(const ExtElement& x);
bool is_primitive(const ExtElement& x);

/// Smallest-index element of multiplicative order exactly r (r | q^n - 1
/// required, else BadOrder).
ExtElement element_of_order(const TowerSpec& t, u64 r);
/// Smallest-index primitive element.
ExtElement primitive_element(const TowerSpec& t);

/// Monic minimal polynomial of x over F_q (degree = Frobenius orbit size).
UPoly<FieldElement> min_poly(const ExtElement& x);

/// Image of x under the F_q-embedding of its field into `target` sending x to
/// the smallest-index root of its minimal polynomial.
/// Requires deg(x's tower) | deg(target) (else EmbeddingFailure).
ExtElement embed(const ExtElement& x, const TowerSpec& target);

/// Monic irreducibility test over F_q.
bool is_irreducible_fq(const UPoly<FieldElement>& f);

/// A fixed F_q-homomorphism from one tower into a larger one, determined once
/// by the image of the source tower's generator.  Unlike per-element embed()
/// calls (which match each element's own minimal polynomial independently and
/// need not be mutually consistent), applying one FieldEmbedding to several
/// elements preserves sums and products, so joint structures survive.
struct FieldEmbedding {
    const TowerSpec* src = nullptr;
    const TowerSpec* dst = nullptr;
    ExtElement gen_image;

    ExtElement operator()(const ExtElement& x) const;
};

/// Build the embedding: requires the same base field (FieldMismatch) and
/// src.n | dst.n (EmbeddingFailure).  The generator's image is the
/// smallest-index root of the source modulus in dst; when src == dst the
/// identity map is returned.
FieldEmbedding make_embedding(const TowerSpec& src, const TowerSpec& dst);

/// All n*v F_p-coordinates of x as a dense row (identity map; for rank work).
std::vector<i64> fp_coordinates(const ExtElement& x);

}  // namespace nbt
