#include "nbt/cyclotomic.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "nbt/errors.hpp"

namespace nbt {

UPoly<Int> cyclotomic_polynomial(u64 m) {
    static std::map<u64, UPoly<Int>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    require(m >= 1, "cyclotomic polynomial index must be positive");

    // Phi_m = (x^m - 1) / prod of the lower cyclotomic polynomials.  The
    // recursion grounds out at Phi_1 = x - 1.
    std::function<UPoly<Int>(u64)> compute = [&](u64 mm) -> UPoly<Int> {
        if (auto it = memo.find(mm); it != memo.end()) return it->second;
        UPoly<Int> result = UPoly<Int>::zero(Int(0));
        if (mm == 1) {
            result = UPoly<Int>(std::vector<Int>{Int(-1), Int(1)});
        } else {
            UPoly<Int> num = UPoly<Int>::xpow(Int(0), size_t(mm)) - UPoly<Int>::one(Int(0));
            for (u64 d : divisors_u64(mm))
                if (d < mm) num = div_exact(num, compute(d));
            result = num;
        }
        memo.emplace(mm, result);
        return result;
    };
    return compute(m);
}

// ---------------------------------------------------------------------------
// CycInt: prime conductor, power-basis coordinates.
// ---------------------------------------------------------------------------

CycInt::CycInt(i64 p_, std::vector<Int> c_) : p(p_), c(std::move(c_)) {
    require(p >= 3 && is_prime_u64(u64(p)), "CycInt conductor must be an odd prime");
    require(c.size() == size_t(p - 1), "CycInt coordinate vector has wrong length");
}

CycInt CycInt::zero(i64 p) { return CycInt(p, std::vector<Int>(size_t(p - 1), Int(0))); }

CycInt CycInt::one(i64 p) { return from_int(p, Int(1)); }

CycInt CycInt::from_int(i64 p, const Int& k) {
    std::vector<Int> v(size_t(p - 1), Int(0));
    v[0] = k;
    return CycInt(p, std::move(v));
}

CycInt CycInt::omega_pow(i64 p, i64 k) {
    i64 e = ((k % p) + p) % p;
    std::vector<Int> v(size_t(p - 1), Int(0));
    if (e == p - 1) {
        for (auto& x : v) x = -1;  // w^{p-1} = -(1 + w + ... + w^{p-2})
    } else {
        v[size_t(e)] = 1;
    }
    return CycInt(p, std::move(v));
}

bool CycInt::is_zero() const {
    for (const Int& x : c)
        if (x != 0) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

Int CycInt::to_int() const {
    require(is_rational(), "cyclotomic integer is not rational");
    return c[0];
}

CycInt CycInt::operator+(const CycInt& o) const {
    require(p == o.p, "CycInt conductor mismatch");
    std::vector<Int> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i] + o.c[i];
    return CycInt(p, std::move(v));
}

CycInt CycInt::operator-(const CycInt& o) const {
    require(p == o.p, "CycInt conductor mismatch");
    std::vector<Int> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i] - o.c[i];
    return CycInt(p, std::move(v));
}

CycInt CycInt::operator-() const {
    std::vector<Int> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = -c[i];
    return CycInt(p, std::move(v));
}

namespace {
// Fold a length-p exponent accumulator onto the power basis: the w^{p-1}
// bucket is distributed as -1 onto every lower power.
std::vector<Int> fold_top_power(std::vector<Int> acc) {
    size_t top = acc.size() - 1;
    std::vector<Int> v(top);
    for (size_t i = 0; i < top; ++i) v[i] = acc[i] - acc[top];
    return v;
}
}  // namespace

CycInt CycInt::operator*(const CycInt& o) const {
    require(p == o.p, "CycInt conductor mismatch");
    std::vector<Int> acc(size_t(p), Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j] == 0) continue;
            acc[(i + j) % size_t(p)] += c[i] * o.c[j];
        }
    }
    return CycInt(p, fold_top_power(std::move(acc)));
}

CycInt CycInt::operator+(const Int& k) const {
    CycInt r = *this;
    r.c[0] += k;
    return r;
}

CycInt CycInt::scaled(const Int& k) const {
    std::vector<Int> v(c.size());
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i] * k;
    return CycInt(p, std::move(v));
}

bool CycInt::operator==(const CycInt& o) const { return p == o.p && c == o.c; }

CycInt CycInt::galois(i64 k) const {
    i64 kk = ((k % p) + p) % p;
    if (kk == 0) throw NotCoprime("galois exponent divisible by the conductor");
    std::vector<Int> acc(size_t(p), Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        acc[size_t((i64(i) * kk) % p)] += c[i];
    }
    return CycInt(p, fold_top_power(std::move(acc)));
}

CycInt ring_zero(const CycInt& x) { return CycInt::zero(x.p); }
CycInt ring_one(const CycInt& x) { return CycInt::one(x.p); }
bool ring_is_zero(const CycInt& x) { return x.is_zero(); }
CycInt ring_from_int(const CycInt& x, i64 k) { return CycInt::from_int(x.p, Int(k)); }
CycInt ring_inv(const CycInt& x) {
    if (x.is_rational() && (x.c[0] == 1 || x.c[0] == -1)) return x;
    throw DivisionByZeroPoly("cyclotomic leading coefficient is not +-1");
}

// ---------------------------------------------------------------------------
// CycElement: arbitrary conductor, reduced mod Phi_m.
// ---------------------------------------------------------------------------

const CycRing& get_cyc_ring(i64 m) {
    static std::map<i64, std::unique_ptr<CycRing>> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = registry.find(m); it != registry.end()) return *it->second;
    require(m >= 1, "cyclotomic ring index must be positive");

    auto ring = std::make_unique<CycRing>();
    ring->m = m;
    ring->phi = cyclotomic_polynomial(u64(m));
    ring->zeta_powers.reserve(size_t(m));
    UPoly<Int> cur = UPoly<Int>::one(Int(0));
    for (i64 k = 0; k < m; ++k) {
        ring->zeta_powers.push_back(cur);
        // multiply by x, then reduce (x * cur has degree <= deg Phi_m, so a
        // single leading-term subtraction suffices; divmod keeps it simple)
        std::vector<Int> shifted(cur.c.size() + 1, Int(0));
        for (size_t i = 0; i < cur.c.size(); ++i) shifted[i + 1] = cur.c[i];
        cur = divmod(UPoly<Int>(std::move(shifted)), ring->phi).second;
    }
    auto [it, inserted] = registry.emplace(m, std::move(ring));
    require(inserted, "cyclotomic ring registry collision");
    return *it->second;
}

CycElement CycElement::zero(const CycRing& r) { return CycElement{&r, UPoly<Int>::zero(Int(0))}; }
CycElement CycElement::one(const CycRing& r) { return CycElement{&r, UPoly<Int>::one(Int(0))}; }

CycElement CycElement::from_int(const CycRing& r, const Int& k) {
    return CycElement{&r, UPoly<Int>::constant(k)};
}

CycElement CycElement::zeta_pow(const CycRing& r, i64 k) {
    i64 e = ((k % r.m) + r.m) % r.m;
    return CycElement{&r, r.zeta_powers[size_t(e)]};
}

CycElement CycElement::from_poly(const CycRing& r, const UPoly<Int>& f) {
    return CycElement{&r, divmod(f, r.phi).second};
}

bool CycElement::is_zero() const { return f.is_zero(); }
bool CycElement::is_rational() const { return f.deg() <= 0; }

Int CycElement::to_int() const {
    require(is_rational(), "cyclotomic element is not rational");
    return f.coeff(0);
}

CycElement CycElement::operator+(const CycElement& o) const {
    require(r == o.r, "cyclotomic ring mismatch");
    return CycElement{r, f + o.f};
}

CycElement CycElement::operator-(const CycElement& o) const {
    require(r == o.r, "cyclotomic ring mismatch");
    return CycElement{r, f - o.f};
}

CycElement CycElement::operator-() const { return CycElement{r, -f}; }

CycElement CycElement::operator*(const CycElement& o) const {
    require(r == o.r, "cyclotomic ring mismatch");
    return CycElement{r, divmod(f * o.f, r->phi).second};
}

CycElement CycElement::operator+(const Int& k) const {
    return CycElement{r, f + UPoly<Int>::constant(k)};
}

bool CycElement::operator==(const CycElement& o) const { return r == o.r && f == o.f; }

CycElement CycElement::galois(i64 t) const {
    i64 tt = ((t % r->m) + r->m) % r->m;
    if (std::gcd(tt, r->m) != 1) throw NotCoprime("galois exponent shares a factor with the conductor");
    UPoly<Int> acc = UPoly<Int>::zero(Int(0));
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        acc = acc + scale(r->zeta_powers[size_t((i64(i) * tt) % r->m)], f.c[i]);
    }
    return CycElement{r, acc};
}

CycElement ring_zero(const CycElement& x) { return CycElement::zero(*x.r); }
CycElement ring_one(const CycElement& x) { return CycElement::one(*x.r); }
bool ring_is_zero(const CycElement& x) { return x.is_zero(); }
CycElement ring_from_int(const CycElement& x, i64 k) {
    return CycElement::from_int(*x.r, Int(k));
}
CycElement ring_inv(const CycElement& x) {
    if (x.is_rational() && (x.f.coeff(0) == 1 || x.f.coeff(0) == -1)) return x;
    throw DivisionByZeroPoly("cyclotomic leading coefficient is not +-1");
}

}  // namespace nbt
