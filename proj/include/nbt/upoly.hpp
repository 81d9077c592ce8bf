#pragma once
#include <string>
#include <utility>
#include <vector>

#include "nbt/numutil.hpp"

namespace nbt {

// Ring-trait hooks.  Every coefficient type T supplies ring_zero/ring_one/
// ring_is_zero/ring_from_int overloads (found by ADL from an exemplar value),
// and field types additionally supply ring_inv.
inline Int ring_zero(const Int&) { return Int(0); }
inline Int ring_one(const Int&) { return Int(1); }
inline bool ring_is_zero(const Int& x) { return x == 0; }
inline Int ring_from_int(const Int&, i64 k) { return Int(k); }
inline Int ring_inv(const Int& x) {
    if (x != 1 && x != -1) throw DivisionByZeroPoly("integer leading coefficient not a unit");
    return x;
}

inline Rat ring_zero(const Rat&) { return Rat(0); }
inline Rat ring_one(const Rat&) { return Rat(1); }
inline bool ring_is_zero(const Rat& x) { return x == 0; }
inline Rat ring_from_int(const Rat&, i64 k) { return Rat(k); }
inline Rat ring_inv(const Rat& x) {
    if (x == 0) throw DivisionByZeroPoly("rational inverse of zero");
    return Rat(1) / x;
}

/// Dense univariate polynomial with coefficients stored low degree first.
/// Invariant: the coefficient vector is never empty (the zero polynomial is a
/// single zero coefficient), and the top stored coefficient of a nonzero
/// polynomial is nonzero.  Keeping at least one coefficient means any UPoly
/// can act as an exemplar for its coefficient ring.
template <class T>
struct UPoly {
    std::vector<T> c;

    explicit UPoly(std::vector<T> cc) : c(std::move(cc)) {
        require(!c.empty(), "UPoly needs at least one coefficient");
        normalize();
    }
    UPoly(std::initializer_list<T> cc) : UPoly(std::vector<T>(cc)) {}

    void normalize() {
        while (c.size() > 1 && ring_is_zero(c.back())) c.pop_back();
    }

    static UPoly zero(const T& ex) { return UPoly(std::vector<T>{ring_zero(ex)}); }
    static UPoly one(const T& ex) { return UPoly(std::vector<T>{ring_one(ex)}); }
    static UPoly x(const T& ex) { return UPoly(std::vector<T>{ring_zero(ex), ring_one(ex)}); }
    /// x^k with unit coefficient.
    static UPoly xpow(const T& ex, size_t k) {
        std::vector<T> v(k + 1, ring_zero(ex));
        v[k] = ring_one(ex);
        return UPoly(std::move(v));
    }
    static UPoly constant(const T& v) { return UPoly(std::vector<T>{v}); }

    const T& exemplar() const { return c[0]; }
    bool is_zero() const { return c.size() == 1 && ring_is_zero(c[0]); }
    int deg() const { return is_zero() ? -1 : int(c.size()) - 1; }
    const T& lead() const { return c.back(); }
    T coeff(size_t i) const { return i < c.size() ? c[i] : ring_zero(c[0]); }
    bool is_monic() const { return !is_zero() && ring_is_zero(lead() - ring_one(c[0])); }

    bool operator==(const UPoly& o) const {
        if (c.size() != o.c.size()) return false;
        for (size_t i = 0; i < c.size(); ++i)
            if (!ring_is_zero(c[i] - o.c[i])) return false;
        return true;
    }
    bool operator!=(const UPoly& o) const { return !(*this == o); }
};

template <class T>
UPoly<T> operator+(const UPoly<T>& a, const UPoly<T>& b) {
    std::vector<T> v(std::max(a.c.size(), b.c.size()), ring_zero(a.c[0]));
    for (size_t i = 0; i < a.c.size(); ++i) v[i] = v[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) v[i] = v[i] + b.c[i];
    return UPoly<T>(std::move(v));
}

template <class T>
UPoly<T> operator-(const UPoly<T>& a) {
    std::vector<T> v = a.c;
    for (auto& x : v) x = ring_zero(a.c[0]) - x;
    return UPoly<T>(std::move(v));
}

template <class T>
UPoly<T> operator-(const UPoly<T>& a, const UPoly<T>& b) {
    return a + (-b);
}

template <class T>
UPoly<T> operator*(const UPoly<T>& a, const UPoly<T>& b) {
    if (a.is_zero() || b.is_zero()) return UPoly<T>::zero(a.c[0]);
    std::vector<T> v(a.c.size() + b.c.size() - 1, ring_zero(a.c[0]));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (ring_is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) v[i + j] = v[i + j] + a.c[i] * b.c[j];
    }
    return UPoly<T>(std::move(v));
}

template <class T>
UPoly<T> scale(const UPoly<T>& a, const T& s) {
    std::vector<T> v = a.c;
    for (auto& x : v) x = x * s;
    return UPoly<T>(std::move(v));
}

/// Quotient and remainder; requires the leading coefficient of b to be
/// invertible in the coefficient ring.  Throws DivisionByZeroPoly on b == 0.
template <class T>
std::pair<UPoly<T>, UPoly<T>> divmod(const UPoly<T>& a, const UPoly<T>& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("divmod by zero polynomial");
    if (a.deg() < b.deg()) return {UPoly<T>::zero(a.c[0]), a};
    T linv = ring_inv(b.lead());
    std::vector<T> rem = a.c;
    std::vector<T> quo(size_t(a.deg() - b.deg()) + 1, ring_zero(a.c[0]));
    for (int i = a.deg(); i >= b.deg(); --i) {
        T q = rem[size_t(i)] * linv;
        if (ring_is_zero(q)) continue;
        quo[size_t(i - b.deg())] = q;
        for (int j = 0; j <= b.deg(); ++j)
            rem[size_t(i - b.deg() + j)] = rem[size_t(i - b.deg() + j)] - q * b.c[size_t(j)];
    }
    return {UPoly<T>(std::move(quo)), UPoly<T>(std::move(rem))};
}

/// Exact division; throws InternalCheck if the remainder is nonzero.
template <class T>
UPoly<T> div_exact(const UPoly<T>& a, const UPoly<T>& b) {
    auto [q, r] = divmod(a, b);
    require(r.is_zero(), "div_exact: nonzero remainder");
    return q;
}

template <class T>
UPoly<T> make_monic(const UPoly<T>& a) {
    if (a.is_zero()) return a;
    return scale(a, ring_inv(a.lead()));
}

/// Monic gcd over a field.
template <class T>
UPoly<T> gcd_monic(UPoly<T> a, UPoly<T> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Extended gcd over a field: returns (g, u, v) with u*a + v*b = g, g monic.
template <class T>
std::tuple<UPoly<T>, UPoly<T>, UPoly<T>> egcd(const UPoly<T>& a, const UPoly<T>& b) {
    UPoly<T> r0 = a, r1 = b;
    UPoly<T> s0 = UPoly<T>::one(a.c[0]), s1 = UPoly<T>::zero(a.c[0]);
    UPoly<T> t0 = UPoly<T>::zero(a.c[0]), t1 = UPoly<T>::one(a.c[0]);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly<T> s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
        UPoly<T> t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T linv = ring_inv(r0.lead());
    return {scale(r0, linv), scale(s0, linv), scale(t0, linv)};
}

template <class T>
UPoly<T> mulmod(const UPoly<T>& a, const UPoly<T>& b, const UPoly<T>& m) {
    return divmod(a * b, m).second;
}

template <class T>
UPoly<T> pow_mod(UPoly<T> base, Int e, const UPoly<T>& m) {
    require(e >= 0, "pow_mod: negative exponent");
    UPoly<T> r = divmod(UPoly<T>::one(base.c[0]), m).second;
    base = divmod(base, m).second;
    while (e > 0) {
        if ((e & 1) != 0) r = mulmod(r, base, m);
        e >>= 1;
        if (e > 0) base = mulmod(base, base, m);
    }
    return r;
}

template <class T, class X>
X eval(const UPoly<T>& f, const X& x) {
    X acc = x - x;  // zero of X's ring
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * x + f.c[i];
    return acc;
}

template <class T>
UPoly<T> derivative(const UPoly<T>& f) {
    if (f.deg() <= 0) return UPoly<T>::zero(f.c[0]);
    std::vector<T> v(f.c.size() - 1, ring_zero(f.c[0]));
    for (size_t i = 1; i < f.c.size(); ++i) v[i - 1] = f.c[i] * ring_from_int(f.c[0], i64(i));
    return UPoly<T>(std::move(v));
}

/// Reverses the coefficient vector: x^deg(f) * f(1/x).  Requires a nonzero
/// constant term so the degree (and double-reversal identity) is preserved.
template <class T>
UPoly<T> reciprocal(const UPoly<T>& f) {
    if (f.is_zero() || ring_is_zero(f.c[0]))
        throw ZeroConstantTerm("reciprocal needs a nonzero constant term");
    std::vector<T> v(f.c.rbegin(), f.c.rend());
    return UPoly<T>(std::move(v));
}

template <class T>
UPoly<T> compose(const UPoly<T>& f, const UPoly<T>& g) {
    UPoly<T> acc = UPoly<T>::zero(f.c[0]);
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * g + UPoly<T>::constant(f.c[i]);
    return acc;
}

/// Resultant of f and g over a field, by the Euclidean recursion.
template <class T>
T resultant(const UPoly<T>& f, const UPoly<T>& g) {
    T one = ring_one(f.c[0]);
    if (f.is_zero() || g.is_zero()) {
        if (f.deg() == 0 || g.deg() == 0) return one;
        return ring_zero(f.c[0]);
    }
    if (f.deg() < g.deg()) {
        T r = resultant(g, f);
        return (f.deg() * g.deg()) % 2 ? ring_zero(one) - r : r;
    }
    if (g.deg() == 0) {
        T r = one;
        for (int i = 0; i < f.deg(); ++i) r = r * g.c[0];
        return r;
    }
    UPoly<T> rem = divmod(f, g).second;
    int dr = rem.is_zero() ? 0 : rem.deg();
    if (rem.is_zero()) return ring_zero(one);
    T lead_pow = one;
    for (int i = 0; i < f.deg() - dr; ++i) lead_pow = lead_pow * g.lead();
    T sub = resultant(g, rem);
    T r = lead_pow * sub;
    return (f.deg() * g.deg()) % 2 ? ring_zero(one) - r : r;
}

UPoly<Rat> to_rat(const UPoly<Int>& f);
UPoly<Int> to_int_checked(const UPoly<Rat>& f);

/// Discriminant of an integer polynomial: (-1)^{m(m-1)/2} Res(f, f') / lc(f).
Int discriminant_int(const UPoly<Int>& f);

/// Renders with descending powers, e.g. "x^3 + x^2 - 2*x - 1".
std::string to_human(const UPoly<Int>& f);
/// Parses the same shape to_human produces (signs, optional '*', x^k terms).
UPoly<Int> parse_human_int(const std::string& s);

/// Canonical low-degree-first comma serialization, e.g. "-1,-2,1,1".
std::string to_csv(const UPoly<Int>& f);
UPoly<Int> parse_csv_int(const std::string& s);

}  // namespace nbt
