#include "nbt/ff.hpp"

#include <map>
#include <sstream>

namespace nbt {
namespace {

inline i64 rmod(i64 a, i64 p) {
    a %= p;
    return a < 0 ? a + p : a;
}

// ---- raw F_p polynomial helpers (low degree first vectors) ----

std::vector<i64> fp_trim(std::vector<i64> a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

// a*b mod (p, m) where m is monic of degree v; a,b have length <= v.
std::vector<i64> fp_mulmod(const std::vector<i64>& a, const std::vector<i64>& b,
                           const std::vector<i64>& m, i64 p) {
    size_t v = m.size() - 1;
    std::vector<i64> buf(2 * v - 1 > 0 ? 2 * v - 1 : 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) buf[i + j] += a[i] * b[j];
    }
    for (size_t i = buf.size(); i-- > v;) {
        i64 t = rmod(buf[i], p);
        if (t == 0) continue;
        for (size_t j = 0; j < v; ++j) buf[i - v + j] -= t * m[j];
        buf[i] = 0;
    }
    std::vector<i64> out(v);
    for (size_t i = 0; i < v; ++i) out[i] = rmod(buf[i], p);
    return out;
}

// Inverse of a modulo (p, m) by the extended Euclidean algorithm on raw
// coefficient vectors over F_p.
std::vector<i64> fp_invmod(std::vector<i64> a, const std::vector<i64>& m, i64 p) {
    auto deg = [](const std::vector<i64>& x) { return int(x.size()) - 1; };
    std::vector<i64> r0 = m, r1 = fp_trim(std::move(a));
    if (r1.size() == 1 && r1[0] == 0) throw ZeroElement("inverse of zero field element");
    std::vector<i64> s0{0}, s1{1};
    while (!(r1.size() == 1 && r1[0] == 0)) {
        // divide r0 by r1
        std::vector<i64> rem = r0;
        std::vector<i64> quo(std::max<size_t>(1, rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1), 0);
        i64 linv = inverse_mod(r1.back(), p);
        for (int i = deg(rem); i >= deg(r1) && i >= 0; --i) {
            i64 qd = rmod(rem[size_t(i)] * linv, p);
            if (qd == 0) continue;
            quo[size_t(i - deg(r1))] = qd;
            for (int j = 0; j <= deg(r1); ++j)
                rem[size_t(i - deg(r1) + j)] = rmod(rem[size_t(i - deg(r1) + j)] - qd * r1[size_t(j)], p);
        }
        rem = fp_trim(std::move(rem));
        // s = s0 - quo*s1
        std::vector<i64> qs(quo.size() + s1.size() - 1, 0);
        for (size_t i = 0; i < quo.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] = rmod(qs[i + j] + quo[i] * s1[j], p);
        std::vector<i64> s(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s[i] = rmod(s[i] - qs[i], p);
        s = fp_trim(std::move(s));
        r0 = fp_trim(std::move(r1));
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    require(r0.size() == 1, "fp_invmod: gcd not constant (modulus not irreducible?)");
    i64 ginv = inverse_mod(r0[0], p);
    size_t v = m.size() - 1;
    std::vector<i64> out(v, 0);
    for (size_t i = 0; i < s0.size() && i < v; ++i) out[i] = rmod(s0[i] * ginv, p);
    return out;
}

struct Registries {
    std::map<std::string, std::unique_ptr<FieldSpec>> fields;
    std::map<std::string, std::unique_ptr<TowerSpec>> towers;
};
Registries& regs() {
    static Registries r;
    return r;
}

std::string field_key(i64 p, const std::vector<i64>& mod) {
    std::ostringstream os;
    os << "F" << p;
    for (auto x : mod) os << "," << x;
    return os.str();
}

std::string tower_key(const FieldSpec& base, const std::vector<FieldElement>& mod) {
    std::ostringstream os;
    os << base.key << "|T";
    for (auto& x : mod) os << ";" << x.serial();
    return os.str();
}

const FieldSpec& intern_field(i64 p, int v, std::vector<i64> mod) {
    std::string key = field_key(p, mod);
    auto it = regs().fields.find(key);
    if (it != regs().fields.end()) return *it->second;
    auto spec = std::make_unique<FieldSpec>();
    spec->p = p;
    spec->v = v;
    spec->mod = std::move(mod);
    spec->q = int_pow(Int(p), u64(v));
    spec->q_small = spec->q <= Int(std::numeric_limits<i64>::max());
    if (spec->q_small) spec->q_u64 = u64(spec->q);
    spec->key = key;
    auto& slot = regs().fields[key];
    slot = std::move(spec);
    return *slot;
}

}  // namespace

// ---- FieldElement ----

FieldElement FieldElement::zero(const FieldSpec& s) { return FieldElement(s, std::vector<i64>(size_t(s.v), 0)); }

FieldElement FieldElement::one(const FieldSpec& s) {
    std::vector<i64> c(size_t(s.v), 0);
    c[0] = s.p == 1 ? 0 : 1 % s.p;
    return FieldElement(s, std::move(c));
}

FieldElement FieldElement::from_int(const FieldSpec& s, i64 k) {
    std::vector<i64> c(size_t(s.v), 0);
    c[0] = rmod(k, s.p);
    return FieldElement(s, std::move(c));
}

FieldElement FieldElement::gen(const FieldSpec& s) {
    if (s.v == 1) return one(s);
    std::vector<i64> c(size_t(s.v), 0);
    c[1] = 1;
    return FieldElement(s, std::move(c));
}

bool FieldElement::is_zero() const {
    for (auto x : c)
        if (x) return false;
    return true;
}

u64 FieldElement::index() const {
    u64 idx = 0;
    for (size_t i = c.size(); i-- > 0;) idx = idx * u64(f->p) + u64(c[i]);
    return idx;
}

FieldElement FieldElement::from_index(const FieldSpec& s, u64 idx) {
    std::vector<i64> c(size_t(s.v), 0);
    for (int i = 0; i < s.v; ++i) {
        c[size_t(i)] = i64(idx % u64(s.p));
        idx /= u64(s.p);
    }
    require(idx == 0, "from_index: index out of range");
    return FieldElement(s, std::move(c));
}

std::string FieldElement::serial() const {
    std::ostringstream os;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    return os.str();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (f != o.f) throw FieldMismatch("FieldElement +");
    std::vector<i64> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = rmod(c[i] + o.c[i], f->p);
    return FieldElement(*f, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (f != o.f) throw FieldMismatch("FieldElement -");
    std::vector<i64> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = rmod(c[i] - o.c[i], f->p);
    return FieldElement(*f, std::move(r));
}

FieldElement FieldElement::operator-() const {
    std::vector<i64> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = rmod(-c[i], f->p);
    return FieldElement(*f, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (f != o.f) throw FieldMismatch("FieldElement *");
    if (f->v == 1) return FieldElement(*f, {rmod(c[0] * o.c[0], f->p)});
    return FieldElement(*f, fp_mulmod(c, o.c, f->mod, f->p));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw ZeroElement("FieldElement::inv");
    if (f->v == 1) return FieldElement(*f, {inverse_mod(c[0], f->p)});
    return FieldElement(*f, fp_invmod(c, f->mod, f->p));
}

FieldElement FieldElement::pow(Int e) const {
    if (e < 0) return inv().pow(-e);
    FieldElement r = one(*f), b = *this;
    while (e > 0) {
        if ((e & 1) != 0) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const { return f == o.f && c == o.c; }

// ---- field registry / modulus search ----

bool is_irreducible_fq(const UPoly<FieldElement>& f) {
    int n = f.deg();
    require(n >= 1 && f.is_monic(), "is_irreducible_fq expects a monic polynomial of degree >= 1");
    if (n == 1) return true;
    const FieldSpec& s = *f.c[0].f;
    UPoly<FieldElement> x = UPoly<FieldElement>::x(f.c[0]);
    // y_d = x^(q^d) mod f, advanced one Frobenius step at a time.
    UPoly<FieldElement> y = divmod(x, f).second;
    auto dividers = factor_u64(u64(n));
    std::vector<int> checkpoints;
    for (auto& pp : dividers) checkpoints.push_back(n / int(pp.p));
    for (int d = 1; d <= n; ++d) {
        y = pow_mod(y, s.q, f);
        for (int chk : checkpoints) {
            if (d == chk) {
                UPoly<FieldElement> g = gcd_monic(y - x, f);
                if (g.deg() != 0) return false;
            }
        }
    }
    return y == divmod(x, f).second;
}

const FieldSpec& get_field(i64 p, int v) {
    if (p < 2 || !is_prime_u64(u64(p))) throw NotPrime("get_field: p = " + std::to_string(p));
    require(v >= 1, "get_field: v >= 1");
    if (v == 1) return intern_field(p, 1, {0, 1});
    const FieldSpec& fp = get_field(p, 1);
    // Lexicographically smallest monic irreducible: coefficient tuples
    // (c_0,...,c_{v-1}) compared left to right, c_0 != 0.
    for (i64 c0 = 1; c0 < p; ++c0) {
        u64 span = 1;
        for (int i = 1; i < v; ++i) span *= u64(p);
        for (u64 m = 0; m < span; ++m) {
            std::vector<FieldElement> cs(size_t(v) + 1, FieldElement::zero(fp));
            cs[0] = FieldElement::from_int(fp, c0);
            u64 mm = m;
            for (int i = v - 1; i >= 1; --i) {
                cs[size_t(i)] = FieldElement::from_int(fp, i64(mm % u64(p)));
                mm /= u64(p);
            }
            cs[size_t(v)] = FieldElement::one(fp);
            UPoly<FieldElement> cand(cs);
            if (is_irreducible_fq(cand)) {
                std::vector<i64> mod(size_t(v) + 1);
                for (int i = 0; i <= v; ++i) mod[size_t(i)] = cand.c[size_t(i)].c[0];
                return intern_field(p, v, std::move(mod));
            }
        }
    }
    throw InternalCheck("no irreducible polynomial found");  // unreachable
}

const FieldSpec& get_field_with_modulus(i64 p, std::vector<i64> mod) {
    if (p < 2 || !is_prime_u64(u64(p))) throw NotPrime("get_field_with_modulus");
    require(mod.size() >= 2, "modulus must have degree >= 1");
    for (auto& x : mod) x = rmod(x, p);
    require(mod.back() == 1, "modulus must be monic");
    int v = int(mod.size()) - 1;
    if (v > 1) {
        const FieldSpec& fp = get_field(p, 1);
        std::vector<FieldElement> cs;
        for (auto x : mod) cs.push_back(FieldElement::from_int(fp, x));
        if (!is_irreducible_fq(UPoly<FieldElement>(cs))) throw NotIrreducible("field modulus");
    }
    return intern_field(p, v, std::move(mod));
}

// ---- TowerSpec ----

namespace {

std::vector<i64> flatten(const std::vector<FieldElement>& v) {
    std::vector<i64> out;
    for (auto& x : v) out.insert(out.end(), x.c.begin(), x.c.end());
    return out;
}

const TowerSpec& intern_tower(const FieldSpec& base, std::vector<FieldElement> mod) {
    std::string key = tower_key(base, mod);
    auto it = regs().towers.find(key);
    if (it != regs().towers.end()) return *it->second;
    auto t = std::make_unique<TowerSpec>();
    t->base = &base;
    t->n = int(mod.size()) - 1;
    t->mod_flat = flatten(mod);
    t->mod = std::move(mod);
    t->qn = int_pow(base.q, u64(t->n));
    t->qn_small = t->qn <= Int(std::numeric_limits<i64>::max());
    if (t->qn_small) t->qn_u64 = u64(t->qn);
    t->key = key;
    auto& slot = regs().towers[key];
    slot = std::move(t);
    return *slot;
}

// out = a*b in F_{q^n}, all flat (n*v residues each).
void ext_mul_flat(const TowerSpec& T, const i64* a, const i64* b, i64* out) {
    const int n = T.n, v = T.base->v;
    const i64 p = T.base->p;
    if (v == 1) {
        // Lazy-reduction schoolbook multiply; coefficients stay well inside
        // i64 for the small characteristics this library works at.
        std::vector<i64> buf(size_t(2 * n - 1), 0);
        for (int i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < n; ++j) buf[size_t(i + j)] += a[i] * b[j];
        }
        for (int i = 2 * n - 2; i >= n; --i) {
            i64 t = rmod(buf[size_t(i)], p);
            if (t) {
                for (int j = 0; j < n; ++j) buf[size_t(i - n + j)] -= t * T.mod_flat[size_t(j)];
            }
        }
        for (int i = 0; i < n; ++i) out[i] = rmod(buf[size_t(i)], p);
        return;
    }
    // General base: convolve F_q coefficients, then reduce by the monic
    // tower modulus using base-field multiplication.
    const auto& m = T.base->mod;
    auto cmul = [&](const i64* x, const i64* y) {
        std::vector<i64> xx(x, x + v), yy(y, y + v);
        return fp_mulmod(xx, yy, m, p);
    };
    std::vector<i64> buf(size_t((2 * n - 1) * v), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto prod = cmul(a + size_t(i) * v, b + size_t(j) * v);
            i64* dst = buf.data() + size_t(i + j) * v;
            for (int k = 0; k < v; ++k) dst[k] = rmod(dst[k] + prod[size_t(k)], p);
        }
    for (int i = 2 * n - 2; i >= n; --i) {
        i64* top = buf.data() + size_t(i) * v;
        bool nonzero = false;
        for (int k = 0; k < v; ++k) nonzero |= top[k] != 0;
        if (!nonzero) continue;
        for (int j = 0; j < n; ++j) {
            auto prod = cmul(top, T.mod_flat.data() + size_t(j) * v);
            i64* dst = buf.data() + size_t(i - n + j) * v;
            for (int k = 0; k < v; ++k) dst[k] = rmod(dst[k] - prod[size_t(k)], p);
        }
        for (int k = 0; k < v; ++k) top[k] = 0;
    }
    std::copy(buf.begin(), buf.begin() + size_t(n) * v, out);
}

void apply_frob_matrix(const TowerSpec& T, const i64* x, i64* out) {
    const int n = T.n, v = T.base->v;
    const i64 p = T.base->p;
    const auto& M = T.frobenius_matrix();  // column-major: column i at M[i*n*v ...]
    if (v == 1) {
        std::vector<i64> acc(size_t(n), 0);
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            const i64* col = M.data() + size_t(i) * n;
            for (int k = 0; k < n; ++k) acc[size_t(k)] += x[i] * col[k];
        }
        for (int k = 0; k < n; ++k) out[k] = rmod(acc[size_t(k)], p);
        return;
    }
    const auto& m = T.base->mod;
    std::vector<i64> acc(size_t(n) * v, 0);
    for (int i = 0; i < n; ++i) {
        const i64* xi = x + size_t(i) * v;
        bool nz = false;
        for (int k = 0; k < v; ++k) nz |= xi[k] != 0;
        if (!nz) continue;
        const i64* col = M.data() + size_t(i) * n * v;
        std::vector<i64> xv(xi, xi + v);
        for (int k = 0; k < n; ++k) {
            std::vector<i64> cv(col + size_t(k) * v, col + size_t(k + 1) * v);
            auto prod = fp_mulmod(xv, cv, m, p);
            i64* dst = acc.data() + size_t(k) * v;
            for (int t = 0; t < v; ++t) dst[t] = rmod(dst[t] + prod[size_t(t)], p);
        }
    }
    std::copy(acc.begin(), acc.end(), out);
}

}  // namespace

const std::vector<i64>& TowerSpec::frobenius_matrix() const {
    if (frob_ready) return frob_mat;
    const int v = base->v;
    // x^q computed once by square-and-multiply, then columns (x^i)^q = (x^q)^i.
    ExtElement xq = ExtElement::gen(*this).pow(base->q);
    ExtElement col = ExtElement::one(*this);
    frob_mat.assign(size_t(n) * n * v, 0);
    for (int i = 0; i < n; ++i) {
        std::copy(col.c.begin(), col.c.end(), frob_mat.begin() + size_t(i) * n * v);
        if (i + 1 < n) col = col * xq;
    }
    frob_ready = true;
    return frob_mat;
}

const std::vector<i64>& TowerSpec::trace_functional() const {
    if (trace_ready) return trace_row;
    const int v = base->v;
    trace_row.assign(size_t(n) * v, 0);
    ExtElement xi = ExtElement::one(*this);
    for (int i = 0; i < n; ++i) {
        ExtElement acc = xi, t = xi;
        for (int j = 1; j < n; ++j) {
            t = frobenius(t, 1);
            acc = acc + t;
        }
        require(acc.is_base(), "trace of a power fell outside the base field");
        for (int k = 0; k < v; ++k) trace_row[size_t(i) * v + k] = acc.c[size_t(k)];
        if (i + 1 < n) xi = xi * ExtElement::gen(*this);
    }
    trace_ready = true;
    return trace_row;
}

const std::vector<PrimePower>& TowerSpec::order_factorization() const {
    if (fact_ready) return qn1_fact;
    if (!qn_small || qn - 1 > Int(kFactorCap))
        throw TooLarge("order factorization beyond the 2^40 trial-division cap");
    qn1_fact = factor_u64(qn_u64 - 1);
    fact_ready = true;
    return qn1_fact;
}

const TowerSpec& get_tower(const FieldSpec& base, int n) {
    require(n >= 1, "get_tower: n >= 1");
    if (n == 1) {
        std::vector<FieldElement> mod{FieldElement::zero(base), FieldElement::one(base)};
        return intern_tower(base, std::move(mod));
    }
    u64 q = base.q_small ? base.q_u64 : 0;
    require(q != 0, "get_tower: base too large to search");
    u64 span = 1;
    for (int i = 1; i < n; ++i) {
        require(span < (u64(1) << 50) / q, "get_tower: search space too large");
        span *= q;
    }
    for (u64 c0 = 1; c0 < q; ++c0) {
        for (u64 m = 0; m < span; ++m) {
            std::vector<FieldElement> cs(size_t(n) + 1, FieldElement::zero(base));
            cs[0] = FieldElement::from_index(base, c0);
            u64 mm = m;
            for (int i = n - 1; i >= 1; --i) {
                cs[size_t(i)] = FieldElement::from_index(base, mm % q);
                mm /= q;
            }
            cs[size_t(n)] = FieldElement::one(base);
            UPoly<FieldElement> cand(cs);
            if (is_irreducible_fq(cand)) return intern_tower(base, cand.c);
        }
    }
    throw InternalCheck("no irreducible tower modulus found");  // unreachable
}

const TowerSpec& get_tower_with_modulus(const FieldSpec& base, std::vector<FieldElement> mod) {
    require(mod.size() >= 2, "tower modulus must have degree >= 1");
    for (auto& x : mod)
        if (x.f != &base) throw FieldMismatch("tower modulus coefficients");
    UPoly<FieldElement> f(mod);
    require(int(mod.size()) == f.deg() + 1, "tower modulus has zero leading coefficient");
    require(f.is_monic(), "tower modulus must be monic");
    if (f.deg() > 1 && !is_irreducible_fq(f)) throw NotIrreducible("tower modulus");
    return intern_tower(base, std::move(mod));
}

// ---- ExtElement ----

ExtElement ExtElement::zero(const TowerSpec& t) {
    return ExtElement(t, std::vector<i64>(size_t(t.n) * t.base->v, 0));
}

ExtElement ExtElement::one(const TowerSpec& t) {
    auto e = zero(t);
    e.c[0] = t.base->p == 1 ? 0 : 1;
    return e;
}

ExtElement ExtElement::from_int(const TowerSpec& t, i64 k) {
    auto e = zero(t);
    e.c[0] = rmod(k, t.base->p);
    return e;
}

ExtElement ExtElement::gen(const TowerSpec& t) {
    auto e = zero(t);
    require(t.n >= 2, "ExtElement::gen needs degree >= 2");
    e.c[size_t(t.base->v)] = 1;
    return e;
}

ExtElement ExtElement::from_base(const TowerSpec& t, const FieldElement& a) {
    if (a.f != t.base) throw FieldMismatch("from_base");
    auto e = zero(t);
    std::copy(a.c.begin(), a.c.end(), e.c.begin());
    return e;
}

ExtElement ExtElement::from_coeffs(const TowerSpec& t, const std::vector<FieldElement>& cs) {
    require(int(cs.size()) <= t.n, "from_coeffs: too many coefficients");
    auto e = zero(t);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].f != t.base) throw FieldMismatch("from_coeffs");
        std::copy(cs[i].c.begin(), cs[i].c.end(), e.c.begin() + i * size_t(t.base->v));
    }
    return e;
}

FieldElement ExtElement::coeff(int i) const {
    require(i >= 0 && i < t->n, "coeff index");
    int v = t->base->v;
    return FieldElement(*t->base, std::vector<i64>(c.begin() + size_t(i) * v, c.begin() + size_t(i + 1) * v));
}

std::vector<FieldElement> ExtElement::coeffs() const {
    std::vector<FieldElement> out;
    out.reserve(size_t(t->n));
    for (int i = 0; i < t->n; ++i) out.push_back(coeff(i));
    return out;
}

bool ExtElement::is_zero() const {
    for (auto x : c)
        if (x) return false;
    return true;
}

bool ExtElement::is_base() const {
    for (size_t i = size_t(t->base->v); i < c.size(); ++i)
        if (c[i]) return false;
    return true;
}

u64 ExtElement::index() const {
    u64 idx = 0;
    for (size_t i = c.size(); i-- > 0;) idx = idx * u64(t->base->p) + u64(c[i]);
    return idx;
}

ExtElement ExtElement::from_index(const TowerSpec& t, u64 idx) {
    auto e = zero(t);
    for (auto& x : e.c) {
        x = i64(idx % u64(t.base->p));
        idx /= u64(t.base->p);
    }
    require(idx == 0, "ExtElement::from_index out of range");
    return e;
}

std::string ExtElement::serial() const {
    std::ostringstream os;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    return os.str();
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
    if (t != o.t) throw FieldMismatch("ExtElement +");
    ExtElement r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = rmod(r.c[i] + o.c[i], t->base->p);
    return r;
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
    if (t != o.t) throw FieldMismatch("ExtElement -");
    ExtElement r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = rmod(r.c[i] - o.c[i], t->base->p);
    return r;
}

ExtElement ExtElement::operator+(const FieldElement& k) const {
    return *this + ExtElement::from_base(*t, k);
}

ExtElement ExtElement::operator-() const {
    ExtElement r = *this;
    for (auto& x : r.c) x = rmod(-x, t->base->p);
    return r;
}

ExtElement ExtElement::operator*(const ExtElement& o) const {
    if (t != o.t) throw FieldMismatch("ExtElement *");
    ExtElement r = ExtElement::zero(*t);
    ext_mul_flat(*t, c.data(), o.c.data(), r.c.data());
    return r;
}

ExtElement ExtElement::inv() const {
    if (is_zero()) throw ZeroElement("ExtElement::inv");
    UPoly<FieldElement> a(coeffs());
    UPoly<FieldElement> m(t->mod);
    auto [g, u, v] = egcd(a, m);
    (void)v;
    require(g.deg() == 0, "ExtElement::inv: gcd not constant");
    UPoly<FieldElement> r = divmod(u, m).second;
    std::vector<FieldElement> cs(r.c.begin(), r.c.end());
    return from_coeffs(*t, cs);
}

ExtElement ExtElement::pow(Int e) const {
    if (e < 0) return inv().pow(-e);
    ExtElement r = one(*t), b = *this;
    while (e > 0) {
        if ((e & 1) != 0) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

bool ExtElement::operator==(const ExtElement& o) const { return t == o.t && c == o.c; }

// ---- field-level operations ----

ExtElement frobenius(const ExtElement& x, i64 k) {
    const TowerSpec& T = *x.t;
    i64 n = T.n;
    k = ((k % n) + n) % n;
    ExtElement r = x;
    ExtElement tmp = ExtElement::zero(T);
    for (i64 i = 0; i < k; ++i) {
        apply_frob_matrix(T, r.c.data(), tmp.c.data());
        std::swap(r.c, tmp.c);
    }
    return r;
}

ExtElement tr_rel(const ExtElement& x, int d) {
    const TowerSpec& T = *x.t;
    if (d < 1 || T.n % d != 0) throw NotADivisor("tr_rel: d must divide n");
    ExtElement acc = x, y = x;
    for (int i = 1; i < T.n / d; ++i) {
        y = frobenius(y, d);
        acc = acc + y;
    }
    require(frobenius(acc, d) == acc, "tr_rel: result not fixed by the subfield Frobenius");
    return acc;
}

ExtElement norm_rel(const ExtElement& x, int d) {
    const TowerSpec& T = *x.t;
    if (d < 1 || T.n % d != 0) throw NotADivisor("norm_rel: d must divide n");
    ExtElement acc = x, y = x;
    for (int i = 1; i < T.n / d; ++i) {
        y = frobenius(y, d);
        acc = acc * y;
    }
    require(frobenius(acc, d) == acc, "norm_rel: result not fixed by the subfield Frobenius");
    return acc;
}

FieldElement tr_abs(const ExtElement& x) {
    const TowerSpec& T = *x.t;
    const int v = T.base->v;
    const auto& row = T.trace_functional();
    if (v == 1) {
        i64 acc = 0;
        for (int i = 0; i < T.n; ++i) acc += x.c[size_t(i)] * row[size_t(i)];
        return FieldElement(*T.base, {rmod(acc, T.base->p)});
    }
    FieldElement acc = FieldElement::zero(*T.base);
    for (int i = 0; i < T.n; ++i) {
        FieldElement ri(*T.base, std::vector<i64>(row.begin() + size_t(i) * v, row.begin() + size_t(i + 1) * v));
        acc = acc + x.coeff(i) * ri;
    }
    return acc;
}

FieldElement norm_abs(const ExtElement& x) {
    ExtElement nm = norm_rel(x, 1);
    require(nm.is_base(), "norm_abs: result not in the base field");
    return nm.coeff(0);
}

u64 mult_order(const ExtElement& x) {
    if (x.is_zero()) throw ZeroElement("mult_order of zero");
    const TowerSpec& T = *x.t;
    const auto& fact = T.order_factorization();
    u64 ord = T.qn_u64 - 1;
    for (auto& pp : fact) {
        for (int i = 0; i < pp.e; ++i) {
            if (x.pow(Int(ord / pp.p)) == ExtElement::one(T))
                ord /= pp.p;
            else
                break;
        }
    }
    return ord;
}

bool is_primitive(const ExtElement& x) {
    if (x.is_zero()) throw ZeroElement("is_primitive of zero");
    const TowerSpec& T = *x.t;
    const auto& fact = T.order_factorization();
    u64 full = T.qn_u64 - 1;
    for (auto& pp : fact)
        if (x.pow(Int(full / pp.p)) == ExtElement::one(T)) return false;
    return true;
}

ExtElement element_of_order(const TowerSpec& t, u64 r) {
    const auto& fact = t.order_factorization();
    (void)fact;
    u64 full = t.qn_u64 - 1;
    if (r == 0 || full % r != 0) throw BadOrder("element_of_order: r does not divide q^n - 1");
    auto rf = factor_u64(r);
    // Deterministic choice: first candidate base (by index) whose
    // ((q^n-1)/r)-th power has exact order r.
    for (u64 idx = 1; idx < (t.qn_small ? t.qn_u64 : u64(1) << 62); ++idx) {
        ExtElement cand = ExtElement::from_index(t, idx);
        ExtElement y = cand.pow(Int(full / r));
        if (y == ExtElement::one(t) && r > 1) continue;
        bool exact = true;
        for (auto& pp : rf)
            if (y.pow(Int(r / pp.p)) == ExtElement::one(t)) {
                exact = false;
                break;
            }
        if (exact) {
            require(y.pow(Int(r)) == ExtElement::one(t), "element_of_order: order check");
            return y;
        }
    }
    throw InternalCheck("element_of_order: exhausted candidates");
}

ExtElement primitive_element(const TowerSpec& t) { return element_of_order(t, t.qn_u64 - 1); }

UPoly<FieldElement> min_poly(const ExtElement& x) {
    const TowerSpec& T = *x.t;
    // Orbit size: least d > 0 with x^(q^d) = x.
    int d = 1;
    ExtElement y = frobenius(x, 1);
    while (y != x) {
        y = frobenius(y, 1);
        ++d;
        require(d <= T.n, "min_poly: Frobenius orbit exceeded n");
    }
    UPoly<ExtElement> acc = UPoly<ExtElement>::one(x);
    ExtElement conj = x;
    for (int i = 0; i < d; ++i) {
        UPoly<ExtElement> lin({-conj, ExtElement::one(T)});
        acc = acc * lin;
        conj = frobenius(conj, 1);
    }
    std::vector<FieldElement> cs;
    for (auto& coefficient : acc.c) {
        require(coefficient.is_base(), "min_poly: coefficient not in the base field");
        cs.push_back(coefficient.coeff(0));
    }
    return UPoly<FieldElement>(cs);
}

ExtElement embed(const ExtElement& x, const TowerSpec& target) {
    if (x.t->base != target.base) throw FieldMismatch("embed: different base fields");
    if (x.t == &target) return x;
    UPoly<FieldElement> mp = min_poly(x);
    if (target.n % mp.deg() != 0)
        throw EmbeddingFailure("embed: minimal polynomial degree does not divide target degree");
    if (!target.qn_small || target.qn_u64 > (u64(1) << 22))
        throw TooLarge("embed: target too large for root scan");
    for (u64 idx = 0; idx < target.qn_u64; ++idx) {
        ExtElement cand = ExtElement::from_index(target, idx);
        ExtElement acc = ExtElement::zero(target);
        for (size_t i = mp.c.size(); i-- > 0;)
            acc = acc * cand + ExtElement::from_base(target, mp.c[i]);
        if (acc.is_zero()) return cand;
    }
    throw EmbeddingFailure("embed: no root found");
}

ExtElement FieldEmbedding::operator()(const ExtElement& x) const {
    if (x.t != src) throw FieldMismatch("embedding applied to an element of another field");
    if (src == dst) return x;
    ExtElement acc = ExtElement::zero(*dst);
    for (i64 i = src->n; i-- > 0;)
        acc = acc * gen_image + ExtElement::from_base(*dst, x.coeff(size_t(i)));
    return acc;
}

FieldEmbedding make_embedding(const TowerSpec& src, const TowerSpec& dst) {
    if (src.base != dst.base) throw FieldMismatch("make_embedding: different base fields");
    if (dst.n % src.n != 0)
        throw EmbeddingFailure("make_embedding: source degree does not divide target degree");
    FieldEmbedding e;
    e.src = &src;
    e.dst = &dst;
    if (&src == &dst) {
        e.gen_image = src.n >= 2 ? ExtElement::gen(src) : ExtElement::one(src);
    } else if (src.n == 1) {
        e.gen_image = ExtElement::one(dst);  // never consulted: elements are constants
    } else {
        e.gen_image = embed(ExtElement::gen(src), dst);
    }
    return e;
}

std::vector<i64> fp_coordinates(const ExtElement& x) { return x.c; }

}  // namespace nbt
