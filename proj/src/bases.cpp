#include "nbt/bases.hpp"

#include <numeric>

#include "nbt/errors.hpp"

namespace nbt {

BasisSet::BasisSet(const TowerSpec& t, std::vector<ExtElement> es)
    : tower(&t), elems(std::move(es)), caches_(std::make_shared<Caches>()) {
    require(i64(elems.size()) == t.n, "basis tuple must have one element per dimension");
    for (const ExtElement& e : elems)
        if (e.t != &t) throw FieldMismatch("basis element from a different field");
}

const Mat<ExtElement>& BasisSet::regular_matrix() const {
    std::lock_guard<std::mutex> lock(caches_->mu);
    if (!caches_->a) {
        size_t n = elems.size();
        auto a = std::make_unique<Mat<ExtElement>>(n, n, ExtElement::zero(*tower));
        for (size_t j = 0; j < n; ++j) {
            ExtElement cur = elems[j];
            for (size_t i = 0; i < n; ++i) {
                (*a)(i, j) = cur;
                cur = frobenius(cur, 1);
            }
        }
        caches_->a = std::move(a);
    }
    return *caches_->a;
}

const Mat<FieldElement>& BasisSet::trace_matrix() const {
    std::lock_guard<std::mutex> lock(caches_->mu);
    if (!caches_->t) {
        size_t n = elems.size();
        auto t = std::make_unique<Mat<FieldElement>>(n, n, FieldElement::zero(*tower->base));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                FieldElement v = tr_abs(elems[i] * elems[j]);
                (*t)(i, j) = v;
                (*t)(j, i) = v;
            }
        caches_->t = std::move(t);
    }
    return *caches_->t;
}

BasisSet power_basis(const TowerSpec& t, const ExtElement& a) {
    std::vector<ExtElement> es;
    ExtElement cur = ExtElement::one(t);
    for (i64 i = 0; i < t.n; ++i) {
        es.push_back(cur);
        cur = cur * a;
    }
    return BasisSet(t, std::move(es));
}

BasisSet conjugate_set(const TowerSpec& t, const ExtElement& a) {
    std::vector<ExtElement> es;
    ExtElement cur = a;
    for (i64 i = 0; i < t.n; ++i) {
        es.push_back(cur);
        cur = frobenius(cur, 1);
    }
    return BasisSet(t, std::move(es));
}

namespace {

// F_q-rank of the n x n matrix whose rows are the coordinate vectors of the
// tuple's elements with respect to the tower's generator basis.
size_t coordinate_rank(const BasisSet& s) {
    size_t n = s.elems.size();
    Mat<FieldElement> m(n, n, FieldElement::zero(*s.tower->base));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = s.elems[i].coeff(j);
    return rank(m);
}

}  // namespace

bool is_basis(const BasisSet& s) {
    bool by_regular = !det(s.regular_matrix()).is_zero();
    bool by_trace = !det(s.trace_matrix()).is_zero();
    bool by_rank = coordinate_rank(s) == s.elems.size();
    require(by_regular == by_trace && by_trace == by_rank,
            "basis criteria disagree (regular/trace/rank)");
    return by_regular;
}

FieldElement discriminant(const BasisSet& s) { return det(s.trace_matrix()); }

FieldElement power_discriminant(const ExtElement& a) {
    const TowerSpec& t = *a.t;
    i64 n = t.n;
    BasisSet pb = power_basis(t, a);
    FieldElement by_trace = discriminant(pb);

    // squared Vandermonde product over the conjugates
    std::vector<ExtElement> conj;
    ExtElement cur = a;
    for (i64 i = 0; i < n; ++i) {
        conj.push_back(cur);
        cur = frobenius(cur, 1);
    }
    ExtElement prod = ExtElement::one(t);
    for (i64 i = 0; i < n; ++i)
        for (i64 j = i + 1; j < n; ++j) {
            ExtElement d = conj[size_t(i)] - conj[size_t(j)];
            prod = prod * d * d;
        }
    require(prod.is_base(), "squared conjugate-difference product must lie in the base field");
    FieldElement by_product = prod.coeff(0);
    require(by_trace == by_product, "power discriminant: trace and product forms disagree");

    // signed norm of f'(a), applicable when a generates the whole field
    UPoly<FieldElement> f = min_poly(a);
    if (f.deg() == int(n)) {
        ExtElement fpa = eval(derivative(f), a);
        FieldElement by_norm = norm_abs(fpa);
        if (((n * (n - 1) / 2) % 2) != 0) by_norm = -by_norm;
        require(by_trace == by_norm, "power discriminant: trace and norm forms disagree");
    }
    return by_trace;
}

DualPair dual_basis(const BasisSet& s) {
    const TowerSpec& t = *s.tower;
    size_t n = s.elems.size();
    Mat<FieldElement> tinv = inverse(s.trace_matrix());  // NotABasis when singular
    std::vector<ExtElement> duals;
    for (size_t j = 0; j < n; ++j) {
        ExtElement b = ExtElement::zero(t);
        for (size_t k = 0; k < n; ++k) b = b + s.elems[k] * ExtElement::from_base(t, tinv(k, j));
        duals.push_back(b);
    }
    BasisSet d(t, std::move(duals));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FieldElement tr = tr_abs(s.elems[i] * d.elems[j]);
            bool want_one = i == j;
            require(tr == (want_one ? FieldElement::one(*t.base) : FieldElement::zero(*t.base)),
                    "dual basis verification failed");
        }
    return DualPair{s, d};
}

BasisSet power_dual_basis(const UPoly<FieldElement>& f, const ExtElement& a) {
    const TowerSpec& t = *a.t;
    i64 n = t.n;
    if (!f.is_monic() || !is_irreducible_fq(f)) throw NotIrreducible("power_dual_basis");
    require(f.deg() == int(n), "minimal polynomial degree must match the extension degree");

    // evaluate f at a (must vanish) while peeling off the quotient by (x - a):
    // with f = x^n + a_{n-1} x^{n-1} + ... + a_0, the quotient coefficients
    // satisfy b_{n-1} = 1 and b_{i-1} = a_i + a * b_i.
    std::vector<ExtElement> b(size_t(n), ExtElement::zero(t));
    b[size_t(n - 1)] = ExtElement::one(t);
    for (i64 i = n - 1; i >= 1; --i)
        b[size_t(i - 1)] = ExtElement::from_base(t, f.coeff(size_t(i))) + a * b[size_t(i)];
    ExtElement back = -(a * b[0]);
    require(back == ExtElement::from_base(t, f.coeff(0)), "a is not a root of f");

    ExtElement fpa = eval(derivative(f), a);
    require(!fpa.is_zero(), "derivative vanishes at the root");
    ExtElement scale = fpa.inv();

    std::vector<ExtElement> duals;
    for (i64 i = 0; i < n; ++i) duals.push_back(b[size_t(i)] * scale);
    BasisSet result(t, std::move(duals));

    DualPair via_solve = dual_basis(power_basis(t, a));
    for (i64 i = 0; i < n; ++i)
        require(result.elems[size_t(i)] == via_solve.dual.elems[size_t(i)],
                "quotient-coefficient dual disagrees with the solved dual");
    return result;
}

std::vector<i64> lift_permutation(i64 n, i64 k) {
    std::vector<i64> pi;
    for (i64 i = 0; i < n; ++i) pi.push_back((i * k) % n);
    return pi;
}

namespace {

int permutation_sign(const std::vector<i64>& pi) {
    int sign = 1;
    for (size_t i = 0; i < pi.size(); ++i)
        for (size_t j = i + 1; j < pi.size(); ++j)
            if (pi[i] > pi[j]) sign = -sign;
    return sign;
}

}  // namespace

bool lift_basis_check(const BasisSet& s, i64 k) {
    const TowerSpec& t = *s.tower;
    i64 n = t.n;
    if (std::gcd(k, n) != 1) throw NotCoprime("lift_basis_check: k must be coprime to n");
    const TowerSpec& big = get_tower(*t.base, n * k);
    FieldEmbedding emb = make_embedding(t, big);

    std::vector<ExtElement> img;
    for (const ExtElement& e : s.elems) img.push_back(emb(e));

    // regular matrix over the raised ground field F_{q^k}
    size_t nn = size_t(n);
    Mat<ExtElement> ak(nn, nn, ExtElement::zero(big));
    Mat<ExtElement> a0(nn, nn, ExtElement::zero(big));
    for (i64 j = 0; j < n; ++j)
        for (i64 i = 0; i < n; ++i) {
            ak(size_t(i), size_t(j)) = frobenius(img[size_t(j)], i * k);
            a0(size_t(i), size_t(j)) = frobenius(img[size_t(j)], i);
        }
    ExtElement dk = det(ak), d0 = det(a0);
    // row i of the lifted matrix is row i*k mod n of the original
    int sign = permutation_sign(lift_permutation(n, k));
    require(dk == (sign == 1 ? d0 : -d0), "lifted regular matrix is not the expected row permutation");
    return !dk.is_zero();
}

BasisSet iterated_basis(const BasisSet& a, const BasisSet& b) {
    const TowerSpec& ta = *a.tower;
    const TowerSpec& tb = *b.tower;
    if (ta.base != tb.base) throw FieldMismatch("iterated_basis: different base fields");
    i64 r = ta.n, s = tb.n;
    const TowerSpec& big = get_tower(*ta.base, r * s);
    FieldEmbedding ea = make_embedding(ta, big);
    FieldEmbedding eb = make_embedding(tb, big);
    std::vector<ExtElement> out(size_t(r * s), ExtElement::zero(big));
    for (i64 u = 0; u < s; ++u)
        for (i64 i = 0; i < r; ++i) out[size_t(u * r + i)] = ea(a.elems[size_t(i)]) * eb(b.elems[size_t(u)]);
    return BasisSet(big, std::move(out));
}

DualPair iterated_dual_basis(const DualPair& a, const DualPair& b) {
    i64 r = a.basis.tower->n, s = b.basis.tower->n;
    if (std::gcd(r, s) != 1) throw NotCoprime("iterated_dual_basis: degrees must be coprime");
    BasisSet basis = iterated_basis(a.basis, b.basis);
    BasisSet dual = iterated_basis(a.dual, b.dual);
    const TowerSpec& big = *basis.tower;
    size_t n = size_t(r * s);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FieldElement tr = tr_abs(basis.elems[i] * dual.elems[j]);
            bool want_one = i == j;
            require(tr == (want_one ? FieldElement::one(*big.base) : FieldElement::zero(*big.base)),
                    "iterated dual verification failed");
        }
    return DualPair{basis, dual};
}

Int count_bases(i64 n, const FieldSpec& field) {
    require(n >= 1, "count_bases needs n >= 1");
    Int qn = int_pow(field.q, u64(n));
    Int total = 1;
    for (i64 i = 0; i < n; ++i) total *= qn - int_pow(field.q, u64(i));
    return total;
}

Int count_selfdual_bases(i64 n, const FieldSpec& field) {
    require(n >= 1, "count_selfdual_bases needs n >= 1");
    bool q_even = field.p == 2;
    if (!q_even && n % 2 == 0) return 0;
    Int total = 1;
    for (i64 i = 1; i < n; ++i) {
        Int e = (i % 2 == 0) ? 1 : 0;
        total *= int_pow(field.q, u64(i)) - e;
    }
    if (!q_even) total *= 2;  // q and n both odd
    return total;
}

std::vector<i64> weak_selfdual_permutation(const UPoly<FieldElement>& f) {
    i64 n = f.deg();
    if (n < 2 || !f.is_monic()) throw WrongShape("weak_selfdual_permutation: need a monic polynomial of degree >= 2");
    // admissible shape: x^n - c x^k - d with at most one interior term
    i64 k = 0;
    for (i64 i = 1; i < n; ++i)
        if (!f.coeff(size_t(i)).is_zero()) {
            if (k != 0) throw WrongShape("more than one interior term");
            k = i;
        }
    if (f.coeff(0).is_zero()) throw WrongShape("zero constant term");
    if (!is_irreducible_fq(f)) throw NotIrreducible("weak_selfdual_permutation");

    std::vector<i64> pi;
    for (i64 i = 0; i < n; ++i) {
        i64 image = (k != 0) ? (k - 1 - i) : (-1 - i);
        pi.push_back(((image % n) + n) % n);
    }
    return pi;
}

}  // namespace nbt
