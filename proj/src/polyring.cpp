#include "nbt/polyring.hpp"

#include <algorithm>

namespace nbt {

std::vector<std::vector<i64>> cyclotomic_cosets(i64 m, const Int& q) {
    std::vector<char> seen(size_t(m), 0);
    i64 qm = i64(q % m);
    std::vector<std::vector<i64>> cosets;
    for (i64 a = 0; a < m; ++a) {
        if (seen[size_t(a)]) continue;
        std::vector<i64> orbit;
        i64 x = a;
        do {
            seen[size_t(x)] = 1;
            orbit.push_back(x);
            x = x * qm % m;
        } while (x != a);
        std::sort(orbit.begin(), orbit.end());
        cosets.push_back(std::move(orbit));
    }
    return cosets;
}

std::vector<u64> poly_serial_key(const UPoly<FieldElement>& f) {
    std::vector<u64> key;
    key.reserve(f.c.size());
    for (auto& x : f.c) key.push_back(x.index());
    return key;
}

XnFactorization factor_xn_minus_1(i64 n, const FieldSpec& field) {
    require(n >= 1, "factor_xn_minus_1: n >= 1");
    i64 p = field.p;
    i64 m = n;
    int pe = 1;
    while (m % p == 0) {
        m /= p;
        pe = int(pe * p);
    }

    auto cosets = cyclotomic_cosets(m, field.q);

    // All m-th roots of unity live in F_{q^s}, s = ord of q mod m; one shared
    // root theta keeps the factors consistent across cosets.
    i64 s = 1;
    {
        i64 acc = i64(field.q % m);
        while (acc != 1 % m) {
            acc = acc * i64(field.q % m) % m;
            ++s;
        }
    }
    const TowerSpec& splitting = get_tower(field, int(std::max<i64>(s, 1)));
    ExtElement theta = m == 1 ? ExtElement::one(splitting) : element_of_order(splitting, u64(m));

    struct Raw {
        UPoly<FieldElement> f;
        std::vector<u64> key;
    };
    std::vector<Raw> raw;
    for (auto& coset : cosets) {
        UPoly<ExtElement> acc = UPoly<ExtElement>::one(theta);
        for (i64 a : coset) {
            UPoly<ExtElement> lin({-theta.pow(Int(a)), ExtElement::one(splitting)});
            acc = acc * lin;
        }
        std::vector<FieldElement> cs;
        for (auto& coefficient : acc.c) {
            require(coefficient.is_base(), "coset factor has a coefficient outside F_q");
            cs.push_back(coefficient.coeff(0));
        }
        UPoly<FieldElement> f(cs);
        raw.push_back({f, poly_serial_key(f)});
    }

    // Verify the product before ordering (multiplicities applied afterwards).
    {
        UPoly<FieldElement> prod = UPoly<FieldElement>::one(FieldElement::zero(field));
        for (auto& r : raw) prod = prod * r.f;
        UPoly<FieldElement> expect =
            UPoly<FieldElement>::xpow(FieldElement::zero(field), size_t(m)) -
            UPoly<FieldElement>::one(FieldElement::zero(field));
        require(prod == expect, "coset factors do not multiply to x^m - 1");
    }

    UPoly<FieldElement> xm1({-FieldElement::one(field), FieldElement::one(field)});
    UPoly<FieldElement> xp1({FieldElement::one(field), FieldElement::one(field)});

    XnFactorization out{n, &field, m, pe, {}};
    std::vector<int> used(raw.size(), 0);

    auto push = [&](const UPoly<FieldElement>& f, FactorKind k) {
        out.factors.push_back({f, pe, k, -1});
    };

    for (size_t i = 0; i < raw.size(); ++i)
        if (raw[i].f == xm1) {
            push(raw[i].f, FactorKind::One);
            used[i] = 1;
        }
    for (size_t i = 0; i < raw.size(); ++i)
        if (!used[i] && raw[i].f == xp1 && field.p != 2) {
            push(raw[i].f, FactorKind::MinusOne);
            used[i] = 1;
        }

    std::vector<size_t> self_idx, pair_idx;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (used[i]) continue;
        UPoly<FieldElement> rec = make_monic(reciprocal(raw[i].f));
        if (rec == raw[i].f)
            self_idx.push_back(i);
        else
            pair_idx.push_back(i);
    }
    auto by_deg_key = [&](size_t a, size_t b) {
        if (raw[a].f.deg() != raw[b].f.deg()) return raw[a].f.deg() < raw[b].f.deg();
        return raw[a].key < raw[b].key;
    };
    std::sort(self_idx.begin(), self_idx.end(), by_deg_key);
    for (size_t i : self_idx) push(raw[i].f, FactorKind::SelfReciprocal);

    std::sort(pair_idx.begin(), pair_idx.end(), by_deg_key);
    std::vector<int> done(raw.size(), 0);
    for (size_t i : pair_idx) {
        if (done[i]) continue;
        UPoly<FieldElement> rec = make_monic(reciprocal(raw[i].f));
        size_t j = raw.size();
        for (size_t k : pair_idx)
            if (!done[k] && raw[k].f == rec) {
                j = k;
                break;
            }
        require(j < raw.size(), "reciprocal mate missing from factor list");
        done[i] = done[j] = 1;
        int first = int(out.factors.size());
        push(raw[i].f, FactorKind::PairFirst);
        push(raw[j].f, FactorKind::PairSecond);
        out.factors[size_t(first)].mate = first + 1;
        out.factors[size_t(first) + 1].mate = first;
    }

    require(out.factors.size() == raw.size(), "factor ordering lost a factor");
    return out;
}

Int poly_phi(const XnFactorization& fact) {
    Int phi = 1;
    const Int& q = fact.field->q;
    for (auto& fac : fact.factors) {
        u64 d = u64(fac.f.deg());
        phi *= int_pow(q, d * u64(fac.multiplicity)) - int_pow(q, d * u64(fac.multiplicity - 1));
    }
    return phi;
}

Int irreducible_count(i64 n, const FieldSpec& field) {
    Int acc = 0;
    for (u64 d : divisors_u64(u64(n))) {
        acc += Int(mobius(d)) * int_pow(field.q, u64(n) / d);
    }
    require(acc % n == 0, "irreducible_count: total not divisible by n");
    return acc / n;
}

std::vector<std::pair<int, int>> ddf_slices(const UPoly<FieldElement>& f) {
    require(f.deg() >= 1, "ddf_slices: degree >= 1");
    const FieldSpec& s = *f.c[0].f;
    UPoly<FieldElement> rem = make_monic(f);
    UPoly<FieldElement> der = derivative(rem);
    require(!der.is_zero() && gcd_monic(rem, der).deg() == 0, "ddf_slices requires a squarefree polynomial");
    UPoly<FieldElement> x = UPoly<FieldElement>::x(f.c[0]);
    UPoly<FieldElement> xq = divmod(x, rem).second;
    std::vector<std::pair<int, int>> slices;
    int d = 0;
    while (rem.deg() >= 1) {
        ++d;
        if (2 * d > rem.deg()) {
            slices.emplace_back(rem.deg(), 1);  // the leftover is irreducible
            break;
        }
        xq = pow_mod(xq, s.q, rem);
        UPoly<FieldElement> g = gcd_monic(xq - x, rem);
        if (g.deg() > 0) {
            slices.emplace_back(d, g.deg() / d);
            rem = div_exact(rem, g);
            xq = divmod(xq, rem).second;
        }
    }
    return slices;
}

int count_irreducible_factors(const UPoly<FieldElement>& f) {
    int total = 0;
    for (auto& [d, cnt] : ddf_slices(f)) total += cnt;
    return total;
}

}  // namespace nbt
