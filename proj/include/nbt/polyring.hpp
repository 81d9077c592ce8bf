#pragma once
#include "nbt/ff.hpp"

namespace nbt {

enum class FactorKind { One, MinusOne, SelfReciprocal, PairFirst, PairSecond };

struct XnFactor {
    UPoly<FieldElement> f;
    int multiplicity;  // the p-part of n
    FactorKind kind;
    int mate = -1;  // index of the reciprocal mate for paired factors
};

/// Ordered factorization of x^n - 1 over F_q: (x-1) first, (x+1) next when
/// present, then self-reciprocal factors by degree, then reciprocal pairs
/// (g, g*) with g lexicographically smaller.  The order pins down the
/// parameters consumed by the basis-counting formulas.
struct XnFactorization {
    i64 n;
    const FieldSpec* field;
    i64 m;   // prime-to-p part of n
    int pe;  // p-part of n = common multiplicity
    std::vector<XnFactor> factors;
};

XnFactorization factor_xn_minus_1(i64 n, const FieldSpec& field);

/// Count of units in F_q[x]/(x^n - 1), from the factorization.
Int poly_phi(const XnFactorization& fact);

/// Count of monic irreducible polynomials of degree n over F_q:
/// (1/n) * sum over d | n of mu(d) q^{n/d}.
Int irreducible_count(i64 n, const FieldSpec& field);

/// Distinct-degree slices of a squarefree monic f over F_q: pairs
/// (degree d, number of irreducible factors of degree d), ascending d.
std::vector<std::pair<int, int>> ddf_slices(const UPoly<FieldElement>& f);

/// Number of irreducible factors of a squarefree monic f over F_q.
int count_irreducible_factors(const UPoly<FieldElement>& f);

/// Lexicographic key of a polynomial over F_q: element indices, low degree
/// first.  Used wherever a deterministic polynomial order is needed.
std::vector<u64> poly_serial_key(const UPoly<FieldElement>& f);

/// q-cyclotomic cosets modulo m (orbits of multiplication by q on Z_m),
/// each sorted, ordered by smallest member.
std::vector<std::vector<i64>> cyclotomic_cosets(i64 m, const Int& q);

}  // namespace nbt
